#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "meridian/errors.hpp"
#include "meridian/formula_audit.hpp"
#include "meridian/numerics.hpp"
#include "meridian/scene.hpp"
#include "meridian/weingarten.hpp"

namespace {

using namespace meridian;

std::string fmt17(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

struct SceneCli {
    std::string curve, profile, urange, vrange;
    int nu = 41, nv = 41;
    double tol_kappa = 1e-6, tol_alpha = 1e-6, tol_ode = 1e-7;
    int sign = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--curve", curve, "curve spec: great | small:<theta0> | spiral:<slope>")
            ->required();
        cmd->add_option("--profile", profile,
                        "profile spec: line:<beta>[,<f0>[,<g0>]] | circle:<a>,<c1>,<c2> | "
                        "cosh:<A>,<b>,<c> | fromf:<expr>")
            ->required();
        cmd->add_option("--u", urange, "u range a:b")->required();
        cmd->add_option("--v", vrange, "v range a:b")->required();
        cmd->add_option("--nu", nu, "grid points in u (interior)");
        cmd->add_option("--nv", nv, "grid points in v (interior)");
        cmd->add_option("--tol-kappa", tol_kappa, "kappa zero/constancy tolerance");
        cmd->add_option("--tol-alpha", tol_alpha, "kappa_alpha zero/constancy tolerance");
        cmd->add_option("--tol-ode", tol_ode, "|f f''' - f' f''| tolerance");
        cmd->add_option("--sign", sign, "branch sign of g' for fromf profiles (+1 or -1)");
    }

    SceneSpec spec() const {
        SceneSpec s;
        s.curve = curve;
        s.profile = profile;
        parse_range(urange, s.u0, s.u1);
        parse_range(vrange, s.v0, s.v1);
        s.grid.nu = nu;
        s.grid.nv = nv;
        s.tol.tol_kappa = tol_kappa;
        s.tol.tol_alpha = tol_alpha;
        s.tol.tol_ode = tol_ode;
        s.sign = sign;
        return s;
    }
};

int run_classify(const SceneCli& cli) {
    const SceneSpec spec = cli.spec();
    const MeridianSurface m = build_scene(spec);
    const WeingartenVerdict verdict = classify(m, spec.grid, spec.tol);
    std::cout << to_json(verdict).dump(2) << "\n";
    switch (verdict.tag) {
        case CaseTag::NotWeingarten: return 2;
        case CaseTag::Indeterminate: return 3;
        default: return 0;
    }
}

int run_curvature(const SceneCli& cli, const std::string& out_path) {
    const SceneSpec spec = cli.spec();
    const MeridianSurface m = build_scene(spec);
    const ResidualGrid rg = residual(m, spec.grid);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open '" << out_path << "' for writing\n";
        return 1;
    }
    out << "u,v,K,H,H1,H2,kappa,kappa_alpha,residual\n";
    for (std::size_t i = 0; i < rg.us.size(); ++i) {
        for (std::size_t j = 0; j < rg.vs.size(); ++j) {
            const double u = rg.us[i], v = rg.vs[j];
            const MeridianCurvature c = m.closed_curvature(u, v);
            out << fmt17(u) << ',' << fmt17(v) << ',' << fmt17(c.K) << ',' << fmt17(c.H)
                << ',' << fmt17(c.H1) << ',' << fmt17(c.H2) << ',' << fmt17(c.kappa) << ','
                << fmt17(c.kappa_alpha) << ',' << fmt17(rg.at(i, j)) << "\n";
        }
    }
    return out.good() ? 0 : 1;
}

int run_mesh(const SceneCli& cli, const std::string& out_path, int project) {
    if (project < 1 || project > 4) {
        std::cerr << "--project must be 1, 2, 3 or 4\n";
        return 1;
    }
    const SceneSpec spec = cli.spec();
    const MeridianSurface m = build_scene(spec);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open '" << out_path << "' for writing\n";
        return 1;
    }
    out << "# meridian surface mesh, dropped coordinate: x" << project << "\n";
    const auto us = linspace_closed(spec.u0, spec.u1, spec.grid.nu);
    const auto vs = linspace_closed(spec.v0, spec.v1, spec.grid.nv);
    for (double u : us) {
        for (double v : vs) {
            const Vec4 p = m.embed(u, v);
            out << 'v';
            for (int k = 0; k < 4; ++k)
                if (k != project - 1) out << ' ' << fmt17(p[static_cast<std::size_t>(k)]);
            out << "\n";
        }
    }
    const std::size_t nv = vs.size();
    for (std::size_t i = 0; i + 1 < us.size(); ++i) {
        for (std::size_t j = 0; j + 1 < nv; ++j) {
            const std::size_t base = i * nv + j + 1;
            out << "f " << base << ' ' << base + 1 << ' ' << base + nv + 1 << ' ' << base + nv
                << "\n";
        }
    }
    return out.good() ? 0 : 1;
}

void print_audits() {
    const PrintedCircleAudit ca = audit_printed_circle_g(1.0, 0.0, 0.3);
    const PrintedCoshAudit ka = audit_printed_cosh_g(0.5, 2.0, 0.0, -1.0, 1.0, 0.4);
    std::cout << "audit of the published g formulas (informational)\n";
    std::cout << "  circle family, a=1 c1=0, u=0.3:\n";
    std::cout << "    printed g' (finite difference)    = " << fmt17(ca.printed_gprime) << "\n";
    std::cout << "    |f'^2 + g'^2 - 1|                 = " << fmt17(ca.constraint_residual)
              << (ca.satisfies_constraint ? "  (satisfies unit speed)\n"
                                          : "  (violates unit speed)\n");
    std::cout << "  cosh family, A=0.5 b=2 c=0, u in [-1,1]:\n";
    std::cout << "    max |radical - g'|                = " << fmt17(ka.max_radical_vs_gprime)
              << (ka.matches_gprime ? "  (the radical is the slope g')\n" : "\n");
    std::cout << "    max |radical - g|                 = " << fmt17(ka.max_radical_vs_g)
              << (ka.matches_g ? "\n" : "  (the radical is not g itself)\n");
    std::cout << "    at u=0.4: radical = " << fmt17(ka.radical_at_sample)
              << ", g' = " << fmt17(ka.gprime_at_sample) << ", g = " << fmt17(ka.g_at_sample)
              << "\n";
}

int run_verify(const std::string& family, const FamilyParams& params, const GridSpec& grid,
               const std::string& urange, const std::string& vrange) {
    CaseTag tag;
    if (family == "i") tag = CaseTag::PlanarCaseI;
    else if (family == "iia") tag = CaseTag::RuledE3_IIa;
    else if (family == "iib") tag = CaseTag::CircleFamily_IIb;
    else if (family == "iiia") tag = CaseTag::RuledE4_IIIa;
    else if (family == "iiib") tag = CaseTag::CoshFamily_IIIb;
    else {
        std::cerr << "--family must be one of i, iia, iib, iiia, iiib\n";
        return 1;
    }

    FamilyReport report;
    if (!urange.empty() || !vrange.empty()) {
        if (urange.empty() || vrange.empty()) {
            std::cerr << "--u and --v must be given together\n";
            return 1;
        }
        double u0, u1, v0, v1;
        parse_range(urange, u0, u1);
        parse_range(vrange, v0, v1);
        report = verify_family(tag, params, grid, u0, u1, v0, v1);
    } else {
        report = verify_family(tag, params, grid);
    }

    std::cout << "family " << to_string(tag) << "\n";
    for (const FamilyCheck& c : report.checks) {
        std::cout << "  " << c.name << " = " << fmt17(c.value) << "  (bound " << fmt17(c.bound)
                  << ")  " << (c.pass ? "PASS" : "FAIL") << "\n";
    }
    std::cout << "  roundtrip classification = " << to_string(report.roundtrip) << "  "
              << (report.roundtrip == tag ? "PASS" : "FAIL") << "\n";
    std::cout << (report.passed ? "VERIFY PASS" : "VERIFY FAIL") << "\n\n";
    print_audits();
    std::cout << "\n" << to_json(report).dump(2) << "\n";
    return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"meridian surfaces in E^4: curvature, Weingarten classification, meshes"};
    app.require_subcommand(1);

    SceneCli classify_cli, curvature_cli, mesh_cli;
    std::string curvature_out, mesh_out;
    int mesh_project = 3;

    CLI::App* cmd_classify = app.add_subcommand("classify", "classify a surface");
    classify_cli.attach(cmd_classify);

    CLI::App* cmd_curvature =
        app.add_subcommand("curvature", "export a curvature grid as CSV");
    curvature_cli.attach(cmd_curvature);
    cmd_curvature->add_option("--out", curvature_out, "output CSV path")->required();

    CLI::App* cmd_mesh = app.add_subcommand("mesh", "export the embedding as an OBJ mesh");
    mesh_cli.attach(cmd_mesh);
    cmd_mesh->add_option("--out", mesh_out, "output OBJ path")->required();
    cmd_mesh->add_option("--project", mesh_project, "E^4 coordinate to drop (1-4)");

    std::string family, verify_u, verify_v;
    FamilyParams params;
    GridSpec verify_grid;
    CLI::App* cmd_verify = app.add_subcommand("verify", "verify a solution family");
    cmd_verify->add_option("--family", family, "i | iia | iib | iiia | iiib")->required();
    cmd_verify->add_option("--a", params.a, "circle family curvature a");
    cmd_verify->add_option("--c1", params.c1, "circle family phase c1");
    cmd_verify->add_option("--c2", params.c2, "circle family offset c2");
    cmd_verify->add_option("--A", params.A, "cosh family amplitude A");
    cmd_verify->add_option("--b", params.b, "cosh family width b");
    cmd_verify->add_option("--c", params.c, "cosh family shift c");
    cmd_verify->add_option("--nu", verify_grid.nu, "grid points in u");
    cmd_verify->add_option("--nv", verify_grid.nv, "grid points in v");
    cmd_verify->add_option("--u", verify_u, "u range a:b (default per family)");
    cmd_verify->add_option("--v", verify_v, "v range a:b (default per family)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cmd_classify->parsed()) return run_classify(classify_cli);
        if (cmd_curvature->parsed()) return run_curvature(curvature_cli, curvature_out);
        if (cmd_mesh->parsed()) return run_mesh(mesh_cli, mesh_out, mesh_project);
        if (cmd_verify->parsed())
            return run_verify(family, params, verify_grid, verify_u, verify_v);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

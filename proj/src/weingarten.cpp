#include "meridian/weingarten.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "meridian/errors.hpp"
#include "meridian/numerics.hpp"

namespace meridian {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::PlanarCaseI: return "PlanarCaseI";
        case CaseTag::RuledE3_IIa: return "RuledE3_IIa";
        case CaseTag::CircleFamily_IIb: return "CircleFamily_IIb";
        case CaseTag::RuledE4_IIIa: return "RuledE4_IIIa";
        case CaseTag::CoshFamily_IIIb: return "CoshFamily_IIIb";
        case CaseTag::NotWeingarten: return "NotWeingarten";
        case CaseTag::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

ResidualGrid residual(const MeridianSurface& m, const GridSpec& grid) {
    ResidualGrid out;
    out.us = linspace_interior(m.u_lo(), m.u_hi(), grid.nu);
    out.vs = linspace_interior(m.v_lo(), m.v_hi(), grid.nv);
    const std::size_t nu = out.us.size(), nv = out.vs.size();
    out.phi.assign(nu * nv, 0.0);
    out.phi_fd.assign(nu * nv, 0.0);

    for (std::size_t i = 0; i < nu; ++i) {
        const double u = out.us[i];
        for (std::size_t j = 0; j < nv; ++j) {
            const double v = out.vs[j];
            const std::size_t idx = i * nv + j;
            double p;
            try {
                p = m.phi_analytic(u, v);
            } catch (const MinimalPoint&) {
                out.minimal_points.push_back(idx);
                continue;
            }
            const double Ku = fd_derivative(
                [&](double uu) { return m.closed_curvature(uu, v).K; }, u, 1,
                m.u_lo(), m.u_hi());
            const double Kv = fd_derivative(
                [&](double vv) { return m.closed_curvature(u, vv).K; }, v, 1,
                m.v_lo(), m.v_hi());
            const double Hu = fd_derivative(
                [&](double uu) { return m.closed_curvature(uu, v).H; }, u, 1,
                m.u_lo(), m.u_hi());
            const double Hv = fd_derivative(
                [&](double vv) { return m.closed_curvature(u, vv).H; }, v, 1,
                m.v_lo(), m.v_hi());
            const double pfd = Ku * Hv - Kv * Hu;

            out.phi[idx] = p;
            out.phi_fd[idx] = pfd;
            out.max_path_disagreement = std::max(out.max_path_disagreement, std::fabs(p - pfd));
            if (std::fabs(p) > out.max_abs_phi) {
                out.max_abs_phi = std::fabs(p);
                out.argmax_u = u;
                out.argmax_v = v;
            }
        }
    }
    return out;
}

namespace {

enum class Decide { Pass, Fail, Ambiguous };

/// A comparison is decisive only a factor of 10 away from the tolerance.
Decide decide(double value, double tol) {
    if (value <= 0.1 * tol) return Decide::Pass;
    if (value >= 10.0 * tol) return Decide::Fail;
    return Decide::Ambiguous;
}

CaseTag decide_tag(const Evidence& e, const Tolerances& tol) {
    switch (decide(e.max_kappa, tol.tol_kappa)) {
        case Decide::Pass: return CaseTag::PlanarCaseI;
        case Decide::Ambiguous: return CaseTag::Indeterminate;
        case Decide::Fail: break;
    }
    switch (decide(e.std_kappa, tol.tol_kappa)) {
        case Decide::Ambiguous: return CaseTag::Indeterminate;
        case Decide::Pass: {
            // kappa constant and nonzero: ruled over a circle, the circle
            // family, or no case at all.
            switch (decide(e.max_kappa_alpha, tol.tol_alpha)) {
                case Decide::Pass: return CaseTag::RuledE3_IIa;
                case Decide::Ambiguous: return CaseTag::Indeterminate;
                case Decide::Fail: break;
            }
            switch (decide(e.std_kappa_alpha, tol.tol_alpha)) {
                case Decide::Pass: return CaseTag::CircleFamily_IIb;
                case Decide::Ambiguous: return CaseTag::Indeterminate;
                case Decide::Fail: return CaseTag::NotWeingarten;
            }
            return CaseTag::Indeterminate;
        }
        case Decide::Fail: break;
    }
    // kappa genuinely non-constant: straight-line or cosh profile.
    switch (decide(e.max_f2, tol.tol_alpha)) {
        case Decide::Pass: return CaseTag::RuledE4_IIIa;
        case Decide::Ambiguous: return CaseTag::Indeterminate;
        case Decide::Fail: break;
    }
    switch (decide(e.max_ode, tol.tol_ode)) {
        case Decide::Pass: return CaseTag::CoshFamily_IIIb;
        case Decide::Ambiguous: return CaseTag::Indeterminate;
        case Decide::Fail: return CaseTag::NotWeingarten;
    }
    return CaseTag::Indeterminate;
}

}  // namespace

WeingartenVerdict classify(const MeridianSurface& m, const GridSpec& grid,
                           const Tolerances& tol) {
    WeingartenVerdict out;
    out.tolerances = tol;
    out.grid = grid;

    const auto us = linspace_interior(m.u_lo(), m.u_hi(), grid.nu);
    const auto vs = linspace_interior(m.v_lo(), m.v_hi(), grid.nv);

    std::vector<double> kappas;
    kappas.reserve(vs.size());
    for (double v : vs) kappas.push_back(m.curve().frenet(v).kappa);

    std::vector<double> alphas, f2s, odes;
    alphas.reserve(us.size());
    f2s.reserve(us.size());
    odes.reserve(us.size());
    for (double u : us) {
        const ProfileSample s = m.profile().sample(u);
        alphas.push_back(s.f1 * s.g2 - s.g1 * s.f2);
        f2s.push_back(s.f2);
        odes.push_back(s.f * s.f3 - s.f1 * s.f2);
    }

    Evidence& e = out.evidence;
    e.max_kappa = max_abs(kappas);
    e.std_kappa = sample_std(kappas);
    e.max_kappa_alpha = max_abs(alphas);
    e.std_kappa_alpha = sample_std(alphas);
    e.max_f2 = max_abs(f2s);
    e.max_ode = max_abs(odes);
    e.max_residual = residual(m, grid).max_abs_phi;

    out.tag = decide_tag(e, tol);
    return out;
}

namespace {

struct CanonicalScene {
    MeridianSurface surface;
    double family_constant = 0.0;  // a for II(b), -1/b^2 for III(b)
};

MeridianSurface build_family(CaseTag tag, const FamilyParams& p,
                             double u0, double u1, double v0, double v1) {
    switch (tag) {
        case CaseTag::PlanarCaseI:
            return {SphericalCurve::great_circle(),
                    Profile::circle_arc(p.a, p.c1, p.c2, u0, u1), u0, u1, v0, v1};
        case CaseTag::RuledE3_IIa:
            return {SphericalCurve::small_circle(3.14159265358979323846 / 4.0),
                    Profile::line(3.14159265358979323846 / 4.0, 1.0, 0.0, u0, u1),
                    u0, u1, v0, v1};
        case CaseTag::CircleFamily_IIb:
            return {SphericalCurve::small_circle(3.14159265358979323846 / 4.0),
                    Profile::circle_arc(p.a, p.c1, p.c2, u0, u1), u0, u1, v0, v1};
        case CaseTag::RuledE4_IIIa:
            return {SphericalCurve::spiral(0.2),
                    Profile::line(3.14159265358979323846 / 4.0, 1.0, 0.0, u0, u1),
                    u0, u1, v0, v1};
        case CaseTag::CoshFamily_IIIb:
            return {SphericalCurve::spiral(0.2),
                    Profile::cosh_family(p.A, p.b, p.c, u0, u1), u0, u1, v0, v1};
        default:
            throw std::invalid_argument("verify_family: tag is not a positive case");
    }
}

void default_rect(CaseTag tag, const FamilyParams& p,
                  double& u0, double& u1, double& v0, double& v1) {
    const double pi = 3.14159265358979323846;
    switch (tag) {
        case CaseTag::PlanarCaseI:
        case CaseTag::CircleFamily_IIb: {
            // Stay well inside one monotone branch of cos(a u + a c1).
            const double half = 0.45 * pi / std::fabs(p.a);
            u0 = -p.c1 - half;
            u1 = -p.c1 + half;
            v0 = 0.0;
            v1 = tag == CaseTag::PlanarCaseI ? 6.28 : 1.0;
            return;
        }
        case CaseTag::RuledE3_IIa:
            u0 = 0.5; u1 = 3.0; v0 = 0.0; v1 = 1.0;
            return;
        case CaseTag::RuledE4_IIIa:
            u0 = 0.5; u1 = 3.0; v0 = 0.5; v1 = 2.5;
            return;
        case CaseTag::CoshFamily_IIIb:
            u0 = -1.0; u1 = 1.0; v0 = 0.5; v1 = 2.5;
            return;
        default:
            throw std::invalid_argument("verify_family: tag is not a positive case");
    }
}

}  // namespace

FamilyReport verify_family(CaseTag tag, const FamilyParams& params, const GridSpec& grid) {
    double u0, u1, v0, v1;
    default_rect(tag, params, u0, u1, v0, v1);
    return verify_family(tag, params, grid, u0, u1, v0, v1);
}

FamilyReport verify_family(CaseTag tag, const FamilyParams& params, const GridSpec& grid,
                           double u0, double u1, double v0, double v1) {
    const MeridianSurface m = build_family(tag, params, u0, u1, v0, v1);

    FamilyReport report;
    report.tag = tag;

    const auto us = linspace_interior(u0, u1, grid.nu);
    const auto vs = linspace_interior(v0, v1, grid.nv);

    auto push = [&](const std::string& name, double value, double bound) {
        report.checks.push_back({name, value, bound, std::fabs(value) <= bound});
    };

    double constraint = 0.0;
    for (double u : linspace_closed(u0, u1, 257)) {
        const ProfileSample s = m.profile().sample(u);
        constraint = std::max(constraint,
                              std::fabs(s.f1 * s.f1 + s.g1 * s.g1 - 1.0));
    }
    push("constraint", constraint, 1e-8);

    std::vector<double> kappas;
    for (double v : vs) kappas.push_back(m.curve().frenet(v).kappa);

    switch (tag) {
        case CaseTag::PlanarCaseI: {
            push("max_kappa", max_abs(kappas), 1e-8);
            const Vec4 ref = m.analytic_frame(us.front(), vs.front()).N1;
            double drift = 0.0;
            for (double u : us)
                for (double v : vs)
                    drift = std::max(drift, norm(m.analytic_frame(u, v).N1 - ref));
            push("normal_drift", drift, 1e-9);
            break;
        }
        case CaseTag::RuledE3_IIa: {
            push("std_kappa", sample_std(kappas), 1e-8);
            double alpha = 0.0, gauss = 0.0;
            for (double u : us) {
                alpha = std::max(alpha, std::fabs(m.profile().kappa_alpha(u)));
                gauss = std::max(gauss, std::fabs(m.closed_curvature(u, vs.front()).K));
            }
            push("max_kappa_alpha", alpha, 1e-8);
            push("max_gauss", gauss, 1e-9);
            break;
        }
        case CaseTag::CircleFamily_IIb: {
            push("std_kappa", sample_std(kappas), 1e-8);
            double dev = 0.0;
            for (double u : us)
                dev = std::max(dev, std::fabs(m.profile().kappa_alpha(u) - params.a));
            push("max_kappa_alpha_dev", dev, 1e-8);
            break;
        }
        case CaseTag::RuledE4_IIIa: {
            double f2 = 0.0, gauss = 0.0;
            for (double u : us) {
                f2 = std::max(f2, std::fabs(m.profile().sample(u).f2));
                gauss = std::max(gauss, std::fabs(m.closed_curvature(u, vs.front()).K));
            }
            push("max_f2", f2, 1e-10);
            push("max_gauss", gauss, 1e-9);
            break;
        }
        case CaseTag::CoshFamily_IIIb: {
            double ode = 0.0, dev = 0.0;
            const double target = -1.0 / (params.b * params.b);
            for (double u : us) {
                const ProfileSample s = m.profile().sample(u);
                ode = std::max(ode, std::fabs(s.f * s.f3 - s.f1 * s.f2));
                dev = std::max(dev, std::fabs(m.closed_curvature(u, vs.front()).K - target));
            }
            push("max_ode", ode, 1e-9);
            push("gauss_dev", dev, 1e-8);
            break;
        }
        default:
            throw std::invalid_argument("verify_family: tag is not a positive case");
    }

    const ResidualGrid rg = residual(m, grid);
    report.max_phi = rg.max_abs_phi;
    report.max_phi_fd = max_abs(rg.phi_fd);
    push("max_phi", report.max_phi, 1e-8);
    push("max_phi_fd", report.max_phi_fd, 1e-5);

    report.roundtrip = classify(m, grid).tag;
    report.passed = report.roundtrip == tag;
    for (const FamilyCheck& c : report.checks) report.passed = report.passed && c.pass;
    return report;
}

}  // namespace meridian

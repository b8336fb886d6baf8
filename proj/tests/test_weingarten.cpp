#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "meridian/errors.hpp"
#include "meridian/numerics.hpp"
#include "meridian/scene.hpp"
#include "meridian/weingarten.hpp"

using namespace meridian;

namespace {

SceneSpec scene(const std::string& curve, const std::string& profile, double u0, double u1,
                double v0, double v1, int nu = 17, int nv = 17) {
    SceneSpec s;
    s.curve = curve;
    s.profile = profile;
    s.u0 = u0;
    s.u1 = u1;
    s.v0 = v0;
    s.v1 = v1;
    s.grid.nu = nu;
    s.grid.nv = nv;
    return s;
}

}  // namespace

TEST_CASE("case tags have stable names") {
    CHECK(to_string(CaseTag::PlanarCaseI) == "PlanarCaseI");
    CHECK(to_string(CaseTag::RuledE3_IIa) == "RuledE3_IIa");
    CHECK(to_string(CaseTag::CircleFamily_IIb) == "CircleFamily_IIb");
    CHECK(to_string(CaseTag::RuledE4_IIIa) == "RuledE4_IIIa");
    CHECK(to_string(CaseTag::CoshFamily_IIIb) == "CoshFamily_IIIb");
    CHECK(to_string(CaseTag::NotWeingarten) == "NotWeingarten");
    CHECK(to_string(CaseTag::Indeterminate) == "Indeterminate");
}

TEST_CASE("residual grid on the sphere meridian is exactly zero") {
    const SceneSpec s = scene("great", "circle:1,-1.5708,0", 0.2, 2.9, 0.0, 6.28);
    const MeridianSurface m = build_scene(s);
    const ResidualGrid rg = residual(m, s.grid);
    CHECK(rg.us.size() == 17);
    CHECK(rg.vs.size() == 17);
    CHECK(rg.max_abs_phi == 0.0);
    CHECK(max_abs(rg.phi_fd) <= 1e-10);
    CHECK(rg.max_path_disagreement <= 1e-10);
    CHECK(rg.minimal_points.empty());
}

TEST_CASE("classification hits all five positive cases") {
    struct Row {
        const char *curve, *profile;
        double u0, u1, v0, v1;
        CaseTag want;
    };
    const Row rows[] = {
        {"great", "circle:1,-1.5708,0", 0.2, 2.9, 0.0, 6.28, CaseTag::PlanarCaseI},
        {"small:0.7853981634", "line:0.7853981634", 0.5, 3.0, 0.0, 1.0, CaseTag::RuledE3_IIa},
        {"small:0.7853981634", "circle:1,-1.5708,0", 0.2, 2.9, 0.0, 1.0,
         CaseTag::CircleFamily_IIb},
        {"spiral:0.2", "line:0.7853981634", 0.5, 3.0, 0.5, 2.5, CaseTag::RuledE4_IIIa},
        {"spiral:0.2", "cosh:0.5,2,0", -1.0, 1.0, 0.5, 2.5, CaseTag::CoshFamily_IIIb},
    };
    for (const Row& r : rows) {
        const SceneSpec s = scene(r.curve, r.profile, r.u0, r.u1, r.v0, r.v1);
        const WeingartenVerdict verdict = classify(build_scene(s), s.grid);
        CHECK(to_string(verdict.tag) == to_string(r.want));
        CHECK(verdict.evidence.max_residual <= 1e-8);
    }
}

TEST_CASE("counterexample classifies NotWeingarten with residual evidence") {
    const SceneSpec s = scene("spiral:0.2", "fromf:0.5*sin(u)+2", 0.0, 3.0, 0.5, 2.5, 41, 41);
    const WeingartenVerdict verdict = classify(build_scene(s), s.grid);
    CHECK(to_string(verdict.tag) == "NotWeingarten");
    CHECK(verdict.evidence.max_residual >= 1e-4);
    CHECK(verdict.evidence.std_kappa >= 0.01);
    CHECK(verdict.evidence.max_ode >= 0.1);
}

TEST_CASE("near-threshold evidence yields Indeterminate") {
    const SceneSpec s =
        scene("spiral:0.2", "fromf:0.5*cosh(u/2)+0.05*sin(u)", -1.0, 1.0, 0.5, 2.5);
    Tolerances tol;
    tol.tol_ode = 0.01;  // measured max_ode ~ 0.031 sits within 10x of this
    const WeingartenVerdict verdict = classify(build_scene(s), s.grid, tol);
    CHECK(to_string(verdict.tag) == "Indeterminate");

    // with the default tolerance the same surface is decisively rejected
    const WeingartenVerdict strict = classify(build_scene(s), s.grid);
    CHECK(to_string(strict.tag) == "NotWeingarten");
}

TEST_CASE("kappa_alpha drift on a constant-kappa directrix is rejected") {
    const SceneSpec s =
        scene("small:0.7853981634", "fromf:cos(u)+0.05*sin(2*u)", 0.2, 1.1, 0.0, 1.0);
    const WeingartenVerdict verdict = classify(build_scene(s), s.grid);
    CHECK(to_string(verdict.tag) == "NotWeingarten");
    CHECK(verdict.evidence.std_kappa <= 1e-12);
    CHECK(verdict.evidence.std_kappa_alpha >= 1e-2);
}

TEST_CASE("verify_family passes for every positive case at defaults") {
    const GridSpec grid{17, 17};
    for (CaseTag tag : {CaseTag::PlanarCaseI, CaseTag::RuledE3_IIa, CaseTag::CircleFamily_IIb,
                        CaseTag::RuledE4_IIIa, CaseTag::CoshFamily_IIIb}) {
        const FamilyReport report = verify_family(tag, FamilyParams{}, grid);
        CHECK(report.passed);
        CHECK(to_string(report.roundtrip) == to_string(tag));
        CHECK(report.max_phi <= 1e-8);
        CHECK(report.max_phi_fd <= 1e-5);
    }
}

TEST_CASE("verify_family honors explicit parameters and rectangles") {
    FamilyParams p;
    p.a = 1.0;
    p.c1 = -1.5707963267948966;
    p.c2 = 0.0;
    const FamilyReport report = verify_family(CaseTag::CircleFamily_IIb, p, GridSpec{17, 17});
    CHECK(report.passed);

    const FamilyReport custom = verify_family(CaseTag::RuledE3_IIa, FamilyParams{},
                                              GridSpec{17, 17}, 1.0, 2.0, 0.2, 0.9);
    CHECK(custom.passed);
}

TEST_CASE("verify_family rejects non-positive tags") {
    CHECK_THROWS_AS(verify_family(CaseTag::NotWeingarten, FamilyParams{}, GridSpec{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_family(CaseTag::Indeterminate, FamilyParams{}, GridSpec{}),
                    std::invalid_argument);
}

TEST_CASE("residual records minimal points instead of failing") {
    const SceneSpec s = scene("great", "cosh:0.5,0.5,0", -0.4, 0.4, 0.0, 1.0, 41, 9);
    const MeridianSurface m = build_scene(s);
    const ResidualGrid rg = residual(m, s.grid);
    // u = 0 is an interior grid node for 41 points on [-0.4, 0.4]
    CHECK(rg.minimal_points.size() == 9);
    CHECK(std::isfinite(rg.max_abs_phi));
}

TEST_CASE("verdict JSON carries the documented fields") {
    const SceneSpec s = scene("great", "circle:1,-1.5708,0", 0.2, 2.9, 0.0, 6.28);
    const WeingartenVerdict verdict = classify(build_scene(s), s.grid);
    const nlohmann::json j = to_json(verdict);
    CHECK(j["schema"] == 1);
    CHECK(j["case"] == "PlanarCaseI");
    CHECK(j.contains("max_residual"));
    CHECK(j["evidence"].contains("std_kappa"));
    CHECK(j["evidence"].contains("max_ode"));
    CHECK(j["tolerances"]["tol_kappa"].get<double>() == doctest::Approx(1e-6));
    CHECK(j["grid"]["nu"] == 17);
}

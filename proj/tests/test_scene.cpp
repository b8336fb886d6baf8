#include <cmath>

#include "doctest.h"
#include "meridian/errors.hpp"
#include "meridian/scene.hpp"
#include "meridian/weingarten.hpp"

using namespace meridian;

TEST_CASE("parse_curve accepts the three directrix kinds") {
    const SphericalCurve great = parse_curve("great");
    CHECK(great.frenet(1.0).kappa == doctest::Approx(0.0));

    const SphericalCurve small = parse_curve("small:0.7853981633974483");
    CHECK(small.frenet(0.5).kappa == doctest::Approx(1.0).epsilon(1e-12));

    const SphericalCurve spiral = parse_curve("spiral:0.2");
    CHECK(norm(spiral.position(1.0)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("parse_curve rejects malformed specs") {
    CHECK_THROWS_AS(parse_curve(""), ParseError);
    CHECK_THROWS_AS(parse_curve("torus"), ParseError);
    CHECK_THROWS_AS(parse_curve("small"), ParseError);
    CHECK_THROWS_AS(parse_curve("small:abc"), ParseError);
    CHECK_THROWS_AS(parse_curve("spiral:"), ParseError);
    CHECK_THROWS_AS(parse_curve("great:1"), ParseError);
}

TEST_CASE("parse_profile covers the four generators") {
    const Profile line = parse_profile("line:0.7853981633974483", 0.5, 3.0);
    CHECK(line.f(1.0) == doctest::Approx(1.0 + std::cos(0.7853981633974483)).epsilon(1e-12));
    CHECK(line.kappa_alpha(1.0) == doctest::Approx(0.0));

    const Profile line_full = parse_profile("line:0.5,2,1", 0.0, 2.0);
    CHECK(line_full.f(0.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(line_full.g(0.0) == doctest::Approx(1.0).epsilon(1e-12));

    const Profile circle = parse_profile("circle:1,-1.5707963267948966,0", 0.2, 2.9);
    CHECK(circle.f(1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-12));
    CHECK(circle.kappa_alpha(1.0) == doctest::Approx(1.0).epsilon(1e-10));

    const Profile cosh = parse_profile("cosh:0.5,2,0", -1.0, 1.0);
    CHECK(cosh.f(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cosh.g(-1.0) == doctest::Approx(0.0));

    const Profile fromf = parse_profile("fromf:0.5*sin(u)+2", 0.0, 3.0);
    CHECK(fromf.f(1.0) == doctest::Approx(0.5 * std::sin(1.0) + 2.0).epsilon(1e-12));
    CHECK(fromf.g(0.0) == doctest::Approx(0.0));
}

TEST_CASE("parse_profile rejects malformed specs") {
    CHECK_THROWS_AS(parse_profile("", 0.0, 1.0), ParseError);
    CHECK_THROWS_AS(parse_profile("line", 0.0, 1.0), ParseError);
    CHECK_THROWS_AS(parse_profile("circle:1,2", 0.0, 1.0), ParseError);
    CHECK_THROWS_AS(parse_profile("cosh:1", 0.0, 1.0), ParseError);
    CHECK_THROWS_AS(parse_profile("helix:1", 0.0, 1.0), ParseError);
    CHECK_THROWS_AS(parse_profile("line:0.5,2,1,9", 0.0, 1.0), ParseError);
    CHECK_THROWS_AS(parse_profile("fromf:sin(u", 0.0, 1.0), ParseError);
}

TEST_CASE("parse_range splits a:b and validates numbers") {
    double lo = 0.0, hi = 0.0;
    parse_range("0.25:2.5", lo, hi);
    CHECK(lo == doctest::Approx(0.25));
    CHECK(hi == doctest::Approx(2.5));
    parse_range("-1:1", lo, hi);
    CHECK(lo == doctest::Approx(-1.0));
    CHECK(hi == doctest::Approx(1.0));
    CHECK_THROWS_AS(parse_range("1", lo, hi), ParseError);
    CHECK_THROWS_AS(parse_range("1:2:3", lo, hi), ParseError);
    CHECK_THROWS_AS(parse_range("x:2", lo, hi), ParseError);
    CHECK_THROWS_AS(parse_range(":", lo, hi), ParseError);
}

TEST_CASE("build_scene validates grid and ranges") {
    SceneSpec s;
    s.curve = "great";
    s.profile = "circle:1,-1.5707963267948966,0";
    s.u0 = 0.2;
    s.u1 = 2.9;
    s.v0 = 0.0;
    s.v1 = 6.28;

    const MeridianSurface m = build_scene(s);
    CHECK(m.profile().f(1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-12));

    SceneSpec bad = s;
    bad.grid.nu = 4;
    CHECK_THROWS_AS(build_scene(bad), std::invalid_argument);
    bad = s;
    bad.grid.nv = 7;
    CHECK_THROWS_AS(build_scene(bad), std::invalid_argument);
    bad = s;
    bad.u1 = bad.u0;
    CHECK_THROWS(build_scene(bad));
    bad = s;
    bad.v1 = -1.0;
    CHECK_THROWS(build_scene(bad));
}

TEST_CASE("scene classification returns the planar case for the sphere") {
    SceneSpec s;
    s.curve = "great";
    s.profile = "circle:1,-1.5707963267948966,0";
    s.u0 = 0.2;
    s.u1 = 2.9;
    s.v0 = 0.0;
    s.v1 = 6.28;
    s.grid.nu = 17;
    s.grid.nv = 17;
    const WeingartenVerdict verdict = classify(build_scene(s), s.grid, s.tol);
    CHECK(to_string(verdict.tag) == "PlanarCaseI");
}

TEST_CASE("family report JSON carries checks and outcome") {
    const FamilyReport report =
        verify_family(CaseTag::CircleFamily_IIb, FamilyParams{}, GridSpec{17, 17});
    const nlohmann::json j = to_json(report);
    CHECK(j["schema"] == 1);
    CHECK(j["family"] == "CircleFamily_IIb");
    CHECK(j["roundtrip"] == "CircleFamily_IIb");
    CHECK(j["passed"] == true);
    CHECK(j["checks"].is_array());
    CHECK(j["checks"].size() >= 3);
    bool saw_constraint = false;
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("value"));
        CHECK(c.contains("bound"));
        CHECK(c.contains("pass"));
        if (c["name"] == "constraint") saw_constraint = true;
    }
    CHECK(saw_constraint);
}

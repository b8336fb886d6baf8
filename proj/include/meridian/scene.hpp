#pragma once

#include <string>

#include "json.hpp"
#include "meridian/meridian_surface.hpp"
#include "meridian/weingarten.hpp"

namespace meridian {

/// A surface described entirely by command-line-friendly strings.
///
/// Curve specs:   "great" | "small:<theta0>" | "spiral:<slope>"
/// Profile specs: "line:<beta>[,<f0>[,<g0>]]" | "circle:<a>,<c1>,<c2>" |
///                "cosh:<A>,<b>,<c>" | "fromf:<expr in u>"
/// Angles are radians; numbers parse in the C locale.
struct SceneSpec {
    std::string curve;
    std::string profile;
    double u0 = 0.0, u1 = 0.0, v0 = 0.0, v1 = 0.0;
    GridSpec grid;
    Tolerances tol;
    int sign = +1;  // branch sign for fromf profiles
};

SphericalCurve parse_curve(const std::string& spec);
Profile parse_profile(const std::string& spec, double u0, double u1, int sign = +1);

/// Parses "a:b" into a pair; throws ParseError on malformed input.
void parse_range(const std::string& text, double& lo, double& hi);

/// Builds the surface; throws ParseError for malformed specs and
/// std::invalid_argument for bad grids/ranges (nu, nv >= 8 required).
MeridianSurface build_scene(const SceneSpec& spec);

nlohmann::json to_json(const WeingartenVerdict& verdict);
nlohmann::json to_json(const FamilyReport& report);

}  // namespace meridian

#include "meridian/scene.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include "meridian/errors.hpp"
#include "meridian/expr.hpp"

namespace meridian {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& what) {
    const std::string t = trimmed(text);
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(what + ": malformed number '" + text + "'");
    return value;
}

std::vector<double> parse_args(const std::string& rest, std::size_t min_n,
                               std::size_t max_n, const std::string& what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= rest.size()) {
        const std::size_t comma = rest.find(',', start);
        const std::string piece =
            comma == std::string::npos ? rest.substr(start) : rest.substr(start, comma - start);
        out.push_back(parse_number(piece, what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() < min_n || out.size() > max_n)
        throw ParseError(what + ": expected between " + std::to_string(min_n) + " and " +
                         std::to_string(max_n) + " arguments, got " + std::to_string(out.size()));
    return out;
}

}  // namespace

SphericalCurve parse_curve(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    const std::string kind = trimmed(colon == std::string::npos ? spec : spec.substr(0, colon));
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (kind == "great") {
        if (!trimmed(rest).empty()) throw ParseError("curve 'great' takes no arguments");
        return SphericalCurve::great_circle();
    }
    if (kind == "small") {
        const auto args = parse_args(rest, 1, 1, "curve 'small'");
        return SphericalCurve::small_circle(args[0]);
    }
    if (kind == "spiral") {
        const auto args = parse_args(rest, 1, 1, "curve 'spiral'");
        return SphericalCurve::spiral(args[0]);
    }
    throw ParseError("unknown curve spec '" + spec + "'");
}

Profile parse_profile(const std::string& spec, double u0, double u1, int sign) {
    const std::size_t colon = spec.find(':');
    const std::string kind = trimmed(colon == std::string::npos ? spec : spec.substr(0, colon));
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (kind == "line") {
        const auto args = parse_args(rest, 1, 3, "profile 'line'");
        const double f0 = args.size() > 1 ? args[1] : 1.0;
        const double g0 = args.size() > 2 ? args[2] : 0.0;
        return Profile::line(args[0], f0, g0, u0, u1);
    }
    if (kind == "circle") {
        const auto args = parse_args(rest, 3, 3, "profile 'circle'");
        return Profile::circle_arc(args[0], args[1], args[2], u0, u1);
    }
    if (kind == "cosh") {
        const auto args = parse_args(rest, 3, 3, "profile 'cosh'");
        return Profile::cosh_family(args[0], args[1], args[2], u0, u1);
    }
    if (kind == "fromf") {
        const Expr f = Expr::parse(rest);
        return Profile::from_f([f](double u) { return f.jet(u); }, u0, u1, sign);
    }
    throw ParseError("unknown profile spec '" + spec + "'");
}

void parse_range(const std::string& text, double& lo, double& hi) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("range '" + text + "': expected the form a:b");
    lo = parse_number(text.substr(0, colon), "range");
    hi = parse_number(text.substr(colon + 1), "range");
}

MeridianSurface build_scene(const SceneSpec& spec) {
    if (spec.grid.nu < 8 || spec.grid.nv < 8)
        throw std::invalid_argument("grid must be at least 8x8");
    if (!(spec.u1 > spec.u0) || !(spec.v1 > spec.v0))
        throw std::invalid_argument("u and v ranges must be non-degenerate");
    SphericalCurve curve = parse_curve(spec.curve);
    Profile profile = parse_profile(spec.profile, spec.u0, spec.u1, spec.sign);
    return {std::move(curve), std::move(profile), spec.u0, spec.u1, spec.v0, spec.v1};
}

nlohmann::json to_json(const WeingartenVerdict& verdict) {
    nlohmann::json j;
    j["schema"] = 1;
    j["case"] = to_string(verdict.tag);
    j["max_residual"] = verdict.evidence.max_residual;
    j["evidence"] = {
        {"max_kappa", verdict.evidence.max_kappa},
        {"std_kappa", verdict.evidence.std_kappa},
        {"max_kappa_alpha", verdict.evidence.max_kappa_alpha},
        {"std_kappa_alpha", verdict.evidence.std_kappa_alpha},
        {"max_f2", verdict.evidence.max_f2},
        {"max_ode", verdict.evidence.max_ode},
        {"max_residual", verdict.evidence.max_residual},
    };
    j["tolerances"] = {
        {"tol_kappa", verdict.tolerances.tol_kappa},
        {"tol_alpha", verdict.tolerances.tol_alpha},
        {"tol_ode", verdict.tolerances.tol_ode},
        {"evidence", verdict.tolerances.evidence},
    };
    j["grid"] = {{"nu", verdict.grid.nu}, {"nv", verdict.grid.nv}};
    return j;
}

nlohmann::json to_json(const FamilyReport& report) {
    nlohmann::json j;
    j["schema"] = 1;
    j["family"] = to_string(report.tag);
    j["roundtrip"] = to_string(report.roundtrip);
    j["passed"] = report.passed;
    j["max_phi"] = report.max_phi;
    j["max_phi_fd"] = report.max_phi_fd;
    j["checks"] = nlohmann::json::array();
    for (const FamilyCheck& c : report.checks)
        j["checks"].push_back({{"name", c.name},
                               {"value", c.value},
                               {"bound", c.bound},
                               {"pass", c.pass}});
    return j;
}

}  // namespace meridian

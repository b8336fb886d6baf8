#include "meridian/profile.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "meridian/errors.hpp"
#include "meridian/numerics.hpp"

namespace meridian {

namespace {

constexpr int kCheckSamples = 2049;
constexpr int kQuadNodes = 4097;  // g table nodes (>= 2048 panels)

/// g' and g'' from the unit-speed constraint, given the f jet.
double g1_from(const Jet& F, int sign) {
    const double s = 1.0 - F.d1 * F.d1;
    if (s <= 0.0) throw SpeedViolation("profile: |f'| reached 1, g' undefined");
    return sign * std::sqrt(s);
}

double g2_from(const Jet& F, int sign) {
    const double s = 1.0 - F.d1 * F.d1;
    if (s <= 0.0) throw SpeedViolation("profile: |f'| reached 1, g'' undefined");
    return -sign * F.d1 * F.d2 / std::sqrt(s);
}

std::function<Jet(double)> fd_jets_of(std::function<double(double)> f, double u0, double u1) {
    return [f = std::move(f), u0, u1](double u) {
        return Jet{f(u),
                   fd_derivative(f, u, 1, u0, u1),
                   fd_derivative(f, u, 2, u0, u1),
                   fd_derivative(f, u, 3, u0, u1)};
    };
}

}  // namespace

void Profile::check_invariants() const {
    for (double u : linspace_closed(u0_, u1_, kCheckSamples)) {
        const Jet F = fj_(u);
        if (!(F.f >= 1e-6))
            throw NonRegular("profile: f must stay >= 1e-6 on the domain");
        const double c = F.d1 * F.d1 + g1_(u) * g1_(u) - 1.0;
        if (std::abs(c) > 1e-8)
            throw SpeedViolation("profile: unit-speed constraint violated beyond 1e-8");
    }
}

Profile Profile::line(double beta, double f0, double g0, double u0, double u1) {
    if (!(u0 < u1)) throw GeomError("profile: need u0 < u1");
    const double cb = std::cos(beta), sb = std::sin(beta);
    Profile p;
    p.kind_ = ProfileKind::Line;
    p.u0_ = u0;
    p.u1_ = u1;
    p.sign_ = sb >= 0.0 ? +1 : -1;
    p.fj_ = [cb, f0](double u) { return Jet{u * cb + f0, cb, 0.0, 0.0}; };
    p.fval_ = [cb, f0](double u) { return u * cb + f0; };
    p.g_ = [sb, g0](double u) { return u * sb + g0; };
    p.g1_ = [sb](double) { return sb; };
    p.g2_ = [](double) { return 0.0; };
    p.check_invariants();
    return p;
}

Profile Profile::circle_arc(double a, double c1, double c2, double u0, double u1) {
    if (!(u0 < u1)) throw GeomError("profile: need u0 < u1");
    if (a == 0.0) throw GeomError("circle_arc: a must be nonzero");
    for (double u : linspace_closed(u0, u1, kCheckSamples))
        if (std::cos(a * u + a * c1) < 1e-3)
            throw BranchViolation("circle_arc: cos(a u + a c1) dips below 1e-3 on the domain");
    Profile p;
    p.kind_ = ProfileKind::CircleArc;
    p.u0_ = u0;
    p.u1_ = u1;
    p.sign_ = +1;  // g' = cos(a u + a c1) > 0 on the admitted branch
    p.fj_ = [a, c1, c2](double u) {
        const Jet ph = Jet::variable(u) * a + a * c1;
        return cos(ph) / a + c2;
    };
    p.fval_ = [a, c1, c2](double u) { return std::cos(a * u + a * c1) / a + c2; };
    p.g_ = [a, c1](double u) { return std::sin(a * u + a * c1) / a; };
    p.g1_ = [a, c1](double u) { return std::cos(a * u + a * c1); };
    p.g2_ = [a, c1](double u) { return -a * std::sin(a * u + a * c1); };
    p.check_invariants();
    return p;
}

Profile Profile::cosh_family(double A, double b, double c, double u0, double u1) {
    if (!(u0 < u1)) throw GeomError("profile: need u0 < u1");
    if (!(A > 0.0) || b == 0.0) throw GeomError("cosh_family: need A > 0 and b != 0");
    auto fj = [A, b, c](double u) {
        const Jet t = (Jet::variable(u) + c) / b;
        return cosh(t) * A;
    };
    for (double u : linspace_closed(u0, u1, kCheckSamples))
        if (std::abs(fj(u).d1) > 1.0 - 1e-3)
            throw SpeedViolation("cosh_family: |f'| exceeds 1 - 1e-3 on the domain");
    Profile p;
    p.kind_ = ProfileKind::CoshFamily;
    p.u0_ = u0;
    p.u1_ = u1;
    p.sign_ = +1;
    p.fj_ = fj;
    p.fval_ = [A, b, c](double u) { return A * std::cosh((u + c) / b); };
    auto table = std::make_shared<CumulativeIntegral>(
        [fj](double u) { return g1_from(fj(u), +1); }, linspace_closed(u0, u1, kQuadNodes), 0.0);
    p.g_ = [table](double u) { return table->eval(u); };
    p.g1_ = [fj](double u) { return g1_from(fj(u), +1); };
    p.g2_ = [fj](double u) { return g2_from(fj(u), +1); };
    p.check_invariants();
    return p;
}

Profile Profile::from_f(std::function<double(double)> f, double u0, double u1,
                        int sign, double g0) {
    auto fv = f;
    Profile p = from_f(fd_jets_of(std::move(f), u0, u1), u0, u1, sign, g0);
    p.fval_ = std::move(fv);  // skip the derivative bundle on value-only queries
    return p;
}

Profile Profile::from_f(std::function<Jet(double)> f_jets, double u0, double u1,
                        int sign, double g0) {
    if (!(u0 < u1)) throw GeomError("profile: need u0 < u1");
    if (sign != +1 && sign != -1) throw GeomError("profile: sign must be +1 or -1");
    for (double u : linspace_closed(u0, u1, kCheckSamples)) {
        const Jet F = f_jets(u);
        if (std::abs(F.d1) > 1.0 - 1e-6)
            throw SpeedViolation("profile_from_f: |f'| exceeds 1 - 1e-6 on the domain");
        if (!(F.f >= 1e-6)) throw NonRegular("profile_from_f: f dips below 1e-6");
    }
    Profile p;
    p.kind_ = ProfileKind::GenericFromF;
    p.u0_ = u0;
    p.u1_ = u1;
    p.sign_ = sign;
    p.fj_ = f_jets;
    p.fval_ = [f_jets](double u) { return f_jets(u).f; };
    auto table = std::make_shared<CumulativeIntegral>(
        [f_jets, sign](double u) { return g1_from(f_jets(u), sign); },
        linspace_closed(u0, u1, kQuadNodes), g0);
    p.g_ = [table](double u) { return table->eval(u); };
    p.g1_ = [f_jets, sign](double u) { return g1_from(f_jets(u), sign); };
    p.g2_ = [f_jets, sign](double u) { return g2_from(f_jets(u), sign); };
    p.check_invariants();
    return p;
}

ProfileSample Profile::sample(double u) const {
    const Jet F = fj_(u);
    return {F.f, F.d1, F.d2, F.d3, g_(u), g1_(u), g2_(u)};
}

double Profile::kappa_alpha(double u) const {
    const Jet F = fj_(u);
    return F.d1 * g2_(u) - g1_(u) * F.d2;
}

}  // namespace meridian

#pragma once

#include <functional>
#include <memory>

#include "meridian/jet.hpp"

namespace meridian {

enum class ProfileKind { Line, CircleArc, CoshFamily, GenericFromF };

/// All profile data at one parameter value.
struct ProfileSample {
    double f = 0.0, f1 = 0.0, f2 = 0.0, f3 = 0.0;
    double g = 0.0, g1 = 0.0, g2 = 0.0;
};

/// Unit-speed plane curve alpha(u) = (f(u), g(u)) with f'^2 + g'^2 = 1 and
/// f > 0 on its domain I = [u_lo, u_hi]. Immutable; evaluation thread-safe.
class Profile {
public:
    /// f = u cos(beta) + f0, g = u sin(beta) + g0.
    static Profile line(double beta, double f0, double g0, double u0, double u1);

    /// Constant-curvature family: f = cos(a u + a c1)/a + c2,
    /// g = sin(a u + a c1)/a, on a branch where cos(a u + a c1) >= 1e-3.
    /// kappa_alpha == a identically on the branch.
    static Profile circle_arc(double a, double c1, double c2, double u0, double u1);

    /// f = A cosh((u+c)/b), g from the unit-speed constraint by quadrature.
    /// Satisfies f f''' - f' f'' = 0 identically.
    static Profile cosh_family(double A, double b, double c, double u0, double u1);

    /// Generic profile from an opaque f; derivatives of f by finite
    /// differences, g(u) = g0 + sign * integral of sqrt(1 - f'^2) from u0.
    static Profile from_f(std::function<double(double)> f, double u0, double u1,
                          int sign = +1, double g0 = 0.0);

    /// Same, but f supplies analytic derivatives as a jet.
    static Profile from_f(std::function<Jet(double)> f_jets, double u0, double u1,
                          int sign = +1, double g0 = 0.0);

    ProfileKind kind() const { return kind_; }
    double u_lo() const { return u0_; }
    double u_hi() const { return u1_; }
    int sign() const { return sign_; }

    Jet f_jet(double u) const { return fj_(u); }
    double f(double u) const { return fval_(u); }
    double g(double u) const { return g_(u); }

    ProfileSample sample(double u) const;

    /// Curvature of the meridian curve: f' g'' - g' f''.
    double kappa_alpha(double u) const;

private:
    Profile() = default;

    ProfileKind kind_ = ProfileKind::GenericFromF;
    double u0_ = 0.0, u1_ = 0.0;
    int sign_ = +1;
    std::function<Jet(double)> fj_;
    std::function<double(double)> fval_;  // value-only fast path
    std::function<double(double)> g_, g1_, g2_;

    void check_invariants() const;
};

}  // namespace meridian

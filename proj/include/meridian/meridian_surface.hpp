#pragma once

#include "meridian/euclid.hpp"
#include "meridian/patch.hpp"
#include "meridian/profile.hpp"
#include "meridian/spherical_curve.hpp"

namespace meridian {

/// Closed-form curvature data of a meridian surface at a point.
struct MeridianCurvature {
    double K = 0.0;
    double H1 = 0.0;  // component along N1 = n
    double H2 = 0.0;  // component along N2 = -g' r + f' e4
    double H = 0.0;
    SymMat2 A1, A2;  // diag(0, kappa/f) and diag(kappa_alpha, g'/f)
    double kappa = 0.0, kappa_alpha = 0.0;
};

/// Orthonormal frame adapted to the surface: tangents X = X_u, Y = X_v/f = t,
/// normals N1 = n, N2 = -g' r + f' e4 (3-vectors lifted into E^4).
struct MeridianFrame {
    Vec4 X, Y, N1, N2;
};

/// Partials of K and H in the surface parameters. Kv is identically zero;
/// Ku and Hv are closed-form, Hu comes from a small central difference.
struct WeingartenPartials {
    double Ku = 0.0, Kv = 0.0, Hu = 0.0, Hv = 0.0;
};

/// X(u,v) = f(u) r(v) + g(u) e4 over [u0,u1] x [v0,v1]. Requires f >= 1e-6
/// and |g'| >= 1e-6 on the u-range (the closed forms assume g' != 0).
class MeridianSurface {
public:
    MeridianSurface(SphericalCurve curve, Profile profile,
                    double u0, double u1, double v0, double v1);

    const SphericalCurve& curve() const { return curve_; }
    const Profile& profile() const { return profile_; }
    double u_lo() const { return u0_; }
    double u_hi() const { return u1_; }
    double v_lo() const { return v0_; }
    double v_hi() const { return v1_; }

    Vec4 embed(double u, double v) const;
    MeridianFrame analytic_frame(double u, double v) const;
    MeridianCurvature closed_curvature(double u, double v) const;
    WeingartenPartials weingarten_partials(double u, double v) const;

    /// Weingarten residual Phi = K_u H_v - K_v H_u in its analytic
    /// factorization -kappa kappa' (f f''' - f' f'') / (2 f^3 sqrt(...)).
    double phi_analytic(double u, double v) const;

    /// Adapter for the generic numeric pipeline. The patch sees only the
    /// embedding (plus, optionally, the analytic normal frame), so its
    /// derivatives are an independent finite-difference oracle.
    Patch as_patch(bool with_analytic_frame = false) const;

private:
    SphericalCurve curve_;
    Profile profile_;
    double u0_, u1_, v0_, v1_;
};

}  // namespace meridian

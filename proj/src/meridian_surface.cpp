#include "meridian/meridian_surface.hpp"

#include <cmath>

#include "meridian/errors.hpp"
#include "meridian/numerics.hpp"

namespace meridian {

MeridianSurface::MeridianSurface(SphericalCurve curve, Profile profile,
                                 double u0, double u1, double v0, double v1)
    : curve_(std::move(curve)), profile_(std::move(profile)),
      u0_(u0), u1_(u1), v0_(v0), v1_(v1) {
    if (!(u0_ < u1_) || !(v0_ < v1_))
        throw GeomError("meridian surface: degenerate parameter rectangle");
    if (u0_ < profile_.u_lo() - 1e-12 || u1_ > profile_.u_hi() + 1e-12)
        throw GeomError("meridian surface: u-range outside the profile domain");
    if (v0_ < curve_.v_lo() - 1e-12 || v1_ > curve_.v_hi() + 1e-12)
        throw GeomError("meridian surface: v-range outside the curve domain");
    for (double u : linspace_closed(u0_, u1_, 257)) {
        const ProfileSample s = profile_.sample(u);
        if (!(s.f >= 1e-6))
            throw NonRegular("meridian surface: f dips below 1e-6 on the u-range");
        if (!(std::abs(s.g1) >= 1e-6))
            throw GPrimeZero("meridian surface: |g'| dips below 1e-6 on the u-range");
    }
}

Vec4 MeridianSurface::embed(double u, double v) const {
    const Vec3 r = curve_.position(v);
    return lift(r) * profile_.f(u) + e4() * profile_.g(u);
}

MeridianFrame MeridianSurface::analytic_frame(double u, double v) const {
    const ProfileSample s = profile_.sample(u);
    const FrenetSample fr = curve_.frenet(v);
    MeridianFrame out;
    out.X = lift(fr.r) * s.f1 + e4() * s.g1;
    out.Y = lift(fr.t);
    out.N1 = lift(fr.n);
    out.N2 = lift(fr.r) * (-s.g1) + e4() * s.f1;
    return out;
}

MeridianCurvature MeridianSurface::closed_curvature(double u, double v) const {
    const ProfileSample s = profile_.sample(u);
    if (!(s.f >= 1e-6)) throw NonRegular("closed_curvature: f below 1e-6");
    if (!(std::abs(s.g1) >= 1e-6)) throw GPrimeZero("closed_curvature: |g'| below 1e-6");
    const FrenetSample fr = curve_.frenet(v);

    MeridianCurvature out;
    out.kappa = fr.kappa;
    out.kappa_alpha = s.f1 * s.g2 - s.g1 * s.f2;
    out.K = out.kappa_alpha * s.g1 / s.f;
    out.H1 = fr.kappa / (2.0 * s.f);
    out.H2 = (out.kappa_alpha * s.f + s.g1) / (2.0 * s.f);
    out.H = std::hypot(out.H1, out.H2);
    out.A1 = SymMat2{0.0, 0.0, fr.kappa / s.f};
    out.A2 = SymMat2{out.kappa_alpha, 0.0, s.g1 / s.f};
    return out;
}

WeingartenPartials MeridianSurface::weingarten_partials(double u, double v) const {
    const ProfileSample s = profile_.sample(u);
    if (!(s.f >= 1e-6)) throw NonRegular("weingarten_partials: f below 1e-6");
    if (!(std::abs(s.g1) >= 1e-6)) throw GPrimeZero("weingarten_partials: |g'| below 1e-6");
    const FrenetSample fr = curve_.frenet(v);
    const double ka = s.f1 * s.g2 - s.g1 * s.f2;

    WeingartenPartials out;
    out.Ku = -(s.f * s.f3 - s.f1 * s.f2) / (s.f * s.f);
    out.Kv = 0.0;

    const double m2 = fr.kappa * fr.kappa + (ka * s.f + s.g1) * (ka * s.f + s.g1);
    if (m2 < 1e-20)
        throw MinimalPoint("weingarten_partials: H vanishes; H_v is singular here");
    out.Hv = fr.kappa * fr.kappa_prime / (2.0 * s.f * std::sqrt(m2));

    // H_u by a small central difference; the closed form for H_u is not used
    // anywhere (K_v = 0 kills its contribution to the residual)
    const double kap = fr.kappa;
    auto H_of_u = [this, kap](double uu) {
        const ProfileSample q = profile_.sample(uu);
        const double qa = q.f1 * q.g2 - q.g1 * q.f2;
        return std::hypot(kap / (2.0 * q.f), (qa * q.f + q.g1) / (2.0 * q.f));
    };
    const FdStencil st = fd_stencil(u, 1, 1e-6 * std::max(1.0, std::abs(u)), u0_, u1_);
    double acc = 0.0;
    for (std::size_t i = 0; i < st.nodes.size(); ++i) acc += st.weights[i] * H_of_u(st.nodes[i]);
    out.Hu = acc;
    return out;
}

double MeridianSurface::phi_analytic(double u, double v) const {
    const ProfileSample s = profile_.sample(u);
    if (!(s.f >= 1e-6)) throw NonRegular("phi_analytic: f below 1e-6");
    if (!(std::abs(s.g1) >= 1e-6)) throw GPrimeZero("phi_analytic: |g'| below 1e-6");
    const FrenetSample fr = curve_.frenet(v);
    const double ka = s.f1 * s.g2 - s.g1 * s.f2;
    const double m2 = fr.kappa * fr.kappa + (ka * s.f + s.g1) * (ka * s.f + s.g1);
    if (m2 < 1e-20)
        throw MinimalPoint("phi_analytic: H vanishes; the factorization is singular here");
    const double ode = s.f * s.f3 - s.f1 * s.f2;
    return -fr.kappa * fr.kappa_prime * ode / (2.0 * s.f * s.f * s.f * std::sqrt(m2));
}

Patch MeridianSurface::as_patch(bool with_analytic_frame) const {
    Patch p;
    const SphericalCurve curve = curve_;
    const Profile profile = profile_;
    p.X = [curve, profile](double u, double v) {
        return lift(curve.position(v)) * profile.f(u) + e4() * profile.g(u);
    };
    p.u0 = u0_;
    p.u1 = u1_;
    p.v0 = v0_;
    p.v1 = v1_;
    if (with_analytic_frame) {
        p.normal_frame = [curve, profile](double u, double v) {
            const ProfileSample s = profile.sample(u);
            const FrenetSample fr = curve.frenet(v);
            return std::array<Vec4, 2>{lift(fr.n),
                                       lift(fr.r) * (-s.g1) + e4() * s.f1};
        };
    }
    return p;
}

}  // namespace meridian

#pragma once

#include <functional>
#include <memory>

#include "meridian/euclid.hpp"
#include "meridian/jet.hpp"

namespace meridian {

enum class CurveKind { GreatCircle, SmallCircle, Reparametrized };

/// Moving frame {t, n, r} of a unit-sphere curve at a parameter value,
/// together with the spherical curvature and its derivative.
struct FrenetSample {
    Vec3 t;  // unit tangent r'(v)
    Vec3 n;  // n = r x t (orientation fixed; see small_circle note)
    Vec3 r;  // position, |r| = 1
    double kappa = 0.0;        // <t', n>
    double kappa_prime = 0.0;  // d kappa / dv
};

/// Arc-length-parametrized curve r(v) on S^2(1). Immutable after
/// construction; evaluation is read-only and thread-safe.
class SphericalCurve {
public:
    /// r(v) = (cos v, sin v, 0); kappa = 0.
    static SphericalCurve great_circle();

    /// Circle at colatitude theta0 in (0, pi), arc-length parametrized:
    /// r(v) = (s0 cos(v/s0), s0 sin(v/s0), cos theta0), s0 = sin theta0.
    /// With n = r x t the curvature is +cot(theta0).
    static SphericalCurve small_circle(double theta0);

    /// Spherical spiral: colatitude pi/2 + slope*w against longitude w,
    /// arc-length reparametrized and anchored so v = 0 corresponds to w = 0.
    /// The table is built to cover at least [s_lo, s_hi] in arc length.
    static SphericalCurve spiral(double slope, double s_lo = -0.3, double s_hi = 3.8);

    /// Arc-length reparametrization of an opaque on-sphere curve; derivatives
    /// of the raw curve by finite differences. Anchored at s(w0) = 0.
    static SphericalCurve reparametrize_arclength(std::function<Vec3(double)> raw,
                                                  double w0, double w1);

    /// Same, but the raw curve supplies analytic derivatives as jets.
    static SphericalCurve reparametrize_arclength(std::function<Jet3Vec(double)> raw_jets,
                                                  double w0, double w1);

    CurveKind kind() const { return kind_; }
    double v_lo() const { return v_lo_; }
    double v_hi() const { return v_hi_; }

    Vec3 position(double v) const;

    /// Position with arc-length derivatives through order 3.
    Jet3Vec jets(double v) const;

    /// Frame, curvature and curvature derivative; throws OffSphere or
    /// NotUnitSpeed if the invariants fail at v beyond tolerance.
    FrenetSample frenet(double v) const;

private:
    SphericalCurve(CurveKind kind, double v_lo, double v_hi,
                   std::function<Jet3Vec(double)> jets)
        : kind_(kind), v_lo_(v_lo), v_hi_(v_hi), jets_(std::move(jets)) {}

    CurveKind kind_;
    double v_lo_, v_hi_;
    std::function<Jet3Vec(double)> jets_;  // arc-length parametrized
};

}  // namespace meridian

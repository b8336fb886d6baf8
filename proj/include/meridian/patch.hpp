#pragma once

#include <array>
#include <functional>

#include "meridian/euclid.hpp"

namespace meridian {

/// First fundamental form coefficients at a point.
struct FirstForm {
    double E = 0.0, F = 0.0, G = 0.0;
    double W2 = 0.0;  // EG - F^2
};

/// Second fundamental form: orthonormal normal frame and the coefficients
/// c^k_ij = <X_ij, N_k> (symmetric in ij; the mixed one stored once).
struct SecondFormCoeffs {
    double c11 = 0.0, c12 = 0.0, c22 = 0.0;
};

struct SecondForm {
    Vec4 N1, N2;
    SecondFormCoeffs c1, c2;  // along N1 and N2
};

/// Curvature data at a point. A1, A2 are the shape operators along N1, N2 in
/// the orthonormal tangent frame {X_u/sqrt(E), (X_v - (F/E) X_u)/|...|}.
struct CurvaturePoint {
    double K = 0.0;
    double H1 = 0.0, H2 = 0.0;  // mean curvature vector components along N1, N2
    double H = 0.0;             // |H vector|
    SymMat2 A1, A2;
};

/// Common partial-derivative bundle.
struct PatchDerivs {
    Vec4 X, Xu, Xv, Xuu, Xuv, Xvv;
};

/// Immersed patch X(u,v) in E^4 over a rectangle. Analytic partials and an
/// analytic normal frame are optional; anything missing is supplied by
/// finite differences (centered 5-point stencils, shifted one-sided near the
/// rectangle boundary) and Gram-Schmidt.
struct Patch {
    std::function<Vec4(double, double)> X;
    double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;

    std::function<Vec4(double, double)> Xu, Xv, Xuu, Xuv, Xvv;          // optional
    std::function<std::array<Vec4, 2>(double, double)> normal_frame;     // optional
};

/// du- and dv-th mixed partial, du + dv <= 3. Uses the analytic slot when
/// present, otherwise tensor-product finite differences with the step policy
/// of fd_step applied to the total order.
Vec4 partial(const Patch& p, double u, double v, int du, int dv);

PatchDerivs partials(const Patch& p, double u, double v);

FirstForm first_form(const Patch& p, double u, double v);
SecondForm second_form(const Patch& p, double u, double v);
CurvaturePoint curvature(const Patch& p, double u, double v);

}  // namespace meridian

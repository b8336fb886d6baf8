#include "meridian/patch.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "meridian/errors.hpp"
#include "meridian/numerics.hpp"

namespace meridian {

namespace {

const std::function<Vec4(double, double)>* analytic_slot(const Patch& p, int du, int dv) {
    if (du == 1 && dv == 0 && p.Xu) return &p.Xu;
    if (du == 0 && dv == 1 && p.Xv) return &p.Xv;
    if (du == 2 && dv == 0 && p.Xuu) return &p.Xuu;
    if (du == 1 && dv == 1 && p.Xuv) return &p.Xuv;
    if (du == 0 && dv == 2 && p.Xvv) return &p.Xvv;
    return nullptr;
}

struct Frame2 {
    Vec4 x1, x2;     // orthonormal tangent directions
    double E, F, G;  // raw first-form coefficients
    double n2;       // |X_v - (F/E) X_u|
};

Frame2 tangent_frame(const PatchDerivs& d) {
    Frame2 fr;
    fr.E = dot(d.Xu, d.Xu);
    fr.F = dot(d.Xu, d.Xv);
    fr.G = dot(d.Xv, d.Xv);
    const double W2 = fr.E * fr.G - fr.F * fr.F;
    if (!(W2 >= 1e-10)) throw NonRegular("patch: W^2 = EG - F^2 below 1e-10");
    fr.x1 = d.Xu / std::sqrt(fr.E);
    const Vec4 y = d.Xv - d.Xu * (fr.F / fr.E);
    fr.n2 = norm(y);
    fr.x2 = y / fr.n2;
    return fr;
}

SecondForm second_form_from(const Patch& p, const PatchDerivs& d, double u, double v) {
    SecondForm sf;
    if (p.normal_frame) {
        const auto N = p.normal_frame(u, v);
        sf.N1 = N[0];
        sf.N2 = N[1];
    } else {
        const std::vector<Vec4> normals = gram_schmidt({d.Xu, d.Xv});
        sf.N1 = normals[0];
        sf.N2 = normals[1];
    }
    sf.c1 = {dot(d.Xuu, sf.N1), dot(d.Xuv, sf.N1), dot(d.Xvv, sf.N1)};
    sf.c2 = {dot(d.Xuu, sf.N2), dot(d.Xuv, sf.N2), dot(d.Xvv, sf.N2)};
    return sf;
}

SymMat2 shape_operator(const SecondFormCoeffs& c, const Frame2& fr) {
    // <h(x_i, x_j), N_k> with x1 = X_u/sqrt(E), x2 = (X_v - (F/E) X_u)/n2
    const double fe = fr.F / fr.E;
    SymMat2 A;
    A.m11 = c.c11 / fr.E;
    A.m12 = (c.c12 - fe * c.c11) / (std::sqrt(fr.E) * fr.n2);
    A.m22 = (c.c22 - 2.0 * fe * c.c12 + fe * fe * c.c11) / (fr.n2 * fr.n2);
    return A;
}

CurvaturePoint curvature_from(const PatchDerivs& d, const SecondForm& sf) {
    const Frame2 fr = tangent_frame(d);
    const double W2 = fr.E * fr.G - fr.F * fr.F;

    CurvaturePoint out;
    out.K = (sf.c1.c11 * sf.c1.c22 - sf.c1.c12 * sf.c1.c12 +
             sf.c2.c11 * sf.c2.c22 - sf.c2.c12 * sf.c2.c12) / W2;
    out.H1 = (sf.c1.c11 * fr.G + sf.c1.c22 * fr.E - 2.0 * sf.c1.c12 * fr.F) / (2.0 * W2);
    out.H2 = (sf.c2.c11 * fr.G + sf.c2.c22 * fr.E - 2.0 * sf.c2.c12 * fr.F) / (2.0 * W2);
    out.H = std::hypot(out.H1, out.H2);
    out.A1 = shape_operator(sf.c1, fr);
    out.A2 = shape_operator(sf.c2, fr);
    return out;
}

}  // namespace

Vec4 partial(const Patch& p, double u, double v, int du, int dv) {
    if (du + dv == 0) return p.X(u, v);
    if (du + dv > 3) throw GeomError("patch partial: order above 3 unsupported");
    if (const auto* slot = analytic_slot(p, du, dv)) return (*slot)(u, v);

    const int total = du + dv;
    if (dv == 0) {
        const FdStencil s = fd_stencil(u, du, fd_step(total, u), p.u0, p.u1);
        Vec4 acc;
        for (std::size_t i = 0; i < s.nodes.size(); ++i)
            acc = acc + p.X(s.nodes[i], v) * s.weights[i];
        return acc;
    }
    if (du == 0) {
        const FdStencil s = fd_stencil(v, dv, fd_step(total, v), p.v0, p.v1);
        Vec4 acc;
        for (std::size_t i = 0; i < s.nodes.size(); ++i)
            acc = acc + p.X(u, s.nodes[i]) * s.weights[i];
        return acc;
    }
    // The tensor product divides round-off by hu^du * hv^dv, like a single
    // stencil of the combined order, so it gets the next order's wider step.
    const int step_order = std::min(3, total + 1);
    const FdStencil su = fd_stencil(u, du, fd_step(step_order, u), p.u0, p.u1);
    const FdStencil sv = fd_stencil(v, dv, fd_step(step_order, v), p.v0, p.v1);
    Vec4 acc;
    for (std::size_t i = 0; i < su.nodes.size(); ++i) {
        Vec4 row;
        for (std::size_t j = 0; j < sv.nodes.size(); ++j)
            row = row + p.X(su.nodes[i], sv.nodes[j]) * sv.weights[j];
        acc = acc + row * su.weights[i];
    }
    return acc;
}

PatchDerivs partials(const Patch& p, double u, double v) {
    PatchDerivs d;
    d.X = p.X(u, v);
    d.Xu = partial(p, u, v, 1, 0);
    d.Xv = partial(p, u, v, 0, 1);
    d.Xuu = partial(p, u, v, 2, 0);
    d.Xuv = partial(p, u, v, 1, 1);
    d.Xvv = partial(p, u, v, 0, 2);
    return d;
}

FirstForm first_form(const Patch& p, double u, double v) {
    PatchDerivs d;
    d.Xu = partial(p, u, v, 1, 0);
    d.Xv = partial(p, u, v, 0, 1);
    FirstForm ff;
    ff.E = dot(d.Xu, d.Xu);
    ff.F = dot(d.Xu, d.Xv);
    ff.G = dot(d.Xv, d.Xv);
    ff.W2 = ff.E * ff.G - ff.F * ff.F;
    if (!(ff.W2 >= 1e-10)) throw NonRegular("patch: W^2 = EG - F^2 below 1e-10");
    return ff;
}

SecondForm second_form(const Patch& p, double u, double v) {
    const PatchDerivs d = partials(p, u, v);
    (void)tangent_frame(d);  // regularity gate
    return second_form_from(p, d, u, v);
}

CurvaturePoint curvature(const Patch& p, double u, double v) {
    const PatchDerivs d = partials(p, u, v);
    return curvature_from(d, second_form_from(p, d, u, v));
}

}  // namespace meridian

#include "meridian/spherical_curve.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "meridian/errors.hpp"
#include "meridian/numerics.hpp"

namespace meridian {

namespace {

constexpr double kPi = 3.14159265358979323846;

double jet_speed(const Jet3Vec& j) {
    return std::sqrt(j[0].d1 * j[0].d1 + j[1].d1 * j[1].d1 + j[2].d1 * j[2].d1);
}

double jet_radius(const Jet3Vec& j) {
    return std::sqrt(j[0].f * j[0].f + j[1].f * j[1].f + j[2].f * j[2].f);
}

/// Arc-length table for reparametrized curves. s(w) is accumulated with a
/// composite Simpson rule of a fixed subdivision count per panel; the Newton
/// polish in w_at reuses the same rule anchored at the same nodes, so the
/// inverse map w(s) is smooth to rounding — no interpolation kinks leak into
/// the finite-difference stencils downstream.
struct ArcTable {
    std::function<Jet3Vec(double)> raw;  // jets in the raw parameter w
    std::vector<double> w_nodes, s_nodes, sigma_nodes;
    CubicHermite w_of_s;
    int simpson_k = 8;

    double sigma(double w) const {
        const double sp = jet_speed(raw(w));
        if (sp < 1e-10) throw ZeroSpeed("reparametrize_arclength: raw speed below 1e-10");
        return sp;
    }

    double simpson_with(double a, double b, int k) const {
        if (a == b) return 0.0;
        const double h = (b - a) / k;
        double acc = sigma(a) + sigma(b);
        for (int i = 1; i < k; ++i) acc += (i % 2 ? 4.0 : 2.0) * sigma(a + i * h);
        return acc * h / 3.0;
    }

    double simpson(double a, double b) const { return simpson_with(a, b, simpson_k); }

    /// Inverse of s(w): monotone-cubic seed, then two Newton steps against
    /// the node-anchored Simpson rule (fixed iteration count keeps the map
    /// smooth in s).
    double w_at(double s) const {
        double w = w_of_s.eval(s);
        auto it = std::upper_bound(s_nodes.begin(), s_nodes.end(), s);
        std::size_t i = static_cast<std::size_t>(it - s_nodes.begin());
        if (i == 0) i = 1;
        if (i >= s_nodes.size()) i = s_nodes.size() - 1;
        --i;
        for (int iter = 0; iter < 2; ++iter) {
            const double sw = s_nodes[i] + simpson(w_nodes[i], w);
            w -= (sw - s) / sigma(w);
            w = std::min(std::max(w, w_nodes.front()), w_nodes.back());
        }
        return w;
    }
};

std::shared_ptr<ArcTable> build_table(std::function<Jet3Vec(double)> raw,
                                      std::vector<double> w_nodes) {
    auto T = std::make_shared<ArcTable>();
    T->raw = std::move(raw);
    T->w_nodes = std::move(w_nodes);
    const std::size_t N = T->w_nodes.size();

    T->sigma_nodes.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        const Jet3Vec j = T->raw(T->w_nodes[i]);
        if (std::abs(jet_radius(j) - 1.0) > 1e-9)
            throw OffSphere("reparametrize_arclength: raw curve leaves S^2 beyond 1e-9");
        const double sp = jet_speed(j);
        if (sp < 1e-10) throw ZeroSpeed("reparametrize_arclength: raw speed below 1e-10");
        T->sigma_nodes[i] = sp;
    }

    // Adapt the per-panel subdivision count to the integrand: double it until
    // step-doubling stalls at rounding level on the worst probe panel. One
    // global count for every panel keeps s(w) and its inverse smooth.
    const std::size_t stride = std::max<std::size_t>(1, (N - 1) / 64);
    int k = 4;
    for (; k < 64; k *= 2) {
        double worst = 0.0;
        for (std::size_t i = 0; i + 1 < N; i += stride) {
            const double a = T->w_nodes[i], b = T->w_nodes[i + 1];
            worst = std::max(worst, std::abs(T->simpson_with(a, b, k) - T->simpson_with(a, b, 2 * k)));
        }
        if (worst < 1e-15) break;
    }
    T->simpson_k = k;

    T->s_nodes.resize(N);
    T->s_nodes[0] = 0.0;
    for (std::size_t i = 0; i + 1 < N; ++i)
        T->s_nodes[i + 1] = T->s_nodes[i] + T->simpson(T->w_nodes[i], T->w_nodes[i + 1]);

    // consistency check against an independent adaptive integrator
    const double total = integrate_rk4([T](double w) { return T->sigma(w); },
                                       T->w_nodes.front(), T->w_nodes.back(), 1e-12);
    if (std::abs(total - T->s_nodes.back()) > 1e-8 * std::max(1.0, std::abs(total)))
        throw GeomError("reparametrize_arclength: arc-length accumulation inconsistent");

    std::vector<double> inv_slopes(N);
    for (std::size_t i = 0; i < N; ++i) inv_slopes[i] = 1.0 / T->sigma_nodes[i];
    T->w_of_s = CubicHermite(T->s_nodes, T->w_nodes, inv_slopes);
    return T;
}

void shift_s(ArcTable& T, double s0) {
    for (double& s : T.s_nodes) s -= s0;
    std::vector<double> inv_slopes(T.s_nodes.size());
    for (std::size_t i = 0; i < T.s_nodes.size(); ++i) inv_slopes[i] = 1.0 / T.sigma_nodes[i];
    T.w_of_s = CubicHermite(T.s_nodes, T.w_nodes, inv_slopes);
}

/// Chain rule from raw-parameter jets to arc-length jets at s.
Jet3Vec jets_in_s(const ArcTable& T, double s) {
    const double w = T.w_at(s);
    const Jet3Vec R = T.raw(w);
    double p0 = 0.0, p1 = 0.0, p2 = 0.0;  // p = <r_w, r_w> and derivatives
    for (int c = 0; c < 3; ++c) {
        p0 += R[c].d1 * R[c].d1;
        p1 += 2.0 * R[c].d1 * R[c].d2;
        p2 += 2.0 * (R[c].d2 * R[c].d2 + R[c].d1 * R[c].d3);
    }
    const double sig = std::sqrt(p0);
    const double sig1 = p1 / (2.0 * sig);
    const double sig2 = (p2 - 2.0 * sig1 * sig1) / (2.0 * sig);
    const double ws = 1.0 / sig;
    const double wss = -sig1 / (sig * sig * sig);
    const double wsss = (3.0 * sig1 * sig1 - sig * sig2) / (sig * sig * sig * sig * sig);
    Jet3Vec out;
    for (int c = 0; c < 3; ++c)
        out[c] = Jet{R[c].f,
                     R[c].d1 * ws,
                     R[c].d2 * ws * ws + R[c].d1 * wss,
                     R[c].d3 * ws * ws * ws + 3.0 * R[c].d2 * ws * wss + R[c].d1 * wsss};
    return out;
}

std::function<Jet3Vec(double)> fd_jets_of(std::function<Vec3(double)> raw, double w0, double w1) {
    return [raw = std::move(raw), w0, w1](double w) {
        Jet3Vec out;
        for (int c = 0; c < 3; ++c) {
            auto comp = [&raw, c](double t) {
                const Vec3 p = raw(t);
                return c == 0 ? p.x : c == 1 ? p.y : p.z;
            };
            out[c] = Jet{comp(w),
                         fd_derivative(comp, w, 1, w0, w1),
                         fd_derivative(comp, w, 2, w0, w1),
                         fd_derivative(comp, w, 3, w0, w1)};
        }
        return out;
    };
}

std::vector<double> nodes_through_zero(double w_lo, double w_hi, int n_min) {
    // node set with 0 included exactly, spacing roughly uniform
    const double total = w_hi - w_lo;
    const int n_panels = std::max(n_min - 1, 8);
    int n_neg = static_cast<int>(std::ceil((0.0 - w_lo) / total * n_panels));
    n_neg = std::max(1, std::min(n_panels - 1, n_neg));
    std::vector<double> left = linspace_closed(w_lo, 0.0, n_neg + 1);
    std::vector<double> right = linspace_closed(0.0, w_hi, n_panels - n_neg + 1);
    left.insert(left.end(), right.begin() + 1, right.end());
    return left;
}

}  // namespace

SphericalCurve SphericalCurve::great_circle() {
    auto jets = [](double v) {
        const Jet J = Jet::variable(v);
        return Jet3Vec{cos(J), sin(J), Jet::constant(0.0)};
    };
    return SphericalCurve(CurveKind::GreatCircle, -1e9, 1e9, jets);
}

SphericalCurve SphericalCurve::small_circle(double theta0) {
    if (!(theta0 > 0.0 && theta0 < kPi))
        throw GeomError("small_circle: theta0 must lie in (0, pi)");
    const double s0 = std::sin(theta0), c0 = std::cos(theta0);
    auto jets = [s0, c0](double v) {
        const Jet J = Jet::variable(v) / s0;
        return Jet3Vec{cos(J) * s0, sin(J) * s0, Jet::constant(c0)};
    };
    return SphericalCurve(CurveKind::SmallCircle, -1e9, 1e9, jets);
}

SphericalCurve SphericalCurve::spiral(double slope, double s_lo, double s_hi) {
    if (s_lo >= s_hi) throw GeomError("spiral: need s_lo < s_hi");
    auto raw = [slope](double w) {
        const Jet J = Jet::variable(w);
        const Jet th = J * slope + kPi / 2.0;
        return Jet3Vec{sin(th) * cos(J), sin(th) * sin(J), cos(th)};
    };
    // probe outward from w = 0 until the coarse arc length covers the
    // requested range plus stencil margin
    const double margin = 0.2;
    auto coarse = [&raw](double a, double b) {
        const int k = 32;
        const double h = (b - a) / k;
        auto sig = [&raw](double w) { return jet_speed(raw(w)); };
        double acc = sig(a) + sig(b);
        for (int i = 1; i < k; ++i) acc += (i % 2 ? 4.0 : 2.0) * sig(a + i * h);
        return acc * h / 3.0;
    };
    const double step = 0.25;
    double w_hi = 0.0, s_acc = 0.0;
    for (int guard = 0; s_acc < s_hi + margin && guard < 100000; ++guard) {
        s_acc += coarse(w_hi, w_hi + step);
        w_hi += step;
    }
    double w_lo = 0.0;
    s_acc = 0.0;
    for (int guard = 0; s_acc > s_lo - margin && guard < 100000; ++guard) {
        s_acc -= coarse(w_lo - step, w_lo);
        w_lo -= step;
    }

    auto T = build_table(raw, nodes_through_zero(w_lo, w_hi, 2049));
    // anchor v = 0 at w = 0 (a node by construction)
    const auto it = std::lower_bound(T->w_nodes.begin(), T->w_nodes.end(), 0.0);
    shift_s(*T, T->s_nodes[static_cast<std::size_t>(it - T->w_nodes.begin())]);
    if (T->s_nodes.front() > s_lo - 0.1 || T->s_nodes.back() < s_hi + 0.1)
        throw GeomError("spiral: arc-length table does not cover the requested range");
    auto jets = [T](double v) { return jets_in_s(*T, v); };
    return SphericalCurve(CurveKind::Reparametrized, s_lo, s_hi, jets);
}

SphericalCurve SphericalCurve::reparametrize_arclength(std::function<Vec3(double)> raw,
                                                       double w0, double w1) {
    return reparametrize_arclength(fd_jets_of(std::move(raw), w0, w1), w0, w1);
}

SphericalCurve SphericalCurve::reparametrize_arclength(std::function<Jet3Vec(double)> raw_jets,
                                                       double w0, double w1) {
    if (!(w0 < w1)) throw GeomError("reparametrize_arclength: need w0 < w1");
    auto T = build_table(std::move(raw_jets), linspace_closed(w0, w1, 2049));
    const double s_total = T->s_nodes.back();
    auto jets = [T](double v) { return jets_in_s(*T, v); };
    return SphericalCurve(CurveKind::Reparametrized, 0.0, s_total, jets);
}

Vec3 SphericalCurve::position(double v) const {
    const Jet3Vec j = jets_(v);
    return {j[0].f, j[1].f, j[2].f};
}

Jet3Vec SphericalCurve::jets(double v) const { return jets_(v); }

FrenetSample SphericalCurve::frenet(double v) const {
    const Jet3Vec j = jets_(v);
    if (std::abs(jet_radius(j) - 1.0) > 1e-9)
        throw OffSphere("frenet: curve point off S^2 beyond 1e-9");
    if (std::abs(jet_speed(j) - 1.0) > 1e-7)
        throw NotUnitSpeed("frenet: |r'| differs from 1 beyond 1e-7");

    Jet3Vec t, tp;
    for (int c = 0; c < 3; ++c) {
        t[c] = Jet{j[c].d1, j[c].d2, j[c].d3, 0.0};
        tp[c] = Jet{j[c].d2, j[c].d3, 0.0, 0.0};
    }
    const Jet3Vec n = cross(j, t);
    const Jet kap = dot(tp, n);  // trustworthy through first order

    FrenetSample out;
    out.r = {j[0].f, j[1].f, j[2].f};
    out.t = {t[0].f, t[1].f, t[2].f};
    out.n = {n[0].f, n[1].f, n[2].f};
    out.kappa = kap.f;
    out.kappa_prime = kap.d1;
    return out;
}

}  // namespace meridian

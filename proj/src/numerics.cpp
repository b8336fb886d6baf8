#include "meridian/numerics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "meridian/errors.hpp"

namespace meridian {

std::vector<double> fornberg_weights(double x0, const std::vector<double>& xs, int m) {
    const int n = static_cast<int>(xs.size()) - 1;
    assert(n >= m && m >= 0);
    // B. Fornberg, "Generation of finite difference formulas on arbitrarily
    // spaced grids", Math. Comp. 51 (1988).
    std::vector<std::vector<double>> c(static_cast<std::size_t>(n) + 1,
                                       std::vector<double>(static_cast<std::size_t>(m) + 1, 0.0));
    double c1 = 1.0;
    double c4 = xs[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = xs[static_cast<std::size_t>(i)] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                        c1 * (k * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] -
                              c5 * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]) / c2;
                c[static_cast<std::size_t>(i)][0] = -c1 * c5 * c[static_cast<std::size_t>(i - 1)][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                    (c4 * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
                     k * c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)]) / c3;
            c[static_cast<std::size_t>(j)][0] = c4 * c[static_cast<std::size_t>(j)][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) w[i] = c[i][static_cast<std::size_t>(m)];
    return w;
}

double fd_step(int order, double coordinate) {
    const double scale = std::max(1.0, std::abs(coordinate));
    switch (order) {
        case 1: return 1e-5 * scale;
        case 2: return 5e-4 * scale;
        default: return 1e-3 * scale;
    }
}

FdStencil fd_stencil(double x, int order, double h, double lo, double hi) {
    // 5 nodes for order <= 2, 6 when shifted or third order (keeps one-sided
    // stencils at least third-order accurate).
    const bool centered_fits = (x - 2.0 * h >= lo) && (x + 2.0 * h <= hi);
    int npts = (order >= 3) ? 6 : 5;
    if (centered_fits && order < 3) npts = 5;

    FdStencil st;
    st.nodes.resize(static_cast<std::size_t>(npts));
    if (centered_fits && npts == 5) {
        for (int i = 0; i < 5; ++i) st.nodes[static_cast<std::size_t>(i)] = x + (i - 2) * h;
    } else if (centered_fits && npts == 6) {
        // order-3 centered-ish stencil; needs x +- 3h to fit, else shift
        double start = x - 3.0 * h;
        if (start < lo) start = lo;
        if (start + 5.0 * h > hi) start = hi - 5.0 * h;
        for (int i = 0; i < 6; ++i) st.nodes[static_cast<std::size_t>(i)] = start + i * h;
    } else {
        // one-sided: slide a uniform block inside [lo, hi]
        double start = x - (npts - 1) * 0.5 * h;
        if (start < lo) start = lo;
        if (start + (npts - 1) * h > hi) start = hi - (npts - 1) * h;
        if (start < lo)
            throw NonRegular("fd_stencil: domain too small for the stencil width");
        for (int i = 0; i < npts; ++i) st.nodes[static_cast<std::size_t>(i)] = start + i * h;
    }
    st.weights = fornberg_weights(x, st.nodes, order);
    return st;
}

double fd_derivative(const std::function<double(double)>& f, double x, int order,
                     double lo, double hi) {
    const FdStencil st = fd_stencil(x, order, fd_step(order, x), lo, hi);
    double acc = 0.0;
    for (std::size_t i = 0; i < st.nodes.size(); ++i) acc += st.weights[i] * f(st.nodes[i]);
    return acc;
}

namespace {

// 15-point Kronrod nodes/weights with embedded 7-point Gauss rule, on [-1,1].
constexpr double kron_x[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};
constexpr double kron_w[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
constexpr double gauss_w[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    double kres = 0.0, gres = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double fx = f(c + hw * kron_x[i]);
        kres += kron_w[i] * fx;
        if (i % 2 == 1) gres += gauss_w[i / 2] * fx;
    }
    kres *= hw;
    gres *= hw;
    return {kres, std::abs(kres - gres)};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double tol, int depth) {
    const PanelResult r = gk15(f, a, b);
    if (r.error <= tol || depth >= 40) return r.value;
    const double m = 0.5 * (a + b);
    return integrate_rec(f, a, m, 0.5 * tol, depth + 1) +
           integrate_rec(f, m, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    return integrate_rec(f, a, b, abs_tol, 0);
}

double composite_simpson(const std::function<double(double)>& f, double a, double b, int k) {
    if (a == b) return 0.0;
    const double h = (b - a) / k;
    double acc = f(a) + f(b);
    for (int i = 1; i < k; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return acc * h / 3.0;
}

CumulativeIntegral::CumulativeIntegral(std::function<double(double)> phi,
                                       std::vector<double> nodes, double F0)
    : phi_(std::move(phi)), xs_(std::move(nodes)) {
    if (xs_.size() < 2) throw std::invalid_argument("CumulativeIntegral: need >= 2 nodes");
    const std::size_t stride = std::max<std::size_t>(1, (xs_.size() - 1) / 64);
    for (k_ = 4; k_ < 64; k_ *= 2) {
        double worst = 0.0;
        for (std::size_t i = 0; i + 1 < xs_.size(); i += stride)
            worst = std::max(worst, std::abs(composite_simpson(phi_, xs_[i], xs_[i + 1], k_) -
                                             composite_simpson(phi_, xs_[i], xs_[i + 1], 2 * k_)));
        if (worst < 1e-15) break;
    }
    Fs_.resize(xs_.size());
    Fs_[0] = F0;
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
        Fs_[i + 1] = Fs_[i] + composite_simpson(phi_, xs_[i], xs_[i + 1], k_);
    std::vector<double> slopes(xs_.size());
    for (std::size_t i = 0; i < xs_.size(); ++i) slopes[i] = phi_(xs_[i]);
    interp_ = CubicHermite(xs_, Fs_, slopes);
}

double CumulativeIntegral::eval(double x) const {
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i == 0) i = 1;
    if (i >= xs_.size()) i = xs_.size() - 1;
    --i;
    return Fs_[i] + composite_simpson(phi_, xs_[i], x, k_);
}

double integrate_rk4(const std::function<double(double)>& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    // y' = f(x); one RK4 step over [x, x+h] reduces to Simpson's rule.
    const auto step = [&f](double x, double h) {
        const double k1 = f(x);
        const double k23 = f(x + 0.5 * h);
        const double k4 = f(x + h);
        return h / 6.0 * (k1 + 4.0 * k23 + k4);
    };
    double acc = 0.0;
    double x = a;
    double h = (b - a) / 8.0;
    const double dir = (b > a) ? 1.0 : -1.0;
    int guard = 0;
    while (dir * (b - x) > 0.0 && guard++ < 1000000) {
        if (dir * (x + h - b) > 0.0) h = b - x;
        const double full = step(x, h);
        const double halves = step(x, 0.5 * h) + step(x + 0.5 * h, 0.5 * h);
        const double err = std::abs(halves - full) / 15.0;
        const double allowed = abs_tol * std::abs(h) / std::abs(b - a);
        if (err <= allowed || std::abs(h) < 1e-13 * std::abs(b - a)) {
            // Richardson extrapolated value
            acc += halves + (halves - full) / 15.0;
            x += h;
            if (err < 0.25 * allowed) h *= 1.5;
        } else {
            h *= 0.5;
        }
    }
    return acc;
}

CubicHermite::CubicHermite(std::vector<double> xs, std::vector<double> ys, std::vector<double> ds)
    : xs_(std::move(xs)), ys_(std::move(ys)), ds_(std::move(ds)) {
    if (xs_.size() < 2 || xs_.size() != ys_.size() || xs_.size() != ds_.size())
        throw std::invalid_argument("CubicHermite: inconsistent node data");
    for (std::size_t i = 1; i < xs_.size(); ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw std::invalid_argument("CubicHermite: nodes must be strictly increasing");
}

std::size_t CubicHermite::panel(double x) const {
    if (x < xs_.front() - clamp_slack || x > xs_.back() + clamp_slack)
        throw std::out_of_range("CubicHermite: query outside node range");
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i == 0) i = 1;
    if (i >= xs_.size()) i = xs_.size() - 1;
    return i - 1;
}

double CubicHermite::eval(double x) const {
    const std::size_t i = panel(x);
    const double h = xs_[i + 1] - xs_[i];
    const double t = (x - xs_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * ys_[i] + h10 * h * ds_[i] + h01 * ys_[i + 1] + h11 * h * ds_[i + 1];
}

double CubicHermite::deriv(double x) const {
    const std::size_t i = panel(x);
    const double h = xs_[i + 1] - xs_[i];
    const double t = (x - xs_[i]) / h;
    const double t2 = t * t;
    const double h00 = (6 * t2 - 6 * t) / h;
    const double h10 = 3 * t2 - 4 * t + 1;
    const double h01 = (-6 * t2 + 6 * t) / h;
    const double h11 = 3 * t2 - 2 * t;
    return h00 * ys_[i] + h10 * ds_[i] + h01 * ys_[i + 1] + h11 * ds_[i + 1];
}

double CubicHermite::deriv2(double x) const {
    const std::size_t i = panel(x);
    const double h = xs_[i + 1] - xs_[i];
    const double t = (x - xs_[i]) / h;
    const double h00 = (12 * t - 6) / (h * h);
    const double h10 = (6 * t - 4) / h;
    const double h01 = (-12 * t + 6) / (h * h);
    const double h11 = (6 * t - 2) / h;
    return h00 * ys_[i] + h10 * ds_[i] + h01 * ys_[i + 1] + h11 * ds_[i + 1];
}

bool CubicHermite::slopes_one_signed() const {
    bool pos = true, neg = true;
    for (double d : ds_) {
        pos = pos && d > 0.0;
        neg = neg && d < 0.0;
    }
    return pos || neg;
}

std::vector<double> linspace_interior(double a, double b, int n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    const double h = (b - a) / (n + 1);
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = a + (i + 1) * h;
    return xs;
}

std::vector<double> linspace_closed(double a, double b, int n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    if (n == 1) {
        xs[0] = a;
        return xs;
    }
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = a + i * h;
    xs.back() = b;
    return xs;
}

double sample_std(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    return std::sqrt(var / static_cast<double>(xs.size()));
}

double max_abs(const std::vector<double>& xs) {
    double m = 0.0;
    for (double x : xs) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace meridian

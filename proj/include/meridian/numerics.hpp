#pragma once

#include <functional>
#include <vector>

namespace meridian {

/// Finite-difference weights for the m-th derivative at x0 from arbitrary
/// nodes xs (Fornberg's algorithm). Exact for polynomials of degree
/// xs.size()-1, so the same routine serves centered and one-sided stencils.
std::vector<double> fornberg_weights(double x0, const std::vector<double>& xs, int m);

/// Nodes and weights of a 1-D finite-difference stencil for the m-th
/// derivative at x, step h, clamped into [lo, hi]. Centered on 5 points when
/// the domain allows, shifted one-sided otherwise.
struct FdStencil {
    std::vector<double> nodes;
    std::vector<double> weights;
};
FdStencil fd_stencil(double x, int order, double h, double lo, double hi);

/// Relative finite-difference steps per derivative order, balancing
/// truncation against round-off for double precision: 1e-5 (first order),
/// 5e-4 (second), 1e-3 (third). Scaled by max(1, |coordinate|).
double fd_step(int order, double coordinate);

/// m-th derivative of a scalar function on [lo, hi] by the clamped stencil.
double fd_derivative(const std::function<double(double)>& f, double x, int order,
                     double lo, double hi);

/// Adaptive Gauss-Kronrod (G7/K15) quadrature to absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10);

/// Composite Simpson rule with k sub-intervals (k even). Works for b < a.
double composite_simpson(const std::function<double(double)>& f, double a, double b, int k);

/// Integrates y' = f(x) from a to b with classical RK4 and step-doubling
/// error control (adaptive fourth-order integrator).
double integrate_rk4(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-13);

/// Cubic Hermite interpolant on a strictly increasing node set with caller
/// supplied slopes. Piecewise C^1; evaluation clamps queries within
/// `clamp_slack` of the end nodes.
class CubicHermite {
public:
    CubicHermite() = default;
    CubicHermite(std::vector<double> xs, std::vector<double> ys, std::vector<double> ds);

    double eval(double x) const;
    double deriv(double x) const;
    double deriv2(double x) const;

    double x_front() const { return xs_.front(); }
    double x_back() const { return xs_.back(); }
    std::size_t size() const { return xs_.size(); }

    /// True when all supplied slopes share one strict sign (sufficient for
    /// monotonicity of smooth well-resolved data).
    bool slopes_one_signed() const;

private:
    std::vector<double> xs_, ys_, ds_;
    static constexpr double clamp_slack = 1e-9;

    std::size_t panel(double x) const;
};

/// Smooth cumulative integral F(x) = F0 + integral of phi from nodes.front()
/// to x. Node values are accumulated with a composite Simpson rule whose
/// subdivision count is chosen once (doubled until step-doubling stalls at
/// rounding level); eval() refines from the containing panel's left node with
/// the same rule, so F is smooth to rounding — interpolation kinks never
/// reach finite-difference stencils applied on top. The Hermite table is kept
/// for inspection (slopes are the integrand at the nodes).
class CumulativeIntegral {
public:
    CumulativeIntegral() = default;
    CumulativeIntegral(std::function<double(double)> phi, std::vector<double> nodes, double F0);

    double eval(double x) const;
    const CubicHermite& interpolant() const { return interp_; }
    int subdivision() const { return k_; }

private:
    std::function<double(double)> phi_;
    std::vector<double> xs_, Fs_;
    CubicHermite interp_;
    int k_ = 8;
};

/// n points strictly inside (a, b): a + (i+1) (b-a)/(n+1).
std::vector<double> linspace_interior(double a, double b, int n);

/// n points including both endpoints.
std::vector<double> linspace_closed(double a, double b, int n);

/// Population standard deviation.
double sample_std(const std::vector<double>& xs);

double max_abs(const std::vector<double>& xs);

}  // namespace meridian

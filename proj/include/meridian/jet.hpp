#pragma once

#include <array>
#include <cmath>

#include "meridian/errors.hpp"

namespace meridian {

/// Value of a scalar function together with its first three derivatives at a
/// point (truncated Taylor arithmetic in one variable). Used to evaluate
/// closed-form curves and profiles with machine-precision derivatives instead
/// of finite differences.
struct Jet {
    double f = 0.0;   // value
    double d1 = 0.0;  // first derivative
    double d2 = 0.0;  // second derivative
    double d3 = 0.0;  // third derivative

    static constexpr Jet constant(double c) { return {c, 0.0, 0.0, 0.0}; }
    static constexpr Jet variable(double x) { return {x, 1.0, 0.0, 0.0}; }

    constexpr Jet operator+(const Jet& o) const { return {f + o.f, d1 + o.d1, d2 + o.d2, d3 + o.d3}; }
    constexpr Jet operator-(const Jet& o) const { return {f - o.f, d1 - o.d1, d2 - o.d2, d3 - o.d3}; }
    constexpr Jet operator-() const { return {-f, -d1, -d2, -d3}; }

    // Leibniz rule through third order.
    constexpr Jet operator*(const Jet& o) const {
        return {f * o.f,
                d1 * o.f + f * o.d1,
                d2 * o.f + 2.0 * d1 * o.d1 + f * o.d2,
                d3 * o.f + 3.0 * d2 * o.d1 + 3.0 * d1 * o.d2 + f * o.d3};
    }

    constexpr Jet operator+(double c) const { return {f + c, d1, d2, d3}; }
    constexpr Jet operator-(double c) const { return {f - c, d1, d2, d3}; }
    constexpr Jet operator*(double c) const { return {f * c, d1 * c, d2 * c, d3 * c}; }
    constexpr Jet operator/(double c) const { return {f / c, d1 / c, d2 / c, d3 / c}; }

    Jet operator/(const Jet& o) const;
};

constexpr Jet operator+(double c, const Jet& j) { return j + c; }
constexpr Jet operator-(double c, const Jet& j) { return {c - j.f, -j.d1, -j.d2, -j.d3}; }
constexpr Jet operator*(double c, const Jet& j) { return j * c; }

/// Chain rule (Faa di Bruno) for outer derivatives F, F', F'', F''' evaluated
/// at g.f.
constexpr Jet compose(const std::array<double, 4>& F, const Jet& g) {
    return {F[0],
            F[1] * g.d1,
            F[2] * g.d1 * g.d1 + F[1] * g.d2,
            F[3] * g.d1 * g.d1 * g.d1 + 3.0 * F[2] * g.d1 * g.d2 + F[1] * g.d3};
}

inline Jet sin(const Jet& g) {
    const double s = std::sin(g.f), c = std::cos(g.f);
    return compose({s, c, -s, -c}, g);
}

inline Jet cos(const Jet& g) {
    const double s = std::sin(g.f), c = std::cos(g.f);
    return compose({c, -s, -c, s}, g);
}

inline Jet sinh(const Jet& g) {
    const double s = std::sinh(g.f), c = std::cosh(g.f);
    return compose({s, c, s, c}, g);
}

inline Jet cosh(const Jet& g) {
    const double s = std::sinh(g.f), c = std::cosh(g.f);
    return compose({c, s, c, s}, g);
}

inline Jet exp(const Jet& g) {
    const double e = std::exp(g.f);
    return compose({e, e, e, e}, g);
}

inline Jet log(const Jet& g) {
    if (g.f <= 0.0) throw GeomError("log of non-positive jet value");
    const double x = g.f;
    return compose({std::log(x), 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x)}, g);
}

inline Jet sqrt(const Jet& g) {
    if (g.f <= 0.0) throw GeomError("sqrt of non-positive jet value");
    const double r = std::sqrt(g.f);
    return compose({r, 0.5 / r, -0.25 / (r * g.f), 0.375 / (r * g.f * g.f)}, g);
}

inline Jet inv(const Jet& g) {
    if (g.f == 0.0) throw GeomError("division by zero jet value");
    const double x = g.f;
    return compose({1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x), -6.0 / (x * x * x * x)}, g);
}

inline Jet Jet::operator/(const Jet& o) const { return *this * inv(o); }

inline Jet operator/(double c, const Jet& j) { return inv(j) * c; }

/// b^e with integer fast path; general case via exp(e log b), which requires
/// b > 0.
inline Jet pow(const Jet& base, double expo) {
    const double n = std::nearbyint(expo);
    if (n == expo && std::abs(n) <= 64.0) {
        long k = static_cast<long>(n);
        if (k == 0) return Jet::constant(1.0);
        Jet acc = Jet::constant(1.0);
        const bool neg = k < 0;
        for (long i = 0; i < (neg ? -k : k); ++i) acc = acc * base;
        return neg ? inv(acc) : acc;
    }
    return exp(log(base) * expo);
}

inline Jet pow(const Jet& base, const Jet& expo) {
    if (expo.d1 == 0.0 && expo.d2 == 0.0 && expo.d3 == 0.0) return pow(base, expo.f);
    return exp(log(base) * expo);
}

/// 3-vector of jets: a curve value with derivatives to order 3.
using Jet3Vec = std::array<Jet, 3>;

inline Jet dot(const Jet3Vec& a, const Jet3Vec& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Jet3Vec cross(const Jet3Vec& a, const Jet3Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace meridian

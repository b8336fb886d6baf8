#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace meridian {

/// 3-vector in E^3 with plain value semantics.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// 4-vector in E^4.
struct Vec4 {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0, x4 = 0.0;

    constexpr Vec4() = default;
    constexpr Vec4(double a, double b, double c, double d) : x1(a), x2(b), x3(c), x4(d) {}

    constexpr Vec4 operator+(const Vec4& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3, x4 + o.x4}; }
    constexpr Vec4 operator-(const Vec4& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3, x4 - o.x4}; }
    constexpr Vec4 operator-() const { return {-x1, -x2, -x3, -x4}; }
    constexpr Vec4 operator*(double s) const { return {x1 * s, x2 * s, x3 * s, x4 * s}; }
    constexpr Vec4 operator/(double s) const { return {x1 / s, x2 / s, x3 / s, x4 / s}; }

    constexpr double operator[](std::size_t i) const {
        return i == 0 ? x1 : i == 1 ? x2 : i == 2 ? x3 : x4;
    }
};

constexpr Vec4 operator*(double s, const Vec4& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr double dot(const Vec4& a, const Vec4& b) {
    return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3 + a.x4 * b.x4;
}

/// Right-handed cross product in E^3.
constexpr Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double norm(const Vec4& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) { return v / norm(v); }
inline Vec4 normalized(const Vec4& v) { return v / norm(v); }

/// Embeds E^3 = span{e1,e2,e3} into E^4 by appending a zero fourth coordinate.
constexpr Vec4 lift(const Vec3& v) { return {v.x, v.y, v.z, 0.0}; }

constexpr Vec4 e4() { return {0.0, 0.0, 0.0, 1.0}; }

inline std::array<Vec4, 4> canonical_basis4() {
    return {Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}, Vec4{0, 0, 1, 0}, Vec4{0, 0, 0, 1}};
}

/// Symmetric 2x2 matrix (shape operators in an orthonormal tangent frame).
struct SymMat2 {
    double m11 = 0.0, m12 = 0.0, m22 = 0.0;

    constexpr double det() const { return m11 * m22 - m12 * m12; }
    constexpr double trace() const { return m11 + m22; }

    /// Action on tangent coordinates (x, y) in the orthonormal frame.
    constexpr std::array<double, 2> apply(double x, double y) const {
        return {m11 * x + m12 * y, m12 * x + m22 * y};
    }
};

/// Completes `basis` to an orthonormal frame of E^4 and returns the new
/// vectors only. Seeds are tried in order; a seed whose residual after
/// projection is shorter than `seed_skip_tol` is skipped, which makes the
/// returned frame deterministic. Throws DegenerateBasis when the Gram
/// determinant of `basis` falls below `gram_tol`.
std::vector<Vec4> gram_schmidt(const std::vector<Vec4>& basis,
                               const std::vector<Vec4>& seeds,
                               double gram_tol = 1e-10,
                               double seed_skip_tol = 1e-8);

/// Seeds default to the canonical basis e1..e4 in index order.
std::vector<Vec4> gram_schmidt(const std::vector<Vec4>& basis, double gram_tol = 1e-10);

}  // namespace meridian

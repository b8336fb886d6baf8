#include "meridian/euclid.hpp"

#include <cmath>

#include "meridian/errors.hpp"

namespace meridian {

namespace {

double gram_det(const std::vector<Vec4>& vs) {
    // Gram determinant via Cholesky-free expansion; sizes here are <= 4.
    const std::size_t n = vs.size();
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = dot(vs[i], vs[j]);
    // Gaussian elimination with partial pivoting, determinant accumulation.
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(g[i][k]) > std::abs(g[piv][k])) piv = i;
        if (piv != k) {
            std::swap(g[piv], g[k]);
            det = -det;
        }
        if (g[k][k] == 0.0) return 0.0;
        det *= g[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = g[i][k] / g[k][k];
            for (std::size_t j = k; j < n; ++j) g[i][j] -= f * g[k][j];
        }
    }
    return det;
}

Vec4 project_out(Vec4 v, const std::vector<Vec4>& onb) {
    for (const Vec4& e : onb) v = v - e * dot(v, e);
    return v;
}

}  // namespace

std::vector<Vec4> gram_schmidt(const std::vector<Vec4>& basis, const std::vector<Vec4>& seeds,
                               double gram_tol, double seed_skip_tol) {
    if (!basis.empty()) {
        const double g = gram_det(basis);
        if (std::abs(g) < gram_tol)
            throw DegenerateBasis("gram_schmidt: input vectors are numerically dependent");
    }
    std::vector<Vec4> onb;
    onb.reserve(4);
    for (const Vec4& b : basis) {
        Vec4 w = project_out(b, onb);
        const double n = norm(w);
        if (n < gram_tol)
            throw DegenerateBasis("gram_schmidt: basis vector collapsed during orthogonalization");
        onb.push_back(w * (1.0 / n));
    }
    std::vector<Vec4> completion;
    for (const Vec4& s : seeds) {
        if (onb.size() == 4) break;
        Vec4 w = project_out(s, onb);
        const double n = norm(w);
        if (n < seed_skip_tol) continue;  // seed already spanned; try the next one
        onb.push_back(w * (1.0 / n));
        completion.push_back(onb.back());
    }
    if (onb.size() != 4)
        throw DegenerateBasis("gram_schmidt: could not complete an orthonormal 4-frame");
    return completion;
}

std::vector<Vec4> gram_schmidt(const std::vector<Vec4>& basis, double gram_tol) {
    const auto canon = canonical_basis4();
    return gram_schmidt(basis, std::vector<Vec4>(canon.begin(), canon.end()), gram_tol, 1e-8);
}

}  // namespace meridian

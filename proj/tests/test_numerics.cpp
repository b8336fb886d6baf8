#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "meridian/numerics.hpp"

using namespace meridian;

TEST_CASE("fornberg weights reproduce the classic centered stencils") {
    const double h = 0.5;
    const std::vector<double> xs{-2 * h, -h, 0.0, h, 2 * h};

    const auto w1 = fornberg_weights(0.0, xs, 1);
    CHECK(w1[0] == doctest::Approx(1.0 / (12 * h)).epsilon(1e-13));
    CHECK(w1[1] == doctest::Approx(-8.0 / (12 * h)).epsilon(1e-13));
    CHECK(w1[2] == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(w1[3] == doctest::Approx(8.0 / (12 * h)).epsilon(1e-13));
    CHECK(w1[4] == doctest::Approx(-1.0 / (12 * h)).epsilon(1e-13));

    const auto w2 = fornberg_weights(0.0, xs, 2);
    CHECK(w2[0] == doctest::Approx(-1.0 / (12 * h * h)).epsilon(1e-13));
    CHECK(w2[2] == doctest::Approx(-30.0 / (12 * h * h)).epsilon(1e-13));
}

TEST_CASE("fornberg weights are exact on polynomials at scattered nodes") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> xs(6);
        for (auto& x : xs) x = dist(rng);
        std::sort(xs.begin(), xs.end());
        if (xs[1] - xs[0] < 1e-3 || xs[5] - xs[4] < 1e-3) continue;
        const double x0 = dist(rng);
        const auto w = fornberg_weights(x0, xs, 2);
        // d^2/dx^2 (x^4) = 12 x^2
        double acc = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) acc += w[i] * std::pow(xs[i], 4);
        CHECK(acc == doctest::Approx(12.0 * x0 * x0).epsilon(1e-8));
    }
}

TEST_CASE("fd_derivative hits analytic derivatives of sin") {
    const auto f = [](double x) { return std::sin(x); };
    const double x = 0.8;
    CHECK(fd_derivative(f, x, 1, -10, 10) == doctest::Approx(std::cos(x)).epsilon(1e-10));
    CHECK(fd_derivative(f, x, 2, -10, 10) == doctest::Approx(-std::sin(x)).epsilon(1e-7));
    CHECK(fd_derivative(f, x, 3, -10, 10) == doctest::Approx(-std::cos(x)).epsilon(1e-5));
}

TEST_CASE("fd_derivative slides one-sided at domain edges") {
    const auto f = [](double x) { return std::exp(x); };
    CHECK(fd_derivative(f, 0.0, 1, 0.0, 0.4) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(fd_derivative(f, 0.4, 1, 0.0, 0.4) ==
          doctest::Approx(std::exp(0.4)).epsilon(1e-8));
    CHECK(fd_derivative(f, 0.0, 2, 0.0, 0.4) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("fd_stencil refuses domains too small to hold the stencil") {
    CHECK_THROWS(fd_stencil(0.0, 1, 1e-5, 0.0, 1e-5));
}

TEST_CASE("fd_step scales with the coordinate") {
    CHECK(fd_step(1, 0.5) == doctest::Approx(1e-5));
    CHECK(fd_step(1, 200.0) == doctest::Approx(2e-3));
    CHECK(fd_step(2, 0.0) == doctest::Approx(5e-4));
    CHECK(fd_step(3, -3.0) == doctest::Approx(3e-3));
}

TEST_CASE("adaptive quadrature integrates standard integrals") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, 3.14159265358979323846) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    // reversed interval flips the sign
    CHECK(integrate([](double x) { return x * x; }, 1.0, 0.0) ==
          doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    // a narrow spike needs the adaptive subdivision
    CHECK(integrate([](double x) { return std::exp(-100.0 * x * x); }, -1.0, 1.0, 1e-13) ==
          doctest::Approx(std::sqrt(3.14159265358979323846) / 10.0).epsilon(1e-11));
}

TEST_CASE("integrate_rk4 agrees with adaptive quadrature") {
    const auto f = [](double x) { return std::cos(x) * std::exp(0.3 * x); };
    const double a = -0.7, b = 2.1;
    CHECK(integrate_rk4(f, a, b) == doctest::Approx(integrate(f, a, b, 1e-13)).epsilon(1e-10));
}

TEST_CASE("composite Simpson is exact for cubics and converges at order 4") {
    CHECK(composite_simpson([](double x) { return x * x * x; }, 0.0, 1.0, 2) ==
          doctest::Approx(0.25).epsilon(1e-15));
    const auto f = [](double x) { return std::sin(x); };
    const double exact = 1.0 - std::cos(1.0);
    const double e8 = std::fabs(composite_simpson(f, 0.0, 1.0, 8) - exact);
    const double e16 = std::fabs(composite_simpson(f, 0.0, 1.0, 16) - exact);
    CHECK(e16 < e8 / 12.0);
}

TEST_CASE("cubic Hermite interpolates sin to fourth order") {
    const auto xs = linspace_closed(0.0, 3.0, 21);
    std::vector<double> ys, ds;
    for (double x : xs) {
        ys.push_back(std::sin(x));
        ds.push_back(std::cos(x));
    }
    const CubicHermite h(xs, ys, ds);
    for (double x : linspace_closed(0.0, 3.0, 157)) {
        CHECK(h.eval(x) == doctest::Approx(std::sin(x)).epsilon(1e-6));
        CHECK(h.deriv(x) == doctest::Approx(std::cos(x)).epsilon(1e-4));
    }
    CHECK(h.slopes_one_signed() == false);
    CHECK_THROWS_AS(h.eval(3.5), std::out_of_range);
    CHECK(h.eval(3.0 + 1e-10) == doctest::Approx(std::sin(3.0)).epsilon(1e-8));
}

TEST_CASE("cumulative integral of cos is sin, smooth enough to difference") {
    const CumulativeIntegral F([](double x) { return std::cos(x); },
                               linspace_closed(0.0, 3.0, 65), 0.0);
    for (double x : linspace_closed(0.0, 3.0, 47))
        CHECK(F.eval(x) == doctest::Approx(std::sin(x)).epsilon(1e-13));

    // second finite difference across arbitrary points must see -sin, not
    // interpolation kinks
    for (double x : {0.31, 1.234567, 2.71}) {
        const double d2 = fd_derivative([&](double t) { return F.eval(t); }, x, 2, 0.0, 3.0);
        CHECK(d2 == doctest::Approx(-std::sin(x)).epsilon(1e-6));
    }
}

TEST_CASE("grid helpers") {
    const auto in = linspace_interior(0.0, 1.0, 9);
    CHECK(in.size() == 9);
    CHECK(in.front() == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(in.back() == doctest::Approx(0.9).epsilon(1e-15));

    const auto cl = linspace_closed(-1.0, 1.0, 5);
    CHECK(cl.size() == 5);
    CHECK(cl.front() == -1.0);
    CHECK(cl.back() == 1.0);
    CHECK(cl[2] == doctest::Approx(0.0));

    CHECK(sample_std({2.0, 2.0, 2.0}) == doctest::Approx(0.0));
    CHECK(sample_std({1.0, -1.0, 1.0, -1.0}) == doctest::Approx(1.0));
    CHECK(max_abs({-3.0, 2.0, 0.5}) == doctest::Approx(3.0));
}

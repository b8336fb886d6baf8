#include <cmath>

#include "doctest.h"
#include "meridian/errors.hpp"
#include "meridian/expr.hpp"
#include "meridian/numerics.hpp"

using namespace meridian;

TEST_CASE("expression values and jets for the counterexample profile") {
    const Expr e = Expr::parse("0.5*sin(u)+2");
    CHECK(e.text() == "0.5*sin(u)+2");
    for (double u : {0.0, 0.3, 1.7, 2.9}) {
        CHECK(e(u) == doctest::Approx(0.5 * std::sin(u) + 2.0).epsilon(1e-15));
        const Jet j = e.jet(u);
        CHECK(j.d1 == doctest::Approx(0.5 * std::cos(u)).epsilon(1e-15));
        CHECK(j.d2 == doctest::Approx(-0.5 * std::sin(u)).epsilon(1e-15));
        CHECK(j.d3 == doctest::Approx(-0.5 * std::cos(u)).epsilon(1e-15));
    }
}

TEST_CASE("precedence and associativity") {
    CHECK(Expr::parse("2+3*4")(0.0) == doctest::Approx(14.0));
    CHECK(Expr::parse("2*3^2")(0.0) == doctest::Approx(18.0));
    // ^ is right-associative: 2^(3^2) = 512
    CHECK(Expr::parse("2^3^2")(0.0) == doctest::Approx(512.0));
    // unary minus binds looser than ^: -u^2 = -(u^2)
    CHECK(Expr::parse("-u^2")(3.0) == doctest::Approx(-9.0));
    CHECK(Expr::parse("(1+u)*(1-u)")(0.5) == doctest::Approx(0.75));
    CHECK(Expr::parse("6/3/2")(0.0) == doctest::Approx(1.0));
    CHECK(Expr::parse("1 - -u")(0.25) == doctest::Approx(1.25));
}

TEST_CASE("function set") {
    const double u = 0.6;
    CHECK(Expr::parse("sin(u)")(u) == doctest::Approx(std::sin(u)));
    CHECK(Expr::parse("cos(u)")(u) == doctest::Approx(std::cos(u)));
    CHECK(Expr::parse("sinh(u)")(u) == doctest::Approx(std::sinh(u)));
    CHECK(Expr::parse("cosh(u)")(u) == doctest::Approx(std::cosh(u)));
    CHECK(Expr::parse("exp(u)")(u) == doctest::Approx(std::exp(u)));
    CHECK(Expr::parse("0.5*cosh(u/2)+0.05*sin(u)")(u) ==
          doctest::Approx(0.5 * std::cosh(u / 2) + 0.05 * std::sin(u)).epsilon(1e-15));
}

TEST_CASE("jets agree with finite differences on a composite expression") {
    const Expr e = Expr::parse("exp(0.3*u)*sin(u^2) + cosh(u)/(1+u)");
    const auto scalar = [&](double t) { return e(t); };
    for (double u : {0.2, 0.9, 1.4}) {
        const Jet j = e.jet(u);
        CHECK(j.d1 == doctest::Approx(fd_derivative(scalar, u, 1, -5, 5)).epsilon(1e-8));
        CHECK(j.d2 == doctest::Approx(fd_derivative(scalar, u, 2, -5, 5)).epsilon(1e-5));
        CHECK(j.d3 == doctest::Approx(fd_derivative(scalar, u, 3, -5, 5)).epsilon(2e-3));
    }
}

TEST_CASE("parse errors carry positions and reject malformed input") {
    CHECK_THROWS_AS(Expr::parse(""), ParseError);
    CHECK_THROWS_AS(Expr::parse("sin(u"), ParseError);
    CHECK_THROWS_AS(Expr::parse("u +"), ParseError);
    CHECK_THROWS_AS(Expr::parse("tan(u)"), ParseError);   // unsupported function
    CHECK_THROWS_AS(Expr::parse("x + 1"), ParseError);    // unknown variable
    CHECK_THROWS_AS(Expr::parse("1 2"), ParseError);      // trailing garbage
    CHECK_THROWS_AS(Expr::parse("1..5"), ParseError);
    CHECK_THROWS_AS(Expr::parse("(u))"), ParseError);
}

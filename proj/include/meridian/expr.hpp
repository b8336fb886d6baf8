#pragma once

#include <memory>
#include <string>

#include "meridian/jet.hpp"

namespace meridian {

namespace detail {
struct ExprNode;
}

/// A parsed scalar expression in the single variable `u`.
///
/// Grammar (usual precedence, `^` right-associative and binding tighter than
/// unary minus): `+ - * / ^`, parentheses, the functions sin, cos, sinh,
/// cosh, exp, decimal constants (C locale), and the variable `u`.
/// Evaluation runs in jet arithmetic, so the first three derivatives come out
/// exact to rounding.
class Expr {
public:
    static Expr parse(const std::string& text);

    double operator()(double u) const { return jet(u).f; }
    Jet jet(double u) const;

    const std::string& text() const { return text_; }

private:
    explicit Expr(std::shared_ptr<const detail::ExprNode> root, std::string text)
        : root_(std::move(root)), text_(std::move(text)) {}

    std::shared_ptr<const detail::ExprNode> root_;
    std::string text_;
};

}  // namespace meridian

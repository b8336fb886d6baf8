#include "meridian/expr.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "meridian/errors.hpp"

namespace meridian {

namespace detail {

enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Sinh, Cosh, Exp };

struct ExprNode {
    Op op;
    double value = 0.0;  // Op::Const only
    std::shared_ptr<const ExprNode> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
    return std::make_shared<ExprNode>(ExprNode{op, 0.0, std::move(a), std::move(b)});
}

NodePtr make_const(double v) {
    return std::make_shared<ExprNode>(ExprNode{Op::Const, v, nullptr, nullptr});
}

Jet eval(const ExprNode& n, const Jet& u) {
    switch (n.op) {
        case Op::Const: return Jet::constant(n.value);
        case Op::Var: return u;
        case Op::Add: return eval(*n.a, u) + eval(*n.b, u);
        case Op::Sub: return eval(*n.a, u) - eval(*n.b, u);
        case Op::Mul: return eval(*n.a, u) * eval(*n.b, u);
        case Op::Div: return eval(*n.a, u) / eval(*n.b, u);
        case Op::Pow: return pow(eval(*n.a, u), eval(*n.b, u));
        case Op::Neg: return -eval(*n.a, u);
        case Op::Sin: return sin(eval(*n.a, u));
        case Op::Cos: return cos(eval(*n.a, u));
        case Op::Sinh: return sinh(eval(*n.a, u));
        case Op::Cosh: return cosh(eval(*n.a, u));
        case Op::Exp: return exp(eval(*n.a, u));
    }
    throw ParseError("expression: corrupt node");
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("expression: " + what + " at position " + std::to_string(pos_) +
                         " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (eat('+')) lhs = make(Op::Add, lhs, term());
            else if (eat('-')) lhs = make(Op::Sub, lhs, term());
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            if (eat('*')) lhs = make(Op::Mul, lhs, unary());
            else if (eat('/')) lhs = make(Op::Div, lhs, unary());
            else return lhs;
        }
    }

    NodePtr unary() {
        if (eat('-')) return make(Op::Neg, unary());
        if (eat('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (eat('^')) return make(Op::Pow, base, unary());  // right associative
        return base;
    }

    NodePtr atom() {
        const char c = peek();
        if (c == '(') {
            eat('(');
            NodePtr e = expr();
            if (!eat(')')) fail("missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return ident();
        fail("expected a number, 'u', a function call, or '('");
    }

    NodePtr number() {
        skip_ws();
        double v = 0.0;
        const char* begin = s_.data() + pos_;
        const char* end = s_.data() + s_.size();
        const auto res = std::from_chars(begin, end, v);
        if (res.ec != std::errc{} || res.ptr == begin) fail("malformed number");
        pos_ = static_cast<std::size_t>(res.ptr - s_.data());
        return make_const(v);
    }

    NodePtr ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        if (name == "u") return make(Op::Var);

        Op op;
        if (name == "sin") op = Op::Sin;
        else if (name == "cos") op = Op::Cos;
        else if (name == "sinh") op = Op::Sinh;
        else if (name == "cosh") op = Op::Cosh;
        else if (name == "exp") op = Op::Exp;
        else {
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        if (!eat('(')) fail("expected '(' after function name");
        NodePtr arg = expr();
        if (!eat(')')) fail("missing ')'");
        return make(op, arg);
    }
};

}  // namespace

}  // namespace detail

Expr Expr::parse(const std::string& text) {
    detail::Parser p(text);
    return Expr(p.run(), text);
}

Jet Expr::jet(double u) const { return detail::eval(*root_, Jet::variable(u)); }

}  // namespace meridian

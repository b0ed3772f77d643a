#pragma once

#include <memory>
#include <string>

#include "qam/dual.hpp"
#include "qam/errors.hpp"

namespace qam {

// Expression tree for the generator mini-language:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' atom)?
//   atom   := number | 'x' | 'exp' '(' expr ')' | 'ln' '(' expr ')'
//           | '(' expr ')' | '-' atom
// '^' requires a constant right operand; the parser folds it to a literal.
class Expr {
public:
    enum class Kind { Constant, Var, Add, Sub, Mul, Div, Pow, Exp, Log, Neg };

    using Ptr = std::shared_ptr<const Expr>;

    static Ptr constant(double c);
    static Ptr var();
    static Ptr node(Kind k, Ptr lhs, Ptr rhs = nullptr);
    static Ptr pow(Ptr base, double exponent);

    Kind kind() const { return kind_; }
    bool depends_on_x() const { return depends_on_x_; }

    template <typename T>
    T eval(const T& x) const {
        switch (kind_) {
            case Kind::Constant: return T(value_);
            case Kind::Var: return x;
            case Kind::Add: return lhs_->eval(x) + rhs_->eval(x);
            case Kind::Sub: return lhs_->eval(x) - rhs_->eval(x);
            case Kind::Mul: return lhs_->eval(x) * rhs_->eval(x);
            case Kind::Div: return lhs_->eval(x) / rhs_->eval(x);
            case Kind::Pow: return pow_impl(lhs_->eval(x), value_);
            case Kind::Exp: return exp_impl(lhs_->eval(x));
            case Kind::Log: return log_impl(lhs_->eval(x));
            case Kind::Neg: return -lhs_->eval(x);
        }
        return T(0.0);  // unreachable
    }

private:
    Expr() = default;

    static double pow_impl(double base, double c) { return std::pow(base, c); }
    static long double pow_impl(long double base, double c) {
        return std::pow(base, static_cast<long double>(c));
    }
    static Dual2 pow_impl(const Dual2& base, double c) { return qam::pow(base, c); }
    static double exp_impl(double v) { return std::exp(v); }
    static long double exp_impl(long double v) { return std::exp(v); }
    static Dual2 exp_impl(const Dual2& v) { return qam::exp(v); }
    static double log_impl(double v) { return std::log(v); }
    static long double log_impl(long double v) { return std::log(v); }
    static Dual2 log_impl(const Dual2& v) { return qam::log(v); }

    Kind kind_ = Kind::Constant;
    double value_ = 0.0;  // literal for Constant, exponent for Pow
    Ptr lhs_, rhs_;
    bool depends_on_x_ = false;
};

// Parses the mini-language; throws ParseError with the offending position.
Expr::Ptr parse_expression(const std::string& text);

}  // namespace qam

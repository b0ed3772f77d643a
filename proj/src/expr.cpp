#include "qam/expr.hpp"

#include <cctype>
#include <cstdlib>

namespace qam {

Expr::Ptr Expr::constant(double c) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Constant;
    e->value_ = c;
    return e;
}

Expr::Ptr Expr::var() {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Var;
    e->depends_on_x_ = true;
    return e;
}

Expr::Ptr Expr::node(Kind k, Ptr lhs, Ptr rhs) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = k;
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    e->depends_on_x_ =
        (e->lhs_ && e->lhs_->depends_on_x()) || (e->rhs_ && e->rhs_->depends_on_x());
    return e;
}

Expr::Ptr Expr::pow(Ptr base, double exponent) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Pow;
    e->lhs_ = std::move(base);
    e->value_ = exponent;
    e->depends_on_x_ = e->lhs_->depends_on_x();
    return e;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Expr::Ptr run() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    Expr::Ptr parse_expr() {
        auto lhs = parse_term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                lhs = Expr::node(Expr::Kind::Add, lhs, parse_term());
            else if (accept('-'))
                lhs = Expr::node(Expr::Kind::Sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    Expr::Ptr parse_term() {
        auto lhs = parse_factor();
        for (;;) {
            skip_ws();
            if (accept('*'))
                lhs = Expr::node(Expr::Kind::Mul, lhs, parse_factor());
            else if (accept('/'))
                lhs = Expr::node(Expr::Kind::Div, lhs, parse_factor());
            else
                return lhs;
        }
    }

    Expr::Ptr parse_factor() {
        auto base = parse_atom();
        skip_ws();
        if (accept('^')) {
            const std::size_t at = pos_;
            auto rhs = parse_atom();
            if (rhs->depends_on_x())
                throw ParseError("'^' requires a constant exponent", at);
            return Expr::pow(base, rhs->eval(0.0));
        }
        return base;
    }

    Expr::Ptr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return Expr::node(Expr::Kind::Neg, parse_atom());
        }
        if (c == '(') {
            ++pos_;
            auto e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parse_name();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Expr::Ptr parse_number() {
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin)
            throw ParseError("malformed number", pos_);
        // Reject strtod's exponent/hex extensions beyond plain decimals.
        for (const char* p = begin; p != end; ++p) {
            const char ch = *p;
            if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '.' &&
                ch != 'e' && ch != 'E' && ch != '+' && ch != '-')
                throw ParseError("malformed number", pos_ + (p - begin));
        }
        pos_ += end - begin;
        return Expr::constant(v);
    }

    Expr::Ptr parse_name() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        if (name == "x")
            return Expr::var();
        if (name == "exp" || name == "ln") {
            expect('(');
            auto arg = parse_expr();
            expect(')');
            return Expr::node(name == "exp" ? Expr::Kind::Exp : Expr::Kind::Log, arg);
        }
        throw ParseError("unknown identifier '" + name + "'", start);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr::Ptr parse_expression(const std::string& text) {
    return Parser(text).run();
}

}  // namespace qam

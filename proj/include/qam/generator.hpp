#pragma once

#include <functional>
#include <string>

#include "qam/expr.hpp"
#include "qam/interval.hpp"

namespace qam {

// Built-in generator families. power(0) is the log completion p0(x) = ln x,
// exp(0) the identity completion e0(x) = x.
struct BuiltinFamily {
    enum class Kind { Power, Exp, Identity, Log, Expression };

    Kind kind = Kind::Identity;
    double s = 0.0;
    std::string expression;

    static BuiltinFamily power(double s) { return {Kind::Power, s, {}}; }
    static BuiltinFamily exp(double s) { return {Kind::Exp, s, {}}; }
    static BuiltinFamily identity() { return {Kind::Identity, 0.0, {}}; }
    static BuiltinFamily log() { return {Kind::Log, 0.0, {}}; }
    static BuiltinFamily expression_of(std::string text) {
        return {Kind::Expression, 0.0, std::move(text)};
    }
};

// A strictly monotone C^2 function on a bounded interval, together with its
// derivatives and inverse. Immutable after construction; all members are
// pure, so a Generator is safe to share across threads.
struct Generator {
    using Fn = std::function<double(double)>;

    Interval domain;
    int sign = +1;  // sign of f'
    Fn eval;
    Fn d1;
    Fn d2;
    Fn inverse;  // exact for built-ins, bisection for expressions
    std::string label;

    // Closed interval used by every numeric scan: the closure of `domain`
    // where eval/d1/d2 extend finitely with nonvanishing d1, otherwise inset
    // by the margin 1e-9*|U| at the offending endpoint.
    Interval scan_domain;
    bool extends_lo = true;  // generator usable at domain.lo itself
    bool extends_hi = true;

    // True when sample values may range over the full closure [lo, hi].
    bool evaluable_at(double x) const {
        if (x == domain.lo) return extends_lo;
        if (x == domain.hi) return extends_hi;
        return x > domain.lo && x < domain.hi;
    }
};

Generator make_builtin(const BuiltinFamily& family, const Interval& domain);

// Builds a Generator from expression text. Derivatives come from
// second-order dual numbers, the inverse from bisection with the domain
// endpoints as bracket (tolerance 1e-13*|U| absolute in x), and the
// monotonicity sign from a 1024-point sample of d1.
Generator parse_generator(const std::string& expression, const Interval& domain);

// Parses the CLI spec syntax: "exp:S", "pow:S", "id", "log", "expr:TEXT".
Generator make_from_spec(const std::string& spec, const Interval& domain);

// The Arrow-Pratt index f''(x)/f'(x).
double arrow_pratt(const Generator& g, double x);

// alpha*g + beta with alpha, beta chosen so that the range of the result
// over its domain equals `target`. The generated mean is unchanged.
Generator affine_normalize(const Generator& g, const Interval& target);

// Generic affine image alpha*g + beta (alpha != 0).
Generator affine_transform(const Generator& g, double alpha, double beta);

// The same function viewed on a subinterval of its domain.
Generator restrict_to(const Generator& g, const Interval& sub);

// Grid check of strict monotonicity: sign*d1 > 0 at `n` sample points over
// the scan domain. Used by tests; construction already runs it at n = 1024.
bool validate_monotone(const Generator& g, int n);

}  // namespace qam

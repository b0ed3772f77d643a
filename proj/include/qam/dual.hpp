#pragma once

#include <cmath>

namespace qam {

// Second-order forward-mode dual number: carries a value together with the
// first and second derivative with respect to a single seed variable.
// Propagation rules are the univariate truncated-Taylor ones, so both
// derivatives are exact up to rounding.
struct Dual2 {
    double v = 0.0;   // f(x)
    double d1 = 0.0;  // f'(x)
    double d2 = 0.0;  // f''(x)

    constexpr Dual2() = default;
    constexpr Dual2(double value) : v(value) {}
    constexpr Dual2(double value, double first, double second)
        : v(value), d1(first), d2(second) {}

    // The seed x itself: value x, derivative 1.
    static constexpr Dual2 variable(double x) { return {x, 1.0, 0.0}; }
};

constexpr Dual2 operator+(const Dual2& a, const Dual2& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}
constexpr Dual2 operator-(const Dual2& a, const Dual2& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}
constexpr Dual2 operator-(const Dual2& a) { return {-a.v, -a.d1, -a.d2}; }

constexpr Dual2 operator*(const Dual2& a, const Dual2& b) {
    return {a.v * b.v,
            a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

constexpr Dual2 operator/(const Dual2& a, const Dual2& b) {
    // Solve a = q*b jet-by-jet.
    const double qv = a.v / b.v;
    const double qd = (a.d1 - qv * b.d1) / b.v;
    const double qs = (a.d2 - 2.0 * qd * b.d1 - qv * b.d2) / b.v;
    return {qv, qd, qs};
}

inline Dual2 exp(const Dual2& a) {
    const double e = std::exp(a.v);
    return {e, e * a.d1, e * (a.d2 + a.d1 * a.d1)};
}

inline Dual2 log(const Dual2& a) {
    const double d = a.d1 / a.v;
    return {std::log(a.v), d, (a.d2 - a.d1 * d) / a.v};
}

// Power with a constant exponent (the expression grammar requires it).
inline Dual2 pow(const Dual2& a, double c) {
    const double p = std::pow(a.v, c);
    const double p1 = c * std::pow(a.v, c - 1.0);
    const double p2 = c * (c - 1.0) * std::pow(a.v, c - 2.0);
    return {p, p1 * a.d1, p2 * a.d1 * a.d1 + p1 * a.d2};
}

}  // namespace qam

#pragma once

#include <cmath>
#include <string>

#include "qam/errors.hpp"

namespace qam {

// A bounded real interval with endpoint-openness flags. All bound formulas
// require |U| < infinity, so unbounded endpoints are rejected outright.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    bool lo_closed = true;
    bool hi_closed = true;

    Interval() = default;
    Interval(double lo_, double hi_, bool lo_closed_ = true, bool hi_closed_ = true)
        : lo(lo_), hi(hi_), lo_closed(lo_closed_), hi_closed(hi_closed_) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw DomainError("interval endpoints must be finite");
        if (!(lo < hi))
            throw DomainError("interval requires lo < hi, got [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    double length() const { return hi - lo; }

    bool contains(double x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && !lo_closed) return false;
        if (x == hi && !hi_closed) return false;
        return true;
    }

    // Closure membership; sample values are admitted on the closure when the
    // generator extends continuously there.
    bool contains_closure(double x) const { return x >= lo && x <= hi; }

    bool subset_of(const Interval& other) const {
        return lo >= other.lo && hi <= other.hi;
    }

    std::string str() const {
        std::string s;
        s += lo_closed ? '[' : '(';
        s += std::to_string(lo) + ", " + std::to_string(hi);
        s += hi_closed ? ']' : ')';
        return s;
    }
};

inline bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi &&
           a.lo_closed == b.lo_closed && a.hi_closed == b.hi_closed;
}

}  // namespace qam

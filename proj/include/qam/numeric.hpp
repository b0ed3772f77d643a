#pragma once

#include <functional>
#include <utility>

namespace qam {

using Fn1 = std::function<double(double)>;

// Golden-section maximization of a unimodal function on [a, b].
// Returns (argmax, max). Stops when the bracket is shorter than xtol.
std::pair<double, double> golden_max(const Fn1& f, double a, double b, double xtol);

inline std::pair<double, double> golden_min(const Fn1& f, double a, double b, double xtol) {
    auto [x, v] = golden_max([&](double t) { return -f(t); }, a, b, xtol);
    return {x, -v};
}

// Supremum of f over [a, b]: n-point scan followed by golden-section
// refinement inside the bracket around the best grid point.
// Returns (argmax, max).
std::pair<double, double> scan_max(const Fn1& f, double a, double b,
                                   int n = 4096, double xtol = 0.0);

inline std::pair<double, double> scan_min(const Fn1& f, double a, double b,
                                          int n = 4096, double xtol = 0.0) {
    auto [x, v] = scan_max([&](double t) { return -f(t); }, a, b, n, xtol);
    return {x, -v};
}

// max - min of f over [a, b], each extremum located by scan_max/scan_min.
double oscillation(const Fn1& f, double a, double b,
                   int n = 4096, double xtol = 0.0);

// Root of a monotone function on a bracket [a, b] with f(a), f(b) of
// opposite sign, by bisection to absolute tolerance xtol on x.
double bisect_root(const Fn1& f, double a, double b, double xtol);

// Number of worker threads: QAM_THREADS if set (0 = auto), else 1.
int thread_count();

}  // namespace qam

#include "qam/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qam {

std::pair<double, double> golden_max(const Fn1& f, double a, double b, double xtol) {
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;   // 0.618...
    static const double invphi2 = (3.0 - std::sqrt(5.0)) / 2.0;  // 0.382...
    if (b < a) std::swap(a, b);
    double h = b - a;
    if (h <= xtol) {
        double m = 0.5 * (a + b);
        return {m, f(m)};
    }
    double c = a + invphi2 * h;
    double d = a + invphi * h;
    double fc = f(c), fd = f(d);
    while (h > xtol) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            h = b - a;
            c = a + invphi2 * h;
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            h = b - a;
            d = a + invphi * h;
            fd = f(d);
        }
    }
    if (fc > fd) return {c, fc};
    return {d, fd};
}

std::pair<double, double> scan_max(const Fn1& f, double a, double b, int n, double xtol) {
    if (n < 2) n = 2;
    if (xtol <= 0.0) xtol = 1e-12 * (b - a);
    const double h = (b - a) / (n - 1);
    int best = 0;
    double best_v = f(a);
    for (int i = 1; i < n; ++i) {
        const double v = f(a + i * h);
        if (v > best_v) { best_v = v; best = i; }
    }
    const double lo = std::max(a, a + (best - 1) * h);
    const double hi = std::min(b, a + (best + 1) * h);
    auto [x, v] = golden_max(f, lo, hi, xtol);
    if (v >= best_v) return {x, v};
    return {a + best * h, best_v};
}

double oscillation(const Fn1& f, double a, double b, int n, double xtol) {
    return scan_max(f, a, b, n, xtol).second - scan_min(f, a, b, n, xtol).second;
}

double bisect_root(const Fn1& f, double a, double b, double xtol) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    // Callers guarantee a sign change; if rounding broke it, return the
    // endpoint closer to zero.
    if ((fa > 0.0) == (fb > 0.0))
        return std::abs(fa) <= std::abs(fb) ? a : b;
    while (b - a > xtol) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;  // bracket at floating-point resolution
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m; fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

int thread_count() {
    const char* env = std::getenv("QAM_THREADS");
    if (env == nullptr) return 1;
    const long k = std::strtol(env, nullptr, 10);
    if (k == 0) {
        const unsigned hc = std::thread::hardware_concurrency();
        return hc > 0 ? static_cast<int>(hc) : 1;
    }
    return k > 0 ? static_cast<int>(k) : 1;
}

}  // namespace qam

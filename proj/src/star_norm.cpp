#include "qam/star_norm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qam/errors.hpp"

namespace qam {

namespace {

double checked(const Fn1& u, double t) {
    const double v = u(t);
    if (!std::isfinite(v))
        throw NumericError("non-finite integrand sample at t = " + std::to_string(t));
    return v;
}

Interval clip_to_scan(const Interval& V, const Interval& scan) {
    const double lo = std::max(V.lo, scan.lo);
    const double hi = std::min(V.hi, scan.hi);
    return Interval(lo, hi, true, true);
}

StarNormResult oscillation_norm(const Fn1& h, const Interval& V) {
    const double xtol = 1e-12 * V.length();
    const auto [xmax, vmax] = scan_max(h, V.lo, V.hi, 4096, xtol);
    const auto [xmin, vmin] = scan_min(h, V.lo, V.hi, 4096, xtol);
    StarNormResult r;
    r.value = vmax - vmin;
    r.arg_x = xmin;
    r.arg_y = xmax;
    r.method = StarNormResult::Method::Oscillation;
    return r;
}

}  // namespace

StarNormResult star_norm(const Fn1& u, const Interval& V) {
    StarNormResult r;
    r.method = StarNormResult::Method::Grid;

    int cells = 64;
    double prev = -1.0;
    for (int level = 0; level < 16; ++level, cells *= 2) {
        const double h = V.length() / cells;
        double w = 0.0, wmin = 0.0, wmax = 0.0;
        double xmin = V.lo, xmax = V.lo;
        double left = checked(u, V.lo);
        for (int k = 0; k < cells; ++k) {
            const double a = V.lo + k * h;
            const double mid = checked(u, a + 0.5 * h);
            const double right = checked(u, a + h);
            w += h / 6.0 * (left + 4.0 * mid + right);
            left = right;
            if (w < wmin) { wmin = w; xmin = a + h; }
            if (w > wmax) { wmax = w; xmax = a + h; }
        }
        const double osc = wmax - wmin;
        r.value = osc;
        r.arg_x = xmin;
        r.arg_y = xmax;
        if (prev >= 0.0 && std::abs(osc - prev) <= 1e-10 * std::max(osc, 1e-300))
            break;
        prev = osc;
    }
    return r;
}

StarNormResult star_norm_ap(const Generator& f, const Interval& V) {
    if (!V.subset_of(f.domain))
        throw DomainError("interval not contained in the domain of '" + f.label + "'");
    const Interval W = clip_to_scan(V, f.scan_domain);
    return oscillation_norm(
        [&](double t) { return std::log(std::abs(f.d1(t))); }, W);
}

StarNormResult star_norm_ap_diff(const Generator& f, const Generator& g,
                                 const Interval& V) {
    if (!V.subset_of(f.domain) || !V.subset_of(g.domain))
        throw DomainError("interval not contained in both generator domains");
    const Interval W = clip_to_scan(clip_to_scan(V, f.scan_domain), g.scan_domain);
    return oscillation_norm(
        [&](double t) {
            return std::log(std::abs(f.d1(t))) - std::log(std::abs(g.d1(t)));
        },
        W);
}

Interval partition_subinterval(const Fn1& u, const Interval& U, int n) {
    if (n < 1) throw DomainError("partition requires n >= 1");
    const double h = U.length() / n;
    int best = 0;
    double best_norm = -1.0;
    for (int k = 0; k < n; ++k) {
        const double lo = U.lo + k * h;
        const double hi = k + 1 == n ? U.hi : lo + h;
        const double norm = star_norm(u, Interval(lo, hi)).value;
        if (norm > best_norm) { best_norm = norm; best = k; }
    }
    const double lo = U.lo + best * h;
    return Interval(lo, best + 1 == n ? U.hi : lo + h);
}

}  // namespace qam

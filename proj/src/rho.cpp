#include "qam/rho.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <vector>

#include "qam/errors.hpp"
#include "qam/mean.hpp"
#include "qam/numeric.hpp"

namespace qam {

namespace {

struct Objective {
    const Generator& f;
    const Generator& g;
    mutable long long evaluations = 0;

    double operator()(double x, double z, double theta) const {
        ++evaluations;
        const double v =
            std::abs(two_point_mean(f, z, x, theta) - two_point_mean(g, z, x, theta));
        if (!std::isfinite(v))
            throw NumericError("non-finite distance objective at (x=" +
                               std::to_string(x) + ", z=" + std::to_string(z) +
                               ", theta=" + std::to_string(theta) + ")");
        return v;
    }
};

struct Point {
    double x, z, theta;
    double value;
};

struct GridBest {
    double value = -1.0;
    long long index = 0;
};

}  // namespace

RhoEstimate estimate_rho(const Generator& f, const Generator& g,
                         const Interval& U, const OptimizerConfig& cfg) {
    if (!U.subset_of(f.domain) || !U.subset_of(g.domain))
        throw DomainError("interval not contained in both generator domains");

    // Search box: closure of U, inset where a generator does not extend.
    const double lo = std::max({U.lo, f.scan_domain.lo, g.scan_domain.lo});
    const double hi = std::min({U.hi, f.scan_domain.hi, g.scan_domain.hi});
    const double len = hi - lo;
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-9 * U.length();
    const double theta_tol = tol / U.length();

    Objective obj{f, g};
    const int n = std::max(cfg.grid_n, 2);
    const int m = std::max(cfg.grid_m, 2);
    const double hx = len / (n - 1);
    const double hth = (1.0 - 2.0 * kThetaMin) / (m - 1);
    auto grid_x = [&](int i) { return lo + i * hx; };
    auto grid_th = [&](int k) { return kThetaMin + k * hth; };

    // Full grid scan, keeping the four best points as refinement seeds.
    const long long total = static_cast<long long>(n) * n * m;
    const int workers =
        total >= (1 << 16) ? std::min(thread_count(), n) : 1;
    std::vector<GridBest> top;
    auto scan_rows = [&](int row_begin, int row_end) {
        std::vector<GridBest> local(4);
        long long evals = 0;
        for (int i = row_begin; i < row_end; ++i) {
            const double x = grid_x(i);
            for (int j = 0; j < n; ++j) {
                const double z = grid_x(j);
                for (int k = 0; k < m; ++k) {
                    ++evals;
                    const double v = std::abs(two_point_mean(f, z, x, grid_th(k)) -
                                              two_point_mean(g, z, x, grid_th(k)));
                    if (v > local.back().value) {
                        const long long idx =
                            (static_cast<long long>(i) * n + j) * m + k;
                        local.back() = {v, idx};
                        std::sort(local.begin(), local.end(),
                                  [](const GridBest& a, const GridBest& b) {
                                      if (a.value != b.value) return a.value > b.value;
                                      return a.index < b.index;
                                  });
                    }
                }
            }
        }
        return std::pair{local, evals};
    };
    if (workers <= 1) {
        auto [local, evals] = scan_rows(0, n);
        top = local;
        obj.evaluations += evals;
    } else {
        std::vector<std::future<std::pair<std::vector<GridBest>, long long>>> futs;
        const int chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int b = w * chunk;
            const int e = std::min(n, b + chunk);
            if (b >= e) break;
            futs.push_back(std::async(std::launch::async, scan_rows, b, e));
        }
        std::vector<GridBest> merged;
        for (auto& fu : futs) {
            auto [local, evals] = fu.get();
            obj.evaluations += evals;
            merged.insert(merged.end(), local.begin(), local.end());
        }
        std::sort(merged.begin(), merged.end(),
                  [](const GridBest& a, const GridBest& b) {
                      if (a.value != b.value) return a.value > b.value;
                      return a.index < b.index;
                  });
        merged.resize(4);
        top = merged;
    }

    std::vector<Point> seeds;
    for (const GridBest& gb : top) {
        if (gb.value < 0.0) continue;
        const int i = static_cast<int>(gb.index / (static_cast<long long>(n) * m));
        const int j = static_cast<int>((gb.index / m) % n);
        const int k = static_cast<int>(gb.index % m);
        seeds.push_back({grid_x(i), grid_x(j), grid_th(k), gb.value});
    }

    // Extra seed on the full-spread slice (x, z) = (lo, hi): distance peaks
    // there for ordered means, and exp-type pairs develop boundary layers in
    // theta far thinner than the m-point grid.
    {
        const int slice_n = 4096;
        const double sh = (1.0 - 2.0 * kThetaMin) / (slice_n - 1);
        int bk = 0;
        double bv = -1.0;
        for (int k = 0; k < slice_n; ++k) {
            const double v = obj(lo, hi, kThetaMin + k * sh);
            if (v > bv) { bv = v; bk = k; }
        }
        seeds.push_back({lo, hi, kThetaMin + bk * sh, bv});
    }

    // Coordinate-wise golden-section refinement of every seed.
    Point best{seeds.front().x, seeds.front().z, seeds.front().theta, -1.0};
    double best_gap = 0.0;
    for (const Point& seed : seeds) {
        Point p = seed;
        double sx = hx, sth = std::max(hth, (1.0 - 2.0 * kThetaMin) / 4095.0);
        double gap = 0.0;
        int passes = 0;
        while (passes < cfg.max_refine_iters) {
            const double before = p.value;
            auto pass = [&](double& coord, double step, double a, double b,
                            double xtol, auto&& eval) {
                ++passes;
                const double l = std::max(a, coord - step);
                const double r = std::min(b, coord + step);
                auto [c, v] = golden_max(eval, l, r, xtol);
                if (v > p.value) { coord = c; p.value = v; }
            };
            pass(p.x, sx, lo, hi, tol,
                 [&](double x) { return obj(x, p.z, p.theta); });
            pass(p.z, sx, lo, hi, tol,
                 [&](double z) { return obj(p.x, z, p.theta); });
            pass(p.theta, sth, kThetaMin, 1.0 - kThetaMin, theta_tol,
                 [&](double t) { return obj(p.x, p.z, t); });
            gap = p.value - before;
            const bool converged = sx <= 4.0 * tol && sth <= 4.0 * theta_tol;
            sx = std::max(sx / 8.0, 4.0 * tol);
            sth = std::max(sth / 8.0, 4.0 * theta_tol);
            if (converged && gap <= 1e-14 * std::max(1.0, p.value)) break;
        }
        if (p.value > best.value) {
            best = p;
            best_gap = gap;
        }
    }

    RhoEstimate r;
    r.value = std::max(best.value, 0.0);
    r.x = best.x;
    r.z = best.z;
    r.theta = best.theta;
    r.refinement_gap = std::abs(best_gap);
    r.evaluations = obj.evaluations;
    r.boundary_argmax = std::min(best.x - lo, hi - best.x) <= tol ||
                        std::min(best.z - lo, hi - best.z) <= tol;
    return r;
}

bool rho_restricted_monotone(const Generator& f, const Generator& g,
                             const Interval& U, const Interval& V,
                             const OptimizerConfig& cfg) {
    if (!V.subset_of(U))
        throw DomainError("V must be a subinterval of U");
    const RhoEstimate on_v = estimate_rho(f, g, V, cfg);
    const RhoEstimate on_u = estimate_rho(f, g, U, cfg);
    const double slack = 2.0 * (cfg.tol > 0.0 ? cfg.tol : 1e-9 * U.length());
    return on_v.value <= on_u.value + slack;
}

}  // namespace qam

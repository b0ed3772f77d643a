#include "qam/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qam/errors.hpp"
#include "qam/numeric.hpp"

namespace qam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Interval common_scan(const Generator& f, const Generator& g, const Interval& U) {
    if (!U.subset_of(f.domain) || !U.subset_of(g.domain))
        throw DomainError("interval not contained in both generator domains");
    const double lo = std::max({U.lo, f.scan_domain.lo, g.scan_domain.lo});
    const double hi = std::min({U.hi, f.scan_domain.hi, g.scan_domain.hi});
    return Interval(lo, hi, true, true);
}

double abs_ap(const Generator& f, double t) { return std::abs(f.d2(t) / f.d1(t)); }

// Conjugates f by the affine map [0,1] -> [a, b] of its scan interval and
// normalizes the range, yielding an increasing bijection of [0,1].
Generator to_unit_square(const Generator& f) {
    const double a = f.scan_domain.lo;
    const double len = f.scan_domain.length();
    Generator unit;
    unit.domain = Interval(0.0, 1.0, true, true);
    unit.label = "unit(" + f.label + ")";
    const auto eval = f.eval;
    const auto d1 = f.d1;
    const auto d2 = f.d2;
    const auto inv = f.inverse;
    unit.eval = [=](double t) { return eval(a + t * len); };
    unit.d1 = [=](double t) { return len * d1(a + t * len); };
    unit.d2 = [=](double t) { return len * len * d2(a + t * len); };
    unit.inverse = [=](double y) { return (inv(y) - a) / len; };
    unit.sign = f.sign;
    unit.scan_domain = unit.domain;
    unit.extends_lo = unit.extends_hi = true;
    return affine_normalize(unit, Interval(0.0, 1.0, true, true));
}

}  // namespace

EstimConstants compute_estim_constants() {
    static const EstimConstants cached = [] {
        auto map = [](double c) {
            return c * c * c / (3072.0 * std::exp(c) * std::expm1(c));
        };
        // Golden section alone stalls ~1e-8 from the argmax (the map is flat
        // there at double precision); finish with Newton on the stationarity
        // equation 3/C - 1 - 1/(1 - e^-C) = 0 to reach the 1e-12 tolerance.
        double c0 = golden_max(map, 1e-12, 10.0, 1e-8).first;
        for (int i = 0; i < 8; ++i) {
            const double em = -std::expm1(-c0);  // 1 - e^-C
            const double f = 3.0 / c0 - 1.0 - 1.0 / em;
            const double fp =
                -3.0 / (c0 * c0) + std::exp(-c0) / (em * em);
            const double step = f / fp;
            c0 -= step;
            if (std::abs(step) < 1e-15 * c0) break;
        }
        EstimConstants k;
        k.C0 = c0;
        k.y0 = map(c0);
        k.y1 = 1.0 / (384.0 * std::exp(c0 / 2.0) * std::expm1(c0 / 2.0));
        return k;
    }();
    return cached;
}

namespace formulas {

double main_operand_min(double eps, double K, double lenU, double star_f,
                        double c, double delta) {
    const double t1 = (1.0 - c) * (eps / (2.0 * K) - 2.0 * delta);
    const double t2 = delta * std::expm1(eps / 4.0) *
                      std::expm1((eps / 2.0 - 2.0 * K * delta) * c) /
                      (2.0 * std::exp(star_f) * std::expm1(K * lenU));
    return std::min(t1, t2);
}

double main_sup_lower(double eps, double K, double lenU, double star_f) {
    if (eps <= 0.0 || K <= 0.0) return 0.0;
    const double dmax = eps / (4.0 * K);

    // For fixed delta the first operand strictly decreases in c and the
    // second strictly increases from 0, so the sup over c sits at their
    // crossing. The crossing can lie within a few ulp of c = 1 where the
    // first operand is quantized coarser than the second, so bisect down to
    // floating-point resolution and keep the best attained min along the way.
    auto sup_over_c = [&](double delta) {
        double lo = 0.0, hi = 1.0;
        double best = std::max(main_operand_min(eps, K, lenU, star_f, 0.0, delta),
                               main_operand_min(eps, K, lenU, star_f, 1.0, delta));
        while (true) {
            const double c = 0.5 * (lo + hi);
            if (c <= lo || c >= hi) break;
            const double t1 = (1.0 - c) * (eps / (2.0 * K) - 2.0 * delta);
            const double t2 = delta * std::expm1(eps / 4.0) *
                              std::expm1((eps / 2.0 - 2.0 * K * delta) * c) /
                              (2.0 * std::exp(star_f) * std::expm1(K * lenU));
            best = std::max(best, std::min(t1, t2));
            if (t1 > t2) lo = c;
            else hi = c;
        }
        return best;
    };

    const int n = 128;
    const double dlo = dmax * 1e-6;
    const double dhi = dmax * (1.0 - 1e-6);
    const double h = (dhi - dlo) / (n - 1);
    int best = 0;
    double best_v = -kInf;
    for (int i = 0; i < n; ++i) {
        const double v = sup_over_c(dlo + i * h);
        if (v > best_v) { best_v = v; best = i; }
    }
    const double refined =
        golden_max(sup_over_c, std::max(dlo, dlo + (best - 1) * h),
                   std::min(dhi, dlo + (best + 1) * h), 1e-14 * dmax)
            .second;
    return std::max(refined, best_v);
}

double main_lower(double eps, double K, double lenU, double star_f) {
    if (eps <= 0.0 || K <= 0.0) return 0.0;
    return eps * std::expm1(eps / 4.0) * std::expm1(eps / 6.0) /
           (16.0 * K * std::exp(star_f) * std::expm1(K * lenU));
}

double estim_lower(double eps, double K, double lenU, const EstimConstants& c) {
    if (eps <= 0.0 || K <= 0.0) return 0.0;
    const double kl = K * lenU;
    double v = -kInf;
    if (kl <= c.C0 / 2.0) v = std::max(v, c.y1 * eps * eps * eps / K);
    if (kl >= c.C0 / 2.0)
        v = std::max(v, c.y0 * eps * eps * eps /
                            (lenU * lenU * lenU * K * K * K * K));
    return v;
}

double box_alpha(double phi, double K, double delta) {
    const double first = std::expm1(-K * phi / 2.0) / K;
    const double denom = K - delta;
    double second;
    if (std::abs(denom) < 1e-8 * K)
        second = -phi / 2.0;  // removable singularity at delta = K
    else
        second = std::expm1((delta - K) * phi / 2.0) / denom;
    return first - second;
}

double box_lower(double phi, double K, double delta) {
    if (delta <= 0.0 || phi <= 0.0 || K <= 0.0) return 0.0;
    if (delta > 2.0 * K)
        throw DomainError("separation requires delta <= 2K");
    const double alpha = box_alpha(phi, K, delta);
    if (alpha <= 0.0) return 0.0;  // degenerate certificate
    return std::log1p(K * alpha) / K;
}

double box_lower_simplified(double phi, double K, double delta) {
    if (delta <= 0.0 || phi <= 0.0 || K <= 0.0) return 0.0;
    if (delta > 2.0 * K)
        throw DomainError("separation requires delta <= 2K");
    const double x = K * phi / 2.0;
    const double theta = -std::expm1(-x) - x * std::exp(-x);
    return std::log1p(delta / K * theta) / K;
}

std::pair<double, double> universal_upper(double K, double lenU) {
    if (K <= 0.0 || lenU <= 0.0)
        throw DomainError("universal bounds require K > 0 and |U| > 0");
    const double first =
        lenU + (std::log1p(std::exp(-K * lenU)) - std::log(2.0)) / K;
    const double second = (3.0 + 7.0 * std::exp(1.0)) / 6.0 * K * lenU * lenU;
    return {first, second};
}

double star_norm_upper(double lenU, double star_f, double eps) {
    return lenU * std::exp(star_f) * std::expm1(eps);
}

}  // namespace formulas

double measure_K(const Generator& f, const Generator& g, const Interval& U) {
    const Interval S = common_scan(f, g, U);
    return scan_max(
               [&](double t) { return std::max(abs_ap(f, t), abs_ap(g, t)); },
               S.lo, S.hi, 4096, 1e-12 * S.length())
        .second;
}

double cargo_shisha_lower(const Generator& f, const Generator& g) {
    const Interval S = common_scan(f, g, f.domain.subset_of(g.domain) ? f.domain
                                                                      : g.domain);
    const Generator F = to_unit_square(restrict_to(f, S));
    const Generator G = to_unit_square(restrict_to(g, S));
    const double sup =
        scan_max([&](double y) { return std::abs(F.inverse(y) - G.inverse(y)); },
                 kThetaMin, 1.0 - kThetaMin, 4096, 1e-13)
            .second;
    return S.length() * sup;
}

CargoShishaUpper cargo_shisha_upper(const Generator& f, const Generator& g) {
    CargoShishaUpper r;
    if (!(f.extends_lo && f.extends_hi && g.extends_lo && g.extends_hi)) {
        r.applicable = false;
        r.reason = "generator does not extend to the domain closure";
        return r;
    }
    const Interval S = common_scan(f, g, f.domain.subset_of(g.domain) ? f.domain
                                                                      : g.domain);
    const Generator F = to_unit_square(restrict_to(f, S));
    const Generator G = to_unit_square(restrict_to(g, S));

    auto inv_deriv_sup = [](const Generator& u) -> double {
        const double coarse =
            scan_min([&](double t) { return u.d1(t); }, 0.0, 1.0, 4096, 1e-13)
                .second;
        const double fine =
            scan_min([&](double t) { return u.d1(t); }, 0.0, 1.0, 8192, 1e-13)
                .second;
        if (!(fine > 0.0) || fine < coarse / 1.05) return kInf;  // unstable
        return 1.0 / fine;
    };
    const double inv_f = inv_deriv_sup(F);
    const double inv_g = inv_deriv_sup(G);
    if (!std::isfinite(inv_f) && !std::isfinite(inv_g)) {
        r.applicable = false;
        r.reason = "inverse derivative sup did not stabilize under refinement";
        return r;
    }
    r.inv_d1_sup = std::min(inv_f, inv_g);
    r.diff_sup =
        scan_max([&](double t) { return std::abs(F.eval(t) - G.eval(t)); }, 0.0,
                 1.0, 4096, 1e-13)
            .second;
    r.value = S.length() * 2.0 * r.inv_d1_sup * r.diff_sup;
    return r;
}

PalesCheck pales_sufficient_check(const Generator& f, const Generator& g,
                                  const Interval& U, double alpha, double C,
                                  int grid) {
    if (!(C > 0.0 && C < 1.0)) throw DomainError("requires 0 < C < 1");
    if (!(alpha > 0.0)) throw DomainError("requires alpha > 0");
    const Interval S = common_scan(f, g, U);
    const int n = std::max(grid, 3);
    const double h = S.length() / (n - 1);
    std::vector<double> fv(n), gv(n);
    for (int i = 0; i < n; ++i) {
        fv[i] = f.eval(S.lo + i * h);
        gv[i] = g.eval(S.lo + i * h);
    }
    const double guard_f = 1e-14 * std::abs(fv[n - 1] - fv[0]);
    const double guard_g = 1e-14 * std::abs(gv[n - 1] - gv[0]);

    PalesCheck out;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (std::abs((i - k) * h) < alpha) continue;
            const double df = fv[i] - fv[k];
            const double dg = gv[i] - gv[k];
            if (std::abs(df) < guard_f || std::abs(dg) < guard_g) continue;
            for (int j = 0; j < n; ++j) {
                ++out.triples;
                const double dev =
                    std::abs((fv[i] - fv[j]) / df - (gv[i] - gv[j]) / dg);
                out.max_deviation = std::max(out.max_deviation, dev);
            }
        }
    }
    out.vacuous = out.triples == 0;
    out.satisfied = out.vacuous || out.max_deviation < C;
    return out;
}

DirectionalBound upper_star_norm(const Generator& f, const Generator& g,
                                 const Interval& U) {
    const Interval S = common_scan(f, g, U);
    const double eps = star_norm_ap_diff(f, g, S).value;
    const double star_f = star_norm_ap(f, S).value;
    const double star_g = star_norm_ap(g, S).value;
    DirectionalBound b;
    b.forward = formulas::star_norm_upper(S.length(), star_f, eps);
    b.swapped = formulas::star_norm_upper(S.length(), star_g, eps);
    b.value = std::min(b.forward, b.swapped);
    return b;
}

std::pair<double, double> upper_universal(double K, double lenU) {
    return formulas::universal_upper(K, lenU);
}

namespace {

struct MainParams {
    double eps, K, lenU, star;
};

MainParams main_params(const Generator& f, const Generator& g, const Interval& U) {
    const Interval S = common_scan(f, g, U);
    MainParams p;
    p.eps = star_norm_ap_diff(f, g, S).value;
    p.K = measure_K(f, g, U);
    p.lenU = S.length();
    p.star = std::min(star_norm_ap(f, S).value, star_norm_ap(g, S).value);
    return p;
}

}  // namespace

double lower_main(const Generator& f, const Generator& g, const Interval& U) {
    const MainParams p = main_params(f, g, U);
    return formulas::main_lower(p.eps, p.K, p.lenU, p.star);
}

double lower_main_sup(const Generator& f, const Generator& g, const Interval& U) {
    const MainParams p = main_params(f, g, U);
    return formulas::main_sup_lower(p.eps, p.K, p.lenU, p.star);
}

double lower_estim(const Generator& f, const Generator& g, const Interval& U) {
    const MainParams p = main_params(f, g, U);
    return formulas::estim_lower(p.eps, p.K, p.lenU, compute_estim_constants());
}

SeparationCertificate find_separation(const Generator& f, const Generator& g,
                                      const Interval& U, int phi_grid) {
    const Interval S = common_scan(f, g, U);
    if (phi_grid < 1) throw DomainError("phi_grid must be >= 1");

    // Arrow-Pratt samples on a fine grid aligned with the candidate lattice.
    const int refine = 16;
    const int m = phi_grid * refine;
    const double h = S.length() / m;
    std::vector<double> af(m + 1), ag(m + 1);
    for (int q = 0; q <= m; ++q) {
        const double t = S.lo + q * h;
        af[q] = f.d2(t) / f.d1(t);
        ag[q] = g.d2(t) / g.d1(t);
    }

    int best_i = -1, best_j = -1;
    double best_obj = 0.0;
    for (int i = 0; i < phi_grid; ++i) {
        for (int j = i + 1; j <= phi_grid; ++j) {
            double kv = 0.0, dv = kInf;
            for (int q = i * refine; q <= j * refine; ++q) {
                kv = std::max(kv, std::max(std::abs(af[q]), std::abs(ag[q])));
                dv = std::min(dv, std::abs(af[q] - ag[q]));
            }
            if (!(dv > 0.0) || !(kv > 0.0)) continue;
            const double obj = formulas::box_lower_simplified(
                (j - i) * refine * h, kv, dv);
            if (obj > best_obj) {
                best_obj = obj;
                best_i = i;
                best_j = j;
            }
        }
    }

    SeparationCertificate cert;
    if (best_i < 0) {  // no subinterval separates the indices
        cert.V = S;
        cert.phi = S.length();
        cert.separated = false;
        return cert;
    }

    const Interval V(S.lo + best_i * refine * h,
                     best_j == phi_grid ? S.hi : S.lo + best_j * refine * h);
    const double xtol = 1e-12 * S.length();
    cert.V = V;
    cert.phi = V.length();
    // Golden-refined extrema give K at least, and delta at most, any grid
    // value, so the verification margins below cannot go negative.
    cert.K = scan_max(
                 [&](double t) { return std::max(abs_ap(f, t), abs_ap(g, t)); },
                 V.lo, V.hi, 1024, xtol)
                 .second;
    cert.delta =
        scan_min([&](double t) { return std::abs(arrow_pratt(f, t) -
                                                 arrow_pratt(g, t)); },
                 V.lo, V.hi, 1024, xtol)
            .second;
    cert.separated = cert.delta > 0.0;

    const int vn = 1024;
    const double vh = V.length() / (vn - 1);
    double worst_f = kInf, worst_g = kInf, worst_d = kInf;
    for (int q = 0; q < vn; ++q) {
        const double t = V.lo + q * vh;
        worst_f = std::min(worst_f, cert.K - std::abs(arrow_pratt(f, t)));
        worst_g = std::min(worst_g, cert.K - std::abs(arrow_pratt(g, t)));
        worst_d = std::min(worst_d,
                           std::abs(arrow_pratt(f, t) - arrow_pratt(g, t)) -
                               cert.delta);
    }
    cert.margin_K_f = worst_f;
    cert.margin_K_g = worst_g;
    cert.margin_delta = worst_d;
    return cert;
}

double box_lower(const SeparationCertificate& cert) {
    if (!cert.separated) return 0.0;
    return formulas::box_lower(cert.phi, cert.K, cert.delta);
}

double box_lower_simplified(const SeparationCertificate& cert) {
    if (!cert.separated) return 0.0;
    return formulas::box_lower_simplified(cert.phi, cert.K, cert.delta);
}

BoundReport full_report(const Generator& f, const Generator& g,
                        const Interval& U, const OptimizerConfig& cfg) {
    const Generator rf = restrict_to(f, U);
    const Generator rg = restrict_to(g, U);
    const Interval S = common_scan(rf, rg, U);
    const bool closure = rf.extends_lo && rf.extends_hi && rg.extends_lo &&
                         rg.extends_hi;

    BoundReport rep;
    rep.label_f = f.label;
    rep.label_g = g.label;
    rep.U = U;
    rep.K = measure_K(rf, rg, U);
    rep.epsilon = star_norm_ap_diff(rf, rg, S).value;
    rep.rho = estimate_rho(rf, rg, U, cfg);

    auto entry = [](const char* name, bool lower) {
        BoundEntry e;
        e.name = name;
        e.lower = lower;
        return e;
    };
    auto add = [&](BoundEntry e) { rep.bounds.push_back(std::move(e)); };
    auto guarded = [&](BoundEntry e, auto&& fill) {
        try {
            fill(e);
        } catch (const Error& err) {
            e.applicable = false;
            e.reason = err.what();
        }
        add(std::move(e));
    };

    guarded(entry("cargo_shisha_lower", true), [&](BoundEntry& e) {
        e.value = cargo_shisha_lower(rf, rg);
    });
    guarded(entry("lower_main", true), [&](BoundEntry& e) {
        const MainParams p = main_params(rf, rg, U);
        e.value = formulas::main_lower(p.eps, p.K, p.lenU, p.star);
        e.params = {{"eps", p.eps}, {"K", p.K}, {"lenU", p.lenU},
                    {"star_min", p.star}};
    });
    guarded(entry("lower_main_sup", true), [&](BoundEntry& e) {
        e.value = lower_main_sup(rf, rg, U);
    });
    guarded(entry("lower_estim", true), [&](BoundEntry& e) {
        const EstimConstants c = compute_estim_constants();
        e.value = lower_estim(rf, rg, U);
        e.params = {{"C0", c.C0}, {"y0", c.y0}, {"y1", c.y1}};
    });

    const SeparationCertificate cert = find_separation(rf, rg, U);
    guarded(entry("box_lower", true), [&](BoundEntry& e) {
        e.value = box_lower(cert);
        e.params = {{"phi", cert.phi}, {"K", cert.K}, {"delta", cert.delta},
                    {"V_lo", cert.V.lo}, {"V_hi", cert.V.hi},
                    {"separated", cert.separated ? 1.0 : 0.0}};
    });
    guarded(entry("box_lower_simplified", true), [&](BoundEntry& e) {
        e.value = box_lower_simplified(cert);
        e.params = {{"phi", cert.phi}, {"K", cert.K}, {"delta", cert.delta}};
    });

    guarded(entry("cargo_shisha_upper", false), [&](BoundEntry& e) {
        const CargoShishaUpper u = cargo_shisha_upper(rf, rg);
        e.applicable = u.applicable;
        e.reason = u.reason;
        e.value = u.value;
        if (u.applicable)
            e.params = {{"inv_d1_sup", u.inv_d1_sup}, {"diff_sup", u.diff_sup}};
    });
    guarded(entry("upper_star_norm", false), [&](BoundEntry& e) {
        if (!closure)
            throw DomainError("generator does not extend to the domain closure");
        const DirectionalBound u = upper_star_norm(rf, rg, U);
        e.value = u.value;
        e.params = {{"forward", u.forward}, {"swapped", u.swapped}};
    });
    guarded(entry("upper_universal_log", false), [&](BoundEntry& e) {
        if (!closure)
            throw DomainError("generator does not extend to the domain closure");
        e.value = formulas::universal_upper(rep.K, U.length()).first;
        e.params = {{"K", rep.K}};
    });
    guarded(entry("upper_universal_quad", false), [&](BoundEntry& e) {
        if (!closure)
            throw DomainError("generator does not extend to the domain closure");
        e.value = formulas::universal_upper(rep.K, U.length()).second;
        e.params = {{"K", rep.K}};
    });

    rep.lower_max = 0.0;
    rep.upper_min = kInf;
    for (const BoundEntry& e : rep.bounds) {
        if (!e.applicable) continue;
        if (e.lower)
            rep.lower_max = std::max(rep.lower_max, e.value);
        else
            rep.upper_min = std::min(rep.upper_min, e.value);
    }
    const double slack = 1e-9;
    rep.sandwich_ok = rep.lower_max <= rep.rho.value + slack &&
                      rep.rho.value <= rep.upper_min + slack &&
                      rep.lower_max <= rep.upper_min + slack;
    return rep;
}

}  // namespace qam

#include "qam/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qam/errors.hpp"
#include "qam/mean.hpp"
#include "qam/numeric.hpp"
#include "qam/star_norm.hpp"

namespace qam {

namespace {

const Interval kExpInterval{0.0, 1.0, false, false};
const Interval kPowerInterval{1.0, 2.0, true, true};

std::vector<Generator> exp_group() {
    std::vector<Generator> out;
    for (double s : {-20.0, -15.0, -5.0, -1.0, 0.0, 1.0, 5.0, 15.0, 20.0})
        out.push_back(make_builtin(BuiltinFamily::exp(s), kExpInterval));
    return out;
}

std::vector<Generator> power_group() {
    std::vector<Generator> out;
    for (double s : {-1.0, 0.0, 1.0, 2.0, 3.0})
        out.push_back(make_builtin(BuiltinFamily::power(s), kPowerInterval));
    for (const char* text : {"x^2 + x", "1/x", "ln(x + 2)"})
        out.push_back(parse_generator(text, kPowerInterval));
    return out;
}

void append_pairs(std::vector<CorpusPair>& out, const std::vector<Generator>& group,
                  const Interval& U) {
    for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = i + 1; j < group.size(); ++j)
            out.push_back({group[i], group[j], U});
}

WeightedSample random_sample(std::mt19937_64& rng, const Interval& box) {
    std::uniform_int_distribution<int> nd(2, 6);
    std::uniform_real_distribution<double> vd(box.lo, box.hi);
    std::uniform_real_distribution<double> wd(0.05, 1.0);
    const int n = nd(rng);
    std::vector<double> values(n), weights(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        values[i] = vd(rng);
        weights[i] = wd(rng);
        sum += weights[i];
    }
    for (double& w : weights) w /= sum;
    return WeightedSample(std::move(values), std::move(weights));
}

std::string describe(const CorpusPair& p) {
    return p.f.label + " vs " + p.g.label + " on " + p.U.str();
}

}  // namespace

std::vector<Generator> corpus_generators(const std::string& selector) {
    if (selector == "exp") return exp_group();
    if (selector == "power") return power_group();
    if (selector == "default" || selector == "all") {
        auto out = exp_group();
        auto p = power_group();
        out.insert(out.end(), p.begin(), p.end());
        return out;
    }
    throw DomainError("unknown corpus selector '" + selector + "'");
}

std::vector<CorpusPair> corpus_pairs(const std::string& selector) {
    std::vector<CorpusPair> out;
    if (selector == "exp" || selector == "default" || selector == "all")
        append_pairs(out, exp_group(), kExpInterval);
    if (selector == "power" || selector == "default" || selector == "all")
        append_pairs(out, power_group(), kPowerInterval);
    if (out.empty()) throw DomainError("unknown corpus selector '" + selector + "'");
    return out;
}

SuiteResult sandwich_suite(const std::string& selector, const OptimizerConfig& cfg) {
    SuiteResult res;
    res.name = "sandwich";
    for (const CorpusPair& p : corpus_pairs(selector)) {
        const BoundReport rep = full_report(p.f, p.g, p.U, cfg);
        ++res.checks;
        if (!rep.sandwich_ok) {
            res.ok = false;
            std::ostringstream os;
            os << describe(p) << ": lower_max=" << rep.lower_max
               << " rho=" << rep.rho.value << " upper_min=" << rep.upper_min;
            res.detail = os.str();
            return res;
        }
        // epsilon <= 2 K |U| holds for any pair of F_K members.
        const double s_len = rep.U.length();
        if (rep.epsilon > 2.0 * rep.K * s_len * (1.0 + 1e-9) + 1e-12) {
            res.ok = false;
            res.detail = describe(p) + ": epsilon exceeds 2K|U|";
            return res;
        }
    }
    return res;
}

SuiteResult comparison_suite(int trials, unsigned seed) {
    SuiteResult res;
    res.name = "comparison";
    std::mt19937_64 rng(seed);

    // Pairs whose Arrow-Pratt indices are strictly ordered on a grid.
    struct Ordered {
        Generator hi;  // larger index -> larger mean
        Generator lo;
        Interval box;
    };
    std::vector<Ordered> ordered;
    for (const CorpusPair& p : corpus_pairs("all")) {
        const Interval S(std::max(p.f.scan_domain.lo, p.g.scan_domain.lo),
                         std::min(p.f.scan_domain.hi, p.g.scan_domain.hi));
        double min_diff = 1e300, max_diff = -1e300;
        const int n = 512;
        for (int i = 0; i < n; ++i) {
            const double t = S.lo + i * S.length() / (n - 1);
            const double d = arrow_pratt(p.f, t) - arrow_pratt(p.g, t);
            min_diff = std::min(min_diff, d);
            max_diff = std::max(max_diff, d);
        }
        if (min_diff > 0.0) ordered.push_back({p.f, p.g, S});
        else if (max_diff < 0.0) ordered.push_back({p.g, p.f, S});
    }
    if (ordered.empty()) {
        res.ok = false;
        res.detail = "no ordered pairs in the corpus";
        return res;
    }

    for (int t = 0; t < trials; ++t) {
        const Ordered& o = ordered[t % ordered.size()];
        const WeightedSample s = random_sample(rng, o.box);
        const double mh = qa_mean(o.hi, s);
        const double ml = qa_mean(o.lo, s);
        ++res.checks;
        if (mh < ml - 1e-12) {
            res.ok = false;
            std::ostringstream os;
            os << o.hi.label << " vs " << o.lo.label << ": means out of order by "
               << (ml - mh);
            res.detail = os.str();
            return res;
        }
    }
    return res;
}

SuiteResult affine_invariance_suite(int trials, unsigned seed) {
    SuiteResult res;
    res.name = "affine_invariance";
    std::mt19937_64 rng(seed);
    // exp(s) with |s| ~ 20 spans nine decades, so an additive beta wipes out
    // the small end of the weighted sum and the identity stops being
    // expressible in doubles at 1e-12. Draw from the well-conditioned part
    // of the corpus; the extreme generators are exercised by the other
    // suites at scale-aware tolerances.
    std::vector<Generator> gens;
    for (double s : {-5.0, -1.0, 0.0, 1.0, 5.0})
        gens.push_back(make_builtin(BuiltinFamily::exp(s), kExpInterval));
    for (Generator& g : power_group()) gens.push_back(std::move(g));
    std::uniform_real_distribution<double> ad(0.5, 2.0);
    std::uniform_real_distribution<double> bd(-3.0, 3.0);
    std::bernoulli_distribution flip(0.5);

    for (int t = 0; t < trials; ++t) {
        const Generator& g = gens[t % gens.size()];
        const double alpha = flip(rng) ? ad(rng) : -ad(rng);
        const double beta = bd(rng);
        const Generator h = affine_transform(g, alpha, beta);
        const WeightedSample s = random_sample(rng, g.scan_domain);
        const double diff = std::abs(qa_mean(g, s) - qa_mean(h, s));
        ++res.checks;
        if (diff >= 1e-12) {
            res.ok = false;
            std::ostringstream os;
            os << g.label << " alpha=" << alpha << " beta=" << beta
               << ": mean moved by " << diff;
            res.detail = os.str();
            return res;
        }
    }
    return res;
}

SuiteResult partition_suite(int functions, unsigned seed) {
    SuiteResult res;
    res.name = "partitioning";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_real_distribution<double> lo_d(-2.0, 1.0);
    std::uniform_real_distribution<double> len_d(0.5, 4.0);

    for (int t = 0; t < functions; ++t) {
        const double lo = lo_d(rng);
        const Interval U(lo, lo + len_d(rng));
        const double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng);
        const double ph1 = coef(rng), ph2 = coef(rng);
        const double kink = coef(rng);
        const double mid = 0.5 * (U.lo + U.hi) + 0.1 * coef(rng);
        // Continuous, piecewise-smooth: trigonometric part plus a |t - mid|
        // kink.
        Fn1 u = [=](double t) {
            return c0 + c1 * std::sin(2.0 * t + ph1) +
                   c2 * std::sin(5.0 * t + ph2) + kink * std::abs(t - mid);
        };
        const double whole = star_norm(u, U).value;
        for (int n = 2; n <= 8; ++n) {
            const Interval cell = partition_subinterval(u, U, n);
            const double part = star_norm(u, cell).value;
            ++res.checks;
            if (part < whole / n - 1e-9) {
                res.ok = false;
                std::ostringstream os;
                os << "function " << t << ", n=" << n << ": cell norm " << part
                   << " < " << whole / n;
                res.detail = os.str();
                return res;
            }
        }
    }
    return res;
}

SuiteResult conjugation_suite(int trials, unsigned seed) {
    SuiteResult res;
    res.name = "conjugation";
    std::mt19937_64 rng(seed);
    const Interval box(0.0, 1.0);

    for (int t = 0; t < trials; ++t) {
        const WeightedSample a = random_sample(rng, box);
        std::vector<double> exp_values(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            exp_values[i] = std::exp(a.values[i]);
        const WeightedSample ea(exp_values, a.weights);
        for (double s : {-2.0, -1.0, 0.0, 1.0, 2.0, 15.0}) {
            const double lhs = power_mean(s, ea);
            const double rhs = std::exp(exp_mean(s, a));
            ++res.checks;
            if (std::abs(lhs - rhs) > 1e-12 * std::max(std::abs(rhs), 1.0)) {
                res.ok = false;
                std::ostringstream os;
                os << "s=" << s << ": power/exp conjugation off by "
                   << std::abs(lhs - rhs);
                res.detail = os.str();
                return res;
            }
        }
    }
    return res;
}

std::vector<SuiteResult> run_all_suites(const std::string& selector,
                                        const OptimizerConfig& cfg) {
    return {sandwich_suite(selector, cfg), comparison_suite(),
            affine_invariance_suite(), partition_suite(), conjugation_suite()};
}

}  // namespace qam

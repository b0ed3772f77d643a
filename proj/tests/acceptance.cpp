// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance is pinned here in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "qam/bounds.hpp"
#include "qam/corpus.hpp"
#include "qam/mean.hpp"
#include "qam/report_io.hpp"

using namespace qam;

namespace {

struct Outcome {
    int id;
    bool pass;
    std::string detail;
    double seconds;
};

std::vector<Outcome> results;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

template <typename Fn>
void criterion(int id, const char* title, Fn&& body) {
    const double t0 = now_seconds();
    Outcome out{id, false, "", 0.0};
    try {
        std::ostringstream detail;
        out.pass = body(detail);
        out.detail = detail.str();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    out.seconds = now_seconds() - t0;
    results.push_back(out);
    std::printf("[%2d] %s  %-44s %s  (%.2f s)\n", id,
                out.pass ? "PASS" : "FAIL", title, out.detail.c_str(),
                out.seconds);
    std::fflush(stdout);
}

bool in_window(double v, double lo, double hi) { return v >= lo && v <= hi; }

bool rel_close(double v, double target, double tol) {
    return std::abs(v - target) <= tol * std::abs(target);
}

const Interval kUnit(0.0, 1.0, false, false);

Generator exp_gen(double s) { return make_builtin(BuiltinFamily::exp(s), kUnit); }
Generator pow_gen(double s) {
    return make_builtin(BuiltinFamily::power(s), Interval(1.0, 2.0));
}

// Exhaustive 256^3 grid evaluation of the distance objective, independent
// of the estimator's search strategy.
double brute_force_rho(const Generator& f, const Generator& g, const Interval& U,
                       int n) {
    const double lo = std::max({U.lo, f.scan_domain.lo, g.scan_domain.lo});
    const double hi = std::min({U.hi, f.scan_domain.hi, g.scan_domain.hi});
    const double tmin = 1e-6;
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = lo + i * (hi - lo) / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double z = lo + j * (hi - lo) / (n - 1);
            for (int k = 0; k < n; ++k) {
                const double th = tmin + k * (1.0 - 2.0 * tmin) / (n - 1);
                const double v = std::abs(two_point_mean(f, z, x, th) -
                                          two_point_mean(g, z, x, th));
                if (v > best) best = v;
            }
        }
    }
    return best;
}

}  // namespace

int main() {
    const Generator e15 = exp_gen(15.0);
    const Generator e20 = exp_gen(20.0);

    criterion(1, "measured rho of the worked pair", [&](std::ostream& os) {
        const auto t0 = std::chrono::steady_clock::now();
        const RhoEstimate r = estimate_rho(e15, e20, kUnit);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        os << "rho=" << format_double(r.value) << " in [0.207,0.217], "
           << secs << "s";
        return in_window(r.value, 0.207, 0.217) && secs < 10.0;
    });

    criterion(2, "closed-form lower bound value", [&](std::ostream& os) {
        const double v = lower_main(e15, e20, kUnit);
        os << format_double(v) << " vs 3.19184e-17";
        return rel_close(v, 3.19184e-17, 1e-3);
    });

    criterion(3, "cubic lower bound value", [&](std::ostream& os) {
        const double v = lower_estim(e15, e20, kUnit);
        os << format_double(v) << " vs 5.71442e-8";
        return rel_close(v, 5.71442e-8, 1e-2);
    });

    criterion(4, "box lower bound at (1,20,5)", [&](std::ostream& os) {
        const double v = formulas::box_lower(1.0, 20.0, 5.0);
        const SeparationCertificate cert = find_separation(e15, e20, kUnit);
        os << format_double(v) << " in [0.0138,0.0148]; found cert phi="
           << format_double(cert.phi) << " K=" << format_double(cert.K)
           << " delta=" << format_double(cert.delta);
        return in_window(v, 0.0138, 0.0148) && cert.separated &&
               std::abs(cert.phi - 1.0) < 1e-6 &&
               std::abs(cert.K - 20.0) < 1e-6 &&
               std::abs(cert.delta - 5.0) < 1e-6;
    });

    criterion(5, "simplified box bound at (1,20,5)", [&](std::ostream& os) {
        const double v = formulas::box_lower_simplified(1.0, 20.0, 5.0);
        os << format_double(v) << " in [0.0105,0.0117]";
        return in_window(v, 0.0105, 0.0117);
    });

    criterion(6, "universal log upper bound at K=20", [&](std::ostream& os) {
        const double v = formulas::universal_upper(20.0, 1.0).first;
        const double direct = std::log(0.5 * (std::exp(20.0) + 1.0)) / 20.0;
        const double rho = estimate_rho(e15, e20, kUnit).value;
        os << format_double(v) << " vs direct " << format_double(direct)
           << ", rho " << format_double(rho) << " below it";
        return rel_close(v, direct, 1e-12) && rho <= v;
    });

    criterion(7, "sandwich over the full corpus", [&](std::ostream& os) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::size_t pairs = corpus_pairs("all").size();
        const SuiteResult r = sandwich_suite("all");
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        os << pairs << " pairs, " << secs << "s" << (r.ok ? "" : "; " + r.detail);
        return r.ok && pairs >= 60 && secs < 300.0;
    });

    criterion(8, "comparison property, 1000 trials", [&](std::ostream& os) {
        const SuiteResult r = comparison_suite(1000);
        os << r.checks << " checks" << (r.ok ? "" : "; " + r.detail);
        return r.ok && r.checks >= 1000;
    });

    criterion(9, "affine invariance, 1000 trials", [&](std::ostream& os) {
        const SuiteResult r = affine_invariance_suite(1000);
        os << r.checks << " checks" << (r.ok ? "" : "; " + r.detail);
        return r.ok && r.checks >= 1000;
    });

    criterion(10, "partition lemma, 100 random functions", [&](std::ostream& os) {
        const SuiteResult r = partition_suite(100);
        os << r.checks << " checks" << (r.ok ? "" : "; " + r.detail);
        return r.ok && r.checks >= 700;
    });

    criterion(11, "estimator agrees with a 256^3 brute force", [&](std::ostream& os) {
        struct Case {
            Generator f, g;
            Interval U;
        };
        const Case cases[] = {
            {exp_gen(15.0), exp_gen(20.0), kUnit},
            {exp_gen(0.0), exp_gen(1.0), kUnit},
            {exp_gen(-5.0), exp_gen(5.0), kUnit},
            {pow_gen(1.0), pow_gen(3.0), Interval(1.0, 2.0)},
            {pow_gen(-1.0), pow_gen(2.0), Interval(1.0, 2.0)},
        };
        double worst = 0.0;
        for (const Case& c : cases) {
            const double est = estimate_rho(c.f, c.g, c.U).value;
            const double brute = brute_force_rho(c.f, c.g, c.U, 256);
            worst = std::max(worst, std::abs(est - brute));
        }
        os << "worst |estimate - grid| = " << format_double(worst);
        return worst < 1e-3;
    });

    criterion(12, "derived constants self-check", [&](std::ostream& os) {
        const EstimConstants c = compute_estim_constants();
        const double den = 3072.0 * (std::exp(2.0 * c.C0) - std::exp(c.C0));
        const double dden =
            3072.0 * (2.0 * std::exp(2.0 * c.C0) - std::exp(c.C0));
        const double residual =
            (3.0 * c.C0 * c.C0 * den - c.C0 * c.C0 * c.C0 * dden) / (den * den);
        const double anchored = c.y0 * 125.0 / 160000.0;
        os << "C0=" << format_double(c.C0) << " residual="
           << format_double(std::abs(residual)) << " y0-anchor="
           << format_double(anchored);
        return std::abs(residual) < 1e-10 && rel_close(anchored, 5.71442e-8, 1e-2);
    });

    int failed = 0;
    for (const Outcome& o : results)
        if (!o.pass) ++failed;
    std::printf("RESULT: %zu/%zu criteria passed\n", results.size() - failed,
                results.size());
    return failed == 0 ? 0 : 1;
}

#include "test_util.hpp"

#include "qam/corpus.hpp"
#include "qam/mean.hpp"
#include "qam/star_norm.hpp"

using namespace qam;

TEST_CASE("weighted sample validation") {
    CHECK_THROWS_AS(WeightedSample({}, {}), DomainError);
    CHECK_THROWS_AS(WeightedSample({1.0, 2.0}, {1.0}), DomainError);
    CHECK_THROWS_AS(WeightedSample({1.0, 2.0}, {0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(WeightedSample({1.0, 2.0}, {-0.1, 1.1}), DomainError);
    // off by more than 1e-9: rejected; within: renormalized
    CHECK_THROWS_AS(WeightedSample({1.0, 2.0}, {0.5, 0.6}), DomainError);
    const WeightedSample ok({1.0, 2.0}, {0.5, 0.5 + 5e-10});
    CHECK(close_abs(ok.weights[0] + ok.weights[1], 1.0, 1e-15));
    CHECK(WeightedSample({3.0}).weights[0] == 1.0);
}

TEST_CASE("quasi-arithmetic mean basics") {
    const Interval u(0.0, 1.5);
    const Generator id = make_builtin(BuiltinFamily::identity(), u);
    CHECK(qa_mean(id, WeightedSample({0.0, 1.0})) == 0.5);

    const Generator e1 = make_builtin(BuiltinFamily::exp(1.0), u);
    CHECK(close_rel(qa_mean(e1, WeightedSample({0.0, std::log(3.0)})),
                    std::log(2.0), 1e-14));

    // mean of a constant vector is the constant, for any generator
    for (const Generator& g : corpus_generators("all")) {
        const double a = 0.5 * (g.scan_domain.lo + g.scan_domain.hi);
        CHECK(close_abs(qa_mean(g, WeightedSample({a, a, a})), a, 1e-12));
    }

    const Generator e2 = make_builtin(BuiltinFamily::exp(2.0), u);
    CHECK_THROWS_AS(qa_mean(e2, WeightedSample({0.5, 2.0})), DomainError);
}

TEST_CASE("values at a non-extendable endpoint are rejected") {
    const Generator pm1 = make_builtin(BuiltinFamily::power(-1.0),
                                       Interval(0.0, 1.0, false, false));
    CHECK_THROWS_AS(qa_mean(pm1, WeightedSample({0.0, 0.5})), DomainError);
    CHECK_NOTHROW(qa_mean(pm1, WeightedSample({0.25, 0.5})));
}

TEST_CASE("log-exp mean") {
    CHECK(exp_mean(0.0, WeightedSample({1.0, 3.0})) == 2.0);
    CHECK(close_rel(exp_mean(20.0, WeightedSample({0.0, 1.0})),
                    std::log(0.5 * (1.0 + std::exp(20.0))) / 20.0, 1e-14));
    for (double s : {-30.0, -1.0, 0.0, 2.0, 25.0})
        CHECK(close_abs(exp_mean(s, WeightedSample({0.7, 0.7, 0.7})), 0.7, 1e-13));
    // max-shifted evaluation survives exponents that would overflow
    const double big = exp_mean(1000.0, WeightedSample({0.0, 1.0}));
    CHECK(std::isfinite(big));
    CHECK(close_rel(big, 1.0 - std::log(2.0) / 1000.0, 1e-12));
    CHECK(std::isfinite(exp_mean(-1000.0, WeightedSample({0.0, 1.0}))));
}

TEST_CASE("power mean") {
    CHECK(close_rel(power_mean(2.0, WeightedSample({1.0, 7.0})), 5.0, 1e-14));
    CHECK(close_rel(power_mean(0.0, WeightedSample({1.0, 4.0})), 2.0, 1e-14));
    CHECK_THROWS_AS(power_mean(2.0, WeightedSample({-1.0, 4.0})), DomainError);
    CHECK_THROWS_AS(power_mean(1.0, WeightedSample({0.0, 4.0})), DomainError);
}

TEST_CASE("power/exp conjugation identity") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> vd(0.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        const WeightedSample a({vd(rng), vd(rng), vd(rng), vd(rng)});
        std::vector<double> ev(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) ev[i] = std::exp(a.values[i]);
        const WeightedSample ea(ev, a.weights);
        for (double s : {-2.0, -1.0, 0.0, 1.0, 2.0, 15.0})
            CHECK(close_rel(power_mean(s, ea), std::exp(exp_mean(s, a)), 1e-12));
    }
}

TEST_CASE("two-point parametrized mean") {
    const Interval u(0.0, 1.0, false, false);
    const Generator id = make_builtin(BuiltinFamily::identity(), u);
    CHECK(two_point_mean(id, 1.0, 0.0, 0.25) == 0.25);
    CHECK(two_point_mean(id, 0.8, 0.2, 0.0) == 0.2);
    CHECK(two_point_mean(id, 0.8, 0.2, 1.0) == 0.8);

    const Generator e15 = make_builtin(BuiltinFamily::exp(15.0), u);
    CHECK(close_rel(two_point_mean(e15, 1.0, 0.0, 0.5),
                    std::log(0.5 * (1.0 + std::exp(15.0))) / 15.0, 1e-14));
    CHECK_THROWS_AS(two_point_mean(e15, 1.0, 0.0, 1.5), DomainError);
}

TEST_CASE("internality of the mean") {
    std::mt19937_64 rng(42);
    for (const Generator& g : corpus_generators("all")) {
        std::uniform_real_distribution<double> vd(g.scan_domain.lo,
                                                  g.scan_domain.hi);
        for (int t = 0; t < 60; ++t) {
            const WeightedSample s({vd(rng), vd(rng), vd(rng), vd(rng), vd(rng)});
            const double m = qa_mean(g, s);
            const double lo =
                *std::min_element(s.values.begin(), s.values.end());
            const double hi =
                *std::max_element(s.values.begin(), s.values.end());
            CHECK(m >= lo);
            CHECK(m <= hi);
        }
    }
}

TEST_CASE("ordered arrow-pratt indices give ordered means") {
    const Interval u(0.0, 1.0, false, false);
    const Generator e2 = make_builtin(BuiltinFamily::exp(2.0), u);
    const Generator e1 = make_builtin(BuiltinFamily::exp(1.0), u);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> vd(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        const WeightedSample s({vd(rng), vd(rng), vd(rng)});
        CHECK(qa_mean(e2, s) >= qa_mean(e1, s) - 1e-12);
    }
    // strict for a decisively non-constant sample
    const WeightedSample spread({0.1, 0.9});
    CHECK(qa_mean(e2, spread) > qa_mean(e1, spread) + 1e-6);
}

TEST_CASE("means of F_K members sit between the log-exp envelopes") {
    std::mt19937_64 rng(9);
    struct Item {
        Generator g;
        double K;
    };
    std::vector<Item> items;
    items.push_back({make_builtin(BuiltinFamily::power(2.0), Interval(1.0, 2.0)),
                     1.0});  // |A| = 1/x <= 1
    items.push_back({make_builtin(BuiltinFamily::power(3.0), Interval(1.0, 2.0)),
                     2.0});  // |A| = 2/x <= 2
    items.push_back({make_builtin(BuiltinFamily::exp(5.0),
                                  Interval(0.0, 1.0, false, false)),
                     5.0});
    items.push_back({parse_generator("ln(x + 2)", Interval(1.0, 2.0)),
                     1.0 / 3.0});  // |A| = 1/(x+2) <= 1/3
    for (const Item& item : items) {
        std::uniform_real_distribution<double> vd(item.g.scan_domain.lo,
                                                  item.g.scan_domain.hi);
        for (int t = 0; t < 100; ++t) {
            const WeightedSample s({vd(rng), vd(rng), vd(rng)});
            const double m = qa_mean(item.g, s);
            CHECK(m >= exp_mean(-item.K, s) - 1e-12);
            CHECK(m <= exp_mean(item.K, s) + 1e-12);
        }
    }
}

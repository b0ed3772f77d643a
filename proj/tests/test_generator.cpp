#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include "qam/corpus.hpp"
#include "qam/generator.hpp"
#include "qam/mean.hpp"

using namespace qam;

TEST_CASE("interval invariants") {
    CHECK_THROWS_AS(Interval(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(Interval(2.0, 1.0), DomainError);
    CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()),
                    DomainError);
    const Interval u(0.0, 1.0, false, true);
    CHECK(u.length() == 1.0);
    CHECK_FALSE(u.contains(0.0));
    CHECK(u.contains(1.0));
    CHECK(u.contains_closure(0.0));
    CHECK(Interval(0.25, 0.5).subset_of(Interval(0.0, 1.0)));
}

TEST_CASE("builtin exp family") {
    const Interval u(0.0, 1.0, false, false);
    const Generator e15 = make_builtin(BuiltinFamily::exp(15.0), u);
    CHECK(close_rel(e15.eval(0.5), std::exp(7.5), 1e-14));  // ~1808.042
    CHECK(close_rel(e15.d1(0.5), 15.0 * std::exp(7.5), 1e-14));
    CHECK(close_rel(e15.inverse(std::exp(7.5)), 0.5, 1e-14));
    CHECK(e15.sign == +1);

    const Generator e0 = make_builtin(BuiltinFamily::exp(0.0), u);
    for (double x : {0.0, 0.25, 0.9, 1.0}) {
        CHECK(e0.eval(x) == x);
        CHECK(e0.inverse(x) == x);
    }
    CHECK(e0.d1(0.3) == 1.0);
    CHECK(e0.d2(0.3) == 0.0);

    const Generator em = make_builtin(BuiltinFamily::exp(-3.0), u);
    CHECK(em.sign == -1);
}

TEST_CASE("builtin power family") {
    const Generator p2 = make_builtin(BuiltinFamily::power(2.0),
                                      Interval(0.0, 4.0, false, true));
    CHECK(p2.inverse(9.0) == 3.0);
    CHECK(p2.eval(3.0) == 9.0);

    // power(0) is the log completion
    const Generator p0 =
        make_builtin(BuiltinFamily::power(0.0), Interval(1.0, 2.0));
    CHECK(close_rel(p0.eval(1.5), std::log(1.5), 1e-15));
    CHECK(close_rel(p0.inverse(std::log(1.5)), 1.5, 1e-15));

    const Generator pm1 =
        make_builtin(BuiltinFamily::power(-1.0), Interval(1.0, 2.0));
    CHECK(pm1.sign == -1);

    CHECK_THROWS_AS(make_builtin(BuiltinFamily::power(2.0), Interval(-1.0, 1.0)),
                    DomainError);
    CHECK_THROWS_AS(
        make_builtin(BuiltinFamily::power(2.0), Interval(0.0, 4.0, true, true)),
        DomainError);
}

TEST_CASE("arrow-pratt index of the builtin families") {
    const Interval u(0.0, 1.0, false, false);
    for (double s : {-20.0, -1.0, 0.5, 15.0, 20.0}) {
        const Generator g = make_builtin(BuiltinFamily::exp(s), u);
        for (double x : {0.1, 0.5, 0.9})
            CHECK(close_abs(arrow_pratt(g, x), s, 1e-9));
    }
    const Generator id = make_builtin(BuiltinFamily::identity(), u);
    CHECK(arrow_pratt(id, 0.4) == 0.0);

    for (double s : {-1.0, 2.0, 3.0}) {
        const Generator g =
            make_builtin(BuiltinFamily::power(s), Interval(1.0, 2.0));
        for (double x : {1.1, 1.5, 1.9})
            CHECK(close_rel(arrow_pratt(g, x), (s - 1.0) / x, 1e-12));
    }
}

TEST_CASE("affine normalization") {
    const Interval u(0.0, 1.0);
    const Interval target(0.0, 1.0);
    const Generator e15 = make_builtin(BuiltinFamily::exp(15.0), u);
    const Generator n = affine_normalize(e15, target);
    for (double x : {0.0, 0.3, 0.7, 1.0}) {
        const double expect = std::expm1(15.0 * x) / std::expm1(15.0);
        CHECK(close_abs(n.eval(x), expect, 1e-12));
    }
    CHECK(close_abs(n.eval(0.0), 0.0, 1e-15));
    CHECK(close_abs(n.eval(1.0), 1.0, 1e-15));

    const Generator id = make_builtin(BuiltinFamily::identity(), u);
    const Generator nid = affine_normalize(id, target);
    CHECK(nid.eval(0.42) == 0.42);

    // a decreasing generator normalizes to an increasing one
    const Generator dec = make_builtin(BuiltinFamily::exp(-2.0), u);
    const Generator ninc = affine_normalize(dec, target);
    CHECK(ninc.sign == +1);
    CHECK(close_abs(ninc.eval(0.0), 0.0, 1e-15));
}

TEST_CASE("affine transform leaves the generated mean unchanged") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> ad(0.5, 2.0), bd(-3.0, 3.0),
        vd(1.0, 2.0);
    const Generator g =
        make_builtin(BuiltinFamily::power(3.0), Interval(1.0, 2.0));
    for (int t = 0; t < 100; ++t) {
        const double alpha = (t % 2 ? 1.0 : -1.0) * ad(rng);
        const Generator h = affine_transform(g, alpha, bd(rng));
        const WeightedSample s({vd(rng), vd(rng), vd(rng)});
        CHECK(close_abs(qa_mean(g, s), qa_mean(h, s), 1e-12));
    }
    CHECK_THROWS_AS(affine_transform(g, 0.0, 1.0), DomainError);
}

TEST_CASE("monotonicity holds on a dense grid for the whole corpus") {
    for (const Generator& g : corpus_generators("all"))
        CHECK(validate_monotone(g, 10000));
}

TEST_CASE("inverse of eval is the identity across the corpus") {
    std::mt19937_64 rng(77);
    for (const Generator& g : corpus_generators("all")) {
        std::uniform_real_distribution<double> xd(g.scan_domain.lo,
                                                  g.scan_domain.hi);
        for (int t = 0; t < 1000; ++t) {
            const double x = xd(rng);
            const double back = g.inverse(g.eval(x));
            CHECK(std::abs(back - x) <=
                  1e-10 * std::max(std::abs(x), g.domain.length()));
        }
    }
}

TEST_CASE("scan domain insets endpoints where the function blows up") {
    const Generator pm1 = make_builtin(BuiltinFamily::power(-1.0),
                                       Interval(0.0, 1.0, false, false));
    CHECK_FALSE(pm1.extends_lo);
    CHECK(pm1.extends_hi);
    CHECK(pm1.scan_domain.lo == doctest::Approx(1e-9).epsilon(1e-3));
    CHECK(pm1.scan_domain.hi == 1.0);

    const Generator e5 = make_builtin(BuiltinFamily::exp(5.0),
                                      Interval(0.0, 1.0, false, false));
    CHECK(e5.extends_lo);
    CHECK(e5.extends_hi);
    CHECK(e5.scan_domain.lo == 0.0);
}

TEST_CASE("restriction to a subinterval") {
    const Generator g = make_builtin(BuiltinFamily::exp(2.0), Interval(0.0, 4.0));
    const Generator r = restrict_to(g, Interval(1.0, 2.0));
    CHECK(r.domain == Interval(1.0, 2.0));
    CHECK(r.eval(1.5) == g.eval(1.5));
    CHECK_THROWS_AS(restrict_to(g, Interval(3.0, 5.0)), DomainError);
}

TEST_CASE("generator specs parse to the right families") {
    const Interval u(1.0, 2.0);
    CHECK(make_from_spec("exp:15", u).label == "exp:15");
    CHECK(make_from_spec("pow:2", u).label == "pow:2");
    CHECK(make_from_spec("id", u).label == "id");
    CHECK(make_from_spec("log", u).label == "log");
    CHECK(make_from_spec("expr:x^2 + x", u).label == "expr:x^2 + x");
    CHECK_THROWS_AS(make_from_spec("cosh:1", u), DomainError);
    CHECK_THROWS_AS(make_from_spec("exp:abc", u), DomainError);
}

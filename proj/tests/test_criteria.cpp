#include "helpers.hpp"
#include "mixsegre/criteria.hpp"
#include "mixsegre/error.hpp"

#include <doctest.h>

#include <random>

using namespace mixsegre;
using namespace testing;

namespace {

Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

} // namespace

TEST_CASE("tuple lemma fuzz") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> len(1, 6), val(0, 40), coin(0, 3);
    int instances = 0, equal_sums = 0;
    while (instances < 10000) {
        const int n = len(rng);
        TupleTriple t;
        const int mode = coin(rng);
        for (int i = 0; i < n; ++i) {
            Integer b = val(rng), c = val(rng);
            if (mode == 0) c = b;
            Integer a = isqrt(b * c);
            if (mode == 1 && a > 0) a -= 1;
            if (mode == 2) a = b = c;
            t.a.push_back(a);
            t.b.push_back(b);
            t.c.push_back(c);
        }
        if (mode == 3) {
            // Equal triples with a single component of a lowered.
            for (int i = 0; i < n; ++i) t.a[i] = t.c[i] = t.b[i];
            if (t.a[0] > 0) t.a[0] -= 1;
        }
        const TupleLemmaResult r = tuple_lemma(t);
        REQUIRE(r.hypothesis_ok);
        if (r.sums_equal) {
            ++equal_sums;
            CHECK(r.componentwise_equal);
        }
        ++instances;
    }
    CHECK(equal_sums > 1000);
}

TEST_CASE("tuple lemma reports a violated hypothesis") {
    TupleTriple t{{Integer(3)}, {Integer(1)}, {Integer(4)}};
    CHECK_FALSE(tuple_lemma(t).hypothesis_ok);
    TupleTriple bad{{Integer(1)}, {Integer(1), Integer(2)}, {Integer(1)}};
    CHECK_THROWS_AS(tuple_lemma(bad), InvalidArgument);
}

TEST_CASE("closure battery fails at j = 2 on the two ideals on C^3") {
    const Ring r = ring({"x", "y", "z"});
    const ComparisonReport rep =
        closure_battery(affine(r), ideal(r, {"z"}), ideal(r, {"x*z", "y*z", "z^2"}), config());
    CHECK_FALSE(rep.holds());
    REQUIRE(rep.first_failure().has_value());
    CHECK(rep.first_failure()->index == 2);
}

TEST_CASE("closure battery holds for ideals with equal closure") {
    const Ring r = ring({"x", "y"});
    CHECK(closure_battery(affine(r), ideal(r, {"x^2", "y^2"}), ideal(r, {"x^2", "x*y", "y^2"}), config()).holds());
    const Ring s = ring({"x", "y", "z"});
    CHECK(closure_battery(affine(s), ideal(s, {"x*z", "y*z", "z^2"}), ideal(s, {"x*z", "y*z", "z^2", "x*y*z"}),
                          config())
              .holds());
}

TEST_CASE("teissier chains") {
    const Ring r = ring({"x", "y"});
    const auto same = teissier_criterion(affine(r), ideal(r, {"x^2", "y^2"}), ideal(r, {"x^2", "x*y", "y^2"}), config());
    CHECK(same.mixed_multiplicities == std::vector<std::uint64_t>{4, 4, 4});
    CHECK(same.holds());
    const auto diff = teissier_criterion(affine(r), ideal(r, {"x", "y"}), ideal(r, {"x^2", "y^3"}), config());
    CHECK(diff.mixed_multiplicities == std::vector<std::uint64_t>{1, 2, 6});
    CHECK_FALSE(diff.holds());
    const Ring s = ring({"x", "y", "z"});
    CHECK_THROWS_AS(teissier_criterion(affine(s), ideal(s, {"z"}), ideal(s, {"x*z", "y*z", "z^2"}), config()),
                    PreconditionFailed);
}

TEST_CASE("rees test") {
    const Ring r = ring({"x", "y"});
    const auto eq = rees_test(affine(r), ideal(r, {"x^2", "y^2"}), ideal(r, {"x^2", "x*y", "y^2"}), config());
    CHECK(eq.holds());
    CHECK(eq.left_profile.e == std::vector<std::uint64_t>{0, 4});
    CHECK(eq.right_profile.e == std::vector<std::uint64_t>{0, 4});
    const Ring s = ring({"x", "y", "z"});
    const auto ne = rees_test(affine(s), ideal(s, {"z^2"}), ideal(s, {"z"}), config());
    CHECK_FALSE(ne.holds());
    REQUIRE(ne.first_failure().has_value());
    CHECK(ne.first_failure()->index == 1);
    CHECK_THROWS_AS(rees_test(affine(s), ideal(s, {"z"}), ideal(s, {"z^2"}), config()), PreconditionFailed);
}

TEST_CASE("product formula with binomial weights") {
    const Ring r = ring({"x", "y"});
    const auto res = product_formula_check(affine(r), ideal(r, {"x", "y"}), ideal(r, {"x^2", "y^3"}), 2, config());
    CHECK(res.lhs == 11);
    CHECK(res.lhs == oracle::newton_multiplicity(exponents(ideal(r, {"x", "y"}) * ideal(r, {"x^2", "y^3"}))));
    CHECK(res.binomial_sum == 11);
    CHECK(res.plain_sum == 9);
    CHECK(res.binomial_matches);
    CHECK_FALSE(res.plain_matches);
}

TEST_CASE("exact root comparison") {
    CHECK(compare_root_sum(1, 6, 11, 2) < 0);
    CHECK(compare_root_sum(1, 1, 4, 2) == 0);
    CHECK(compare_root_sum(2, 8, 18, 2) == 0);
    CHECK(compare_root_sum(1, 8, 27, 3) == 0);
    CHECK(compare_root_sum(1, 8, 26, 3) < 0);
    CHECK(compare_root_sum(1, 8, 28, 3) > 0);
    CHECK(compare_root_sum(0, 0, 0, 2) == 0);
    // Gaps far below double precision.
    const Integer big("10000000000000000000000000000000000000000");
    CHECK(compare_root_sum(big, 0, big + 1, 2) > 0);
    CHECK(compare_root_sum(big * 4, big, big * 9, 2) == 0);
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> v(0, 30);
    for (int trial = 0; trial < 300; ++trial) {
        const int a = v(rng), b = v(rng);
        for (unsigned k : {2u, 3u, 4u}) {
            Integer z = 1, s = a + b;
            Integer ak = 1, bk = 1;
            for (unsigned i = 0; i < k; ++i) z *= s, ak *= a, bk *= b;
            CHECK(compare_root_sum(ak, bk, z, k) == 0);
            CHECK(compare_root_sum(ak, bk, z + 1, k) > 0);
            if (z > 0) CHECK(compare_root_sum(ak, bk, z - 1, k) < 0);
        }
    }
}

TEST_CASE("minkowski inequality") {
    const Ring r = ring({"x", "y"});
    const auto strict = minkowski_check(affine(r), ideal(r, {"x", "y"}), ideal(r, {"x^2", "y^3"}), 2, config());
    CHECK(strict.product == 11);
    CHECK(strict.holds);
    CHECK_FALSE(strict.equality);
    for (const auto& I : {ideal(r, {"x", "y"}), ideal(r, {"x^2", "y^3"}), ideal(r, {"x^2", "x*y", "y^2"})}) {
        const auto eq = minkowski_check(affine(r), I, I, 2, config());
        CHECK(eq.equality);
    }
}

TEST_CASE("mixed inequalities") {
    const Ring r = ring({"x", "y"});
    for (const auto& v : mixed_inequality_check(affine(r), ideal(r, {"x", "y"}), ideal(r, {"x^2", "y^3"}), config()))
        CHECK(v.status != VerdictStatus::fails);
}

TEST_CASE("power equivalence probes") {
    const Ring r = ring({"x", "y"});
    CHECK(power_equivalence_probe(affine(r), Ideal::maximal(r), ideal(r, {"x^2", "y^2"}), 2, 1, config()).holds());
    const Ring s = ring({"x", "y", "z"});
    CHECK(power_equivalence_probe(affine(s), ideal(s, {"z"}), ideal(s, {"z^2"}), 2, 1, config()).holds());
    CHECK_FALSE(power_equivalence_probe(affine(s), ideal(s, {"z"}), ideal(s, {"z^2"}), 1, 1, config()).holds());
}

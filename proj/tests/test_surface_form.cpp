#include "mixsegre/error.hpp"
#include "mixsegre/surface.hpp"

#include <doctest.h>

#include <random>

using namespace mixsegre;

namespace {

IntegerMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
    IntegerMatrix M;
    for (const auto& row : rows) {
        std::vector<Integer> r;
        for (long v : row) r.emplace_back(v);
        M.push_back(std::move(r));
    }
    return M;
}

RationalVector random_vector(std::size_t n, std::mt19937_64& rng, int lo = 0, int hi = 6) {
    std::uniform_int_distribution<int> d(lo, hi);
    RationalVector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(d(rng));
    return v;
}

// Trees of rational curves, redrawn until negative definite.
IntegerMatrix random_tree(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> size(1, 6), self(2, 4);
    const std::size_t n = static_cast<std::size_t>(size(rng));
    IntegerMatrix M(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) M[i][i] = -self(rng);
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t parent = (i >= 3 && rng() % 2) ? 1 : i - 1;
        M[i][parent] = M[parent][i] = 1;
    }
    return negdef_check(M) ? M : random_tree(rng);
}

} // namespace

TEST_CASE("total transform solves") {
    CHECK(total_transform(ints({{-2}}), {Rational(1)}) == RationalVector{Rational(1, 2)});
    CHECK(total_transform(ints({{-2, 1}, {1, -2}}), {1, 0}) == RationalVector{Rational(2, 3), Rational(1, 3)});
}

TEST_CASE("chain matrices are negative definite with positive transforms") {
    for (std::size_t r = 1; r <= 8; ++r) {
        const IntegerMatrix M = a_chain_matrix(r);
        CHECK(negdef_check(M));
        for (std::size_t j = 0; j < r; ++j) {
            RationalVector c(r, 0);
            c[j] = 1;
            const RationalVector a = total_transform(M, c);
            for (const auto& x : a) CHECK(x > 0);
            // -M a = c.
            for (std::size_t i = 0; i < r; ++i) {
                Rational s = 0;
                for (std::size_t k = 0; k < r; ++k) s -= M[i][k] * a[k];
                CHECK(s == c[i]);
            }
        }
    }
}

TEST_CASE("definiteness checks") {
    CHECK(negdef_check(ints({{-2, 1}, {1, -2}})));
    CHECK_FALSE(negdef_check(ints({{-1, 1}, {1, -1}})));
    CHECK_FALSE(negdef_check(ints({{-1, 2}, {2, -1}})));
    CHECK_FALSE(negdef_check(ints({{1}})));
    CHECK(posdef_check({{Rational(2), Rational(1)}, {Rational(1), Rational(2)}}));
    CHECK_FALSE(posdef_check({{Rational(1), Rational(2)}, {Rational(2), Rational(1)}}));
    CHECK_THROWS_AS(total_transform(ints({{1}}), {1}), PreconditionFailed);
}

TEST_CASE("pairing is symmetric and positive definite") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        const IntegerMatrix M = random_tree(rng);
        const RationalVector x = random_vector(M.size(), rng, -5, 5), y = random_vector(M.size(), rng, -5, 5);
        CHECK(pairing(M, x, y) == pairing(M, y, x));
        bool nonzero = false;
        for (const auto& v : x) nonzero = nonzero || v != 0;
        if (nonzero) CHECK(pairing(M, x, x) > 0);
        // Cauchy-Schwarz.
        CHECK(pairing(M, x, y) * pairing(M, x, y) <= pairing(M, x, x) * pairing(M, y, y));
    }
}

TEST_CASE("form inequality fuzz") {
    std::mt19937_64 rng(12);
    int instances = 0, attempts = 0;
    while (instances < 1000) {
        ++attempts;
        const IntegerMatrix M = random_tree(rng);
        const RationalVector u = random_vector(M.size(), rng), v = random_vector(M.size(), rng),
                             w = random_vector(M.size(), rng);
        const FormInequalityResult r = form_inequality_check(M, u, v, w);
        if (!r.hypothesis) continue;
        CHECK(r.conclusion);
        CHECK(r.lhs <= r.rhs);
        ++instances;
    }
    CHECK(attempts < 100000);
}

TEST_CASE("e2 from vanishing orders") {
    SurfaceResolutionData data{ints({{-2}}), {1}, {1}, {1}};
    const SurfaceNumbers s = e2_from_orders(data);
    CHECK(s.e2_I1 == 4);
    CHECK(s.e2_I2 == 4);
    CHECK(s.mixed == 4);
    CHECK(s.inequality_holds);
    SurfaceResolutionData bad{ints({{-2}}), {1, 2}, {1}, {1}};
    CHECK_THROWS(e2_from_orders(bad));
}

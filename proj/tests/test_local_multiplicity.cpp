#include "helpers.hpp"
#include "mixsegre/error.hpp"
#include "mixsegre/local_multiplicity.hpp"

#include <doctest.h>

using namespace mixsegre;
using namespace testing;

TEST_CASE("Hilbert-Samuel function of a coordinate hyperplane") {
    const Ring r = ring({"x", "y", "z"});
    const Ideal I = ideal(r, {"z"});
    for (unsigned N = 1; N <= 10; ++N) {
        CHECK(hilbert_samuel(I, N) == N * (N + 1) / 2);
        CHECK(hilbert_samuel(I, N) == oracle::macaulay_hilbert_samuel(to_sparse(I), 3, static_cast<int>(N)));
    }
}

TEST_CASE("Hilbert-Samuel function matches the oracle on local ideals") {
    const Ring r = ring({"x", "y"});
    const Ring s = ring({"x", "y", "z"});
    const std::vector<Ideal> cases = {
        ideal(r, {"x^2 - y^3"}),
        ideal(r, {"x - x^2", "y"}),
        ideal(r, {"x*y + x^3", "y^2 - x^2*y"}),
        ideal(r, {"(1 + x)*y^2"}),
        ideal(s, {"x*z", "y*z", "z^2"}),
        ideal(s, {"x*z + y^2", "z^2 - x^3"}),
    };
    for (const auto& I : cases)
        for (int N = 1; N <= 7; ++N) {
            INFO(I.to_string() << " N=" << N);
            CHECK(hilbert_samuel(I, static_cast<unsigned>(N)) ==
                  oracle::macaulay_hilbert_samuel(to_sparse(I), I.ring()->nvars(), N));
        }
}

TEST_CASE("cusp has multiplicity 2 with settled first differences") {
    const Ring r = ring({"x", "y"});
    const auto res = multiplicity_at_origin(ideal(r, {"x^2 - y^3"}));
    CHECK(res.multiplicity == 2);
    CHECK(res.local_dimension == 1);
    CHECK(res.stabilized);
    REQUIRE(res.samples.size() >= 3);
    for (std::size_t i = res.samples.size() - 3; i + 1 < res.samples.size(); ++i)
        CHECK(res.samples[i + 1].value - res.samples[i].value == 2);
}

TEST_CASE("multiplicities of basic germs") {
    const Ring r = ring({"x", "y"});
    const Ring s = ring({"x", "y", "z"});
    auto mult = [](const Ideal& I) { return multiplicity_at_origin(I); };
    CHECK(mult(Ideal::maximal(s)).multiplicity == 1);
    CHECK(mult(Ideal::maximal(s)).local_dimension == 0);
    CHECK(mult(Ideal(s)).local_dimension == 3);
    CHECK(mult(ideal(r, {"x*y"})).multiplicity == 2);
    CHECK(mult(ideal(r, {"x^2*y"})).multiplicity == 3);
    CHECK(mult(ideal(r, {"x + x^2"})).multiplicity == 1);
    CHECK(mult(ideal(r, {"x^2", "y^3"})).multiplicity == 6);
    CHECK(mult(ideal(s, {"z^3"})).multiplicity == 3);
    CHECK(mult(ideal(s, {"x*z", "y*z", "z^2"})).multiplicity == 1);
    CHECK(mult(ideal(s, {"x*z", "y*z", "z^2"})).local_dimension == 2);
}

TEST_CASE("origin off the variety") {
    const Ring r = ring({"x", "y"});
    const auto res = multiplicity_at_origin(ideal(r, {"x - 1"}));
    CHECK(res.local_dimension == -1);
    CHECK(res.multiplicity == 0);
    CHECK_FALSE(passes_through_origin(ideal(r, {"x - 1", "y"})));
    CHECK(passes_through_origin(ideal(r, {"x^2 + y", "y"})));
}

TEST_CASE("components away from the origin do not count") {
    const Ring r = ring({"x", "y"});
    CHECK(multiplicity_at_origin(ideal(r, {"x*(x - 1)"})).multiplicity == 1);
    CHECK(multiplicity_at_origin(ideal(r, {"x*(y - 1)^2", "y^2*x"})).local_dimension == 1);
}

TEST_CASE("resource limit when the differences cannot settle") {
    const Ring r = ring({"x", "y"});
    MultiplicityConfig tight;
    tight.n_max = 3;
    CHECK_THROWS_AS(multiplicity_at_origin(ideal(r, {"x^5 - y^7"}), tight), ResourceLimit);
}

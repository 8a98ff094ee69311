#pragma once

#include "mixsegre/document.hpp"
#include "mixsegre/ideal.hpp"
#include "mixsegre/segre.hpp"
#include "oracles.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace testing {

inline mixsegre::Ring ring(std::initializer_list<std::string> vars) { return mixsegre::PolynomialRing::make(vars); }

inline mixsegre::Polynomial poly(const mixsegre::Ring& r, const std::string& text) {
    return mixsegre::parse_polynomial(text, r);
}

inline mixsegre::Ideal ideal(const mixsegre::Ring& r, std::initializer_list<std::string> gens) {
    std::vector<mixsegre::Polynomial> polys;
    for (const auto& g : gens) polys.push_back(poly(r, g));
    return mixsegre::Ideal(r, std::move(polys));
}

inline oracle::SparsePoly to_sparse(const mixsegre::Polynomial& p) {
    oracle::SparsePoly out;
    for (const auto& t : p.terms()) {
        oracle::Exponent e(p.ring()->nvars());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[i];
        out.emplace_back(t.coeff, e);
    }
    return out;
}

inline std::vector<oracle::SparsePoly> to_sparse(const mixsegre::Ideal& I) {
    std::vector<oracle::SparsePoly> out;
    for (const auto& g : I.generators()) out.push_back(to_sparse(g));
    return out;
}

// Exponents of a monomial ideal's generators.
inline std::vector<oracle::Exponent> exponents(const mixsegre::Ideal& I) {
    std::vector<oracle::Exponent> out;
    for (const auto& g : I.generators()) out.push_back(to_sparse(g).front().second);
    return out;
}

inline mixsegre::GenericityConfig config(std::uint64_t seed = mixsegre::kDefaultSeed) {
    mixsegre::GenericityConfig c;
    c.seed = seed;
    return c;
}

inline mixsegre::GermContext affine(const mixsegre::Ring& r) { return mixsegre::GermContext::affine_space(r); }

} // namespace testing

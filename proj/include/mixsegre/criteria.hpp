#pragma once

#include "mixsegre/rational.hpp"
#include "mixsegre/segre.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mixsegre {

struct TupleTriple {
    std::vector<Integer> a, b, c;
};

struct TupleLemmaResult {
    bool hypothesis_ok = false;
    bool sums_equal = false;
    bool componentwise_equal = false;
};

// Under a_i^2 <= b_i c_i, equal sums force equal components. Throws Error if
// an instance contradicts that.
TupleLemmaResult tuple_lemma(const TupleTriple& t);

enum class VerdictStatus { holds, fails, hypothesis_not_met };
std::string to_string(VerdictStatus s);

struct Verdict {
    std::string criterion;
    // Codimension or index the verdict is about; 0 when not applicable.
    int index = 0;
    VerdictStatus status = VerdictStatus::holds;
    // The exact numbers compared, e.g. "e_2(I1) = 0, e_2^{1,1} = 0".
    std::string evidence;

    bool holds() const noexcept { return status == VerdictStatus::holds; }
};

struct ComparisonReport {
    SegreProfile left_profile;
    SegreProfile right_profile;
    MixedSegreTable mixed;
    // Teissier chain e_{i,n-i}, i = n down to 0; empty unless requested.
    std::vector<std::uint64_t> mixed_multiplicities;
    std::vector<Verdict> verdicts;

    // All verdicts hold (hypothesis_not_met counts as not holding).
    bool holds() const;
    std::optional<Verdict> first_failure() const;
};

// e(I1) = e_{n-1,1} = ... = e(I2) for ideals primary to the maximal ideal.
ComparisonReport teissier_criterion(const GermContext& germ, const Ideal& I1, const Ideal& I2,
                                    const GenericityConfig& config);

// e_1(I1) = e_1^{1,1} = e_1(I2) and, for j = 2..n,
// e_j(I1) = e_j^{j-1,1} = e_j^{j-2,2}, e_j^{2,j-2} = e_j^{1,j-1} = e_j(I2).
ComparisonReport closure_battery(const GermContext& germ, const Ideal& I1, const Ideal& I2,
                                 const GenericityConfig& config);
// The same equalities restricted to j = first_j..n.
ComparisonReport closure_battery(const GermContext& germ, const Ideal& I1, const Ideal& I2,
                                 const GenericityConfig& config, int first_j);

// For I1 inside I2: equal Segre profiles. Throws PreconditionFailed when I1
// is not contained in I2 + ambient.
ComparisonReport rees_test(const GermContext& germ, const Ideal& I1, const Ideal& I2, const GenericityConfig& config);

struct ProductFormulaResult {
    int k = 0;
    std::uint64_t lhs = 0;
    // terms[i] = e_k^{i,k-i}, i = 0..k.
    std::vector<std::uint64_t> terms;
    Integer binomial_sum;
    Integer plain_sum;
    bool binomial_matches = false;
    bool plain_matches = false;
    // For k < n, the lower-codimension equalities the formula assumes.
    std::vector<Verdict> hypotheses;
    bool hypothesis_met = true;
    // "binomial", "plain", "both" or "neither".
    std::string verdict;
};

ProductFormulaResult product_formula_check(const GermContext& germ, const Ideal& I1, const Ideal& I2, int k,
                                           const GenericityConfig& config);

// Sign of z^{1/k} - (x^{1/k} + y^{1/k}), decided exactly.
int compare_root_sum(const Integer& x, const Integer& y, const Integer& z, unsigned k);

struct MinkowskiResult {
    int k = 0;
    std::uint64_t product = 0;
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    // Sign of e_k(I1 I2)^{1/k} - (e_k(I1)^{1/k} + e_k(I2)^{1/k}).
    int comparison = 0;
    bool holds = false;
    bool equality = false;
    std::vector<Verdict> hypotheses;
    bool hypothesis_met = true;
};

MinkowskiResult minkowski_check(const GermContext& germ, const Ideal& I1, const Ideal& I2, int k,
                                const GenericityConfig& config);

// Mixed-multiplicity bounds for primary pairs, the surface inequality at
// n = 2 and the codimension-k inequalities, each gated by its hypotheses.
std::vector<Verdict> mixed_inequality_check(const GermContext& germ, const Ideal& I1, const Ideal& I2,
                                            const GenericityConfig& config);

// closure_battery on (I1^a, I2^b).
ComparisonReport power_equivalence_probe(const GermContext& germ, const Ideal& I1, const Ideal& I2, unsigned a,
                                         unsigned b, const GenericityConfig& config);

} // namespace mixsegre

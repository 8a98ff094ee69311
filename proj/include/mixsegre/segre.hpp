#pragma once

#include "mixsegre/ideal.hpp"
#include "mixsegre/local_multiplicity.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace mixsegre {

inline constexpr std::uint64_t kDefaultSeed = 0x5E62E0C0FFEEULL;

// The germ (X, 0) inside affine space, presented by its defining ideal.
// Equidimensionality of X at 0 is the caller's obligation; only the fitted
// Hilbert-Samuel degree is checked against n.
struct GermContext {
    Ring ring;
    Ideal ambient;
    int n;

    static GermContext affine_space(const Ring& ring);
    // n is the local dimension of `ambient` at the origin.
    static GermContext from_ambient(const Ideal& ambient, const MultiplicityConfig& config = {});
};

// "Generic" is realised by seeded pseudo-random integer coefficients. Every
// certified number is recomputed under `verification_rounds` independent
// seeds and must agree exactly.
struct GenericityConfig {
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t coefficient_bound = 997;
    unsigned verification_rounds = 2;
    // Fresh draws allowed per round when a draw is visibly non-generic.
    unsigned retry_budget = 4;
    MultiplicityConfig multiplicity{};
};

// Combinations sum_i c_i g_i of the generators of `source`; coefficients are
// kept for replay.
struct GenericTuple {
    Ideal source;
    std::vector<Polynomial> combinations;
    std::vector<std::vector<std::int64_t>> coefficients;
    std::uint64_t seed_used = 0;
};

// Deterministic across platforms: mt19937_64 output mapped to a uniform
// integer by rejection, never through std::uniform_int_distribution.
class CoefficientStream {
public:
    explicit CoefficientStream(std::uint64_t seed);
    // Uniform in [-bound, bound].
    std::int64_t draw(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t round, std::uint64_t attempt, std::uint64_t purpose);

// `count` combinations with a full-rank coefficient matrix. Throws
// GenericityFailure after repeated rank deficiency.
GenericTuple generic_tuple(const Ideal& I, std::size_t count, std::uint64_t seed, std::uint64_t bound);
GenericTuple generic_tuple(const Ideal& I, std::size_t count, const GenericityConfig& config);

struct PolarStage {
    int k = 0;
    // P_{k-1} + (h_k); the ambient ideal at k = 0.
    Ideal section;
    // Saturated scheme ideal of the polar variety P_k; the unit ideal once the
    // germ at 0 is empty.
    Ideal polar;
    // m_k: multiplicity at 0 of P_k in dimension n - k.
    std::uint64_t polar_multiplicity = 0;
    // e_k; zero at k = 0.
    std::uint64_t segre_number = 0;
    // Hilbert-Samuel samples behind the two multiplicities.
    std::vector<HilbertSamuelSample> section_samples;
    std::vector<HilbertSamuelSample> polar_samples;
};

struct PolarChain {
    GermContext germ;
    Ideal source;
    GenericTuple tuple;
    std::vector<PolarStage> stages;
    // Seeds of every verification round that agreed with this chain.
    std::vector<std::uint64_t> seeds;
};

struct SegreProfile {
    // e[0] = e_1, ..., e[n-1] = e_n.
    std::vector<std::uint64_t> e;
    // m[0] = m_0, ..., m[n-1] = m_{n-1}.
    std::vector<std::uint64_t> m;

    // e_k, zero outside 1..n.
    std::uint64_t segre(int k) const;
    friend bool operator==(const SegreProfile&, const SegreProfile&) = default;
};

struct MixedSegreTable {
    int n = 0;
    // (k, i, j) -> e_k^{i,j} for i + j = k, boundary entries (k,k,0) and
    // (k,0,k) included, plus the first-codimension entry (1,1,1).
    std::map<std::tuple<int, int, int>, std::uint64_t> entries;

    std::uint64_t at(int k, int i, int j) const;
};

// The polar recursion on explicit combinations h_1..h_length, saturating
// against `support` at each stage. No certification; throws
// GenericityFailure when the draw is visibly degenerate.
std::vector<PolarStage> polar_recursion(const GermContext& germ, const Ideal& support,
                                        const std::vector<Polynomial>& combinations, std::size_t length,
                                        const MultiplicityConfig& config);

PolarChain polar_chain(const GermContext& germ, const Ideal& I, const GenericityConfig& config);
// One chain per verification round, all certified to agree numerically.
std::vector<PolarChain> polar_chain_rounds(const GermContext& germ, const Ideal& I, const GenericityConfig& config);

SegreProfile segre_profile(const GermContext& germ, const Ideal& I, const GenericityConfig& config);
SegreProfile profile_of(const PolarChain& chain);

// Segre numbers of I on the subgerm presented by `subspace` (added to the
// ambient ideal). No component of the subgerm may lie in V(I).
SegreProfile segre_on_subspace(const GermContext& germ, const Ideal& I, const Ideal& subspace,
                               const GenericityConfig& config);

// e_k^{i,j}(I1, I2), i + j >= k; (k,k,0) and (k,0,k) are e_k(I1) and e_k(I2).
std::uint64_t mixed_segre(const GermContext& germ, const Ideal& I1, const Ideal& I2, int k, int i, int j,
                          const GenericityConfig& config);
MixedSegreTable mixed_segre_table(const GermContext& germ, const Ideal& I1, const Ideal& I2,
                                  const GenericityConfig& config);

// Teissier's e_{i,n-i}(I1, I2) for ideals primary to the maximal ideal.
std::uint64_t mixed_multiplicity_primary(const GermContext& germ, const Ideal& I1, const Ideal& I2, int i,
                                         const GenericityConfig& config);

// I + ambient is primary to the maximal ideal at 0.
bool is_primary_at_origin(const GermContext& germ, const Ideal& I, const MultiplicityConfig& config = {});

struct ChainConditionResult {
    bool holds = false;
    // First k with |Lambda_{k+1}| not inside |Lambda_k|, if any.
    std::optional<int> failing_k;
};

// Support containments |Lambda_k| >= |Lambda_{k+1}| from the first nonzero
// Segre cycle on, checked in every verification round.
ChainConditionResult chain_condition(const GermContext& germ, const Ideal& I, const GenericityConfig& config);

// P_k and e_k computed from I agree with those computed from the ideal of
// the first k+1 combinations.
bool truncation_check(const GermContext& germ, const Ideal& I, int k, const GenericityConfig& config);

} // namespace mixsegre

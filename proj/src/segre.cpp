#include "mixsegre/segre.hpp"

#include "mixsegre/error.hpp"
#include "mixsegre/groebner.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>

namespace mixsegre {

namespace {

constexpr const char* kModule = "segre_core";

// Purpose tags keep the streams of different tuples in one round apart.
enum Purpose : std::uint64_t {
    kPolarTuple = 1,
    kFirstFactor = 2,
    kSecondFactor = 3,
    kMixedSpan = 4,
    kPrimaryFirst = 5,
    kPrimarySecond = 6,
};

// A draw that is visibly not generic. Caught by the round driver and retried.
struct DegenerateDraw {
    std::string reason;
};

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::size_t matrix_rank(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (auto v : r) row.emplace_back(static_cast<long>(v));
        m.push_back(std::move(row));
    }
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const Rational factor = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Multiplicity at 0 counted in dimension `dim`: zero when the scheme misses
// the origin or is smaller there, a degenerate draw when it is larger.
std::uint64_t multiplicity_in_dimension(const Ideal& J, int dim, const MultiplicityConfig& config,
                                        const char* what, std::vector<HilbertSamuelSample>* samples = nullptr) {
    if (!passes_through_origin(J)) return 0;
    const LocalMultiplicityResult r = multiplicity_at_origin(J, config);
    if (samples) *samples = r.samples;
    if (r.local_dimension > dim)
        throw DegenerateDraw{std::string(what) + " has local dimension " + std::to_string(r.local_dimension) +
                             " > " + std::to_string(dim)};
    return r.local_dimension == dim ? r.multiplicity : 0;
}

std::vector<Polynomial> concatenated(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Runs `compute(round, attempt, bound)` for every verification round, retrying
// degenerate draws, and requires `key` to agree across rounds. The bound is
// escalated once on disagreement.
template <class Result, class Compute, class Key>
std::vector<Result> certify(const GenericityConfig& config, const std::string& label, Compute compute, Key key) {
    if (config.verification_rounds < 2)
        throw InvalidArgument(kModule, "certified output needs at least 2 verification rounds");
    if (config.coefficient_bound == 0) throw InvalidArgument(kModule, "coefficient bound must be positive");

    std::uint64_t bound = config.coefficient_bound;
    std::string disagreement;
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<Result> results;
        for (unsigned round = 0; round < config.verification_rounds; ++round) {
            std::optional<Result> result;
            std::string last_reason;
            for (unsigned attempt = 0; attempt <= config.retry_budget && !result; ++attempt) {
                try {
                    result = compute(round, attempt + 1000u * static_cast<unsigned>(pass), bound);
                } catch (const DegenerateDraw& d) {
                    last_reason = d.reason;
                }
            }
            if (!result)
                throw GenericityFailure(label + ": every draw was degenerate (" + last_reason + ")");
            results.push_back(std::move(*result));
        }
        const auto reference = key(results.front());
        bool agree = true;
        for (const auto& r : results) agree = agree && key(r) == reference;
        if (agree) return results;
        disagreement = label + ": verification rounds disagree at coefficient bound " + std::to_string(bound);
        if (bound > std::numeric_limits<std::uint32_t>::max())
            break;
        bound = bound * bound + 1;
    }
    throw GenericityFailure(disagreement);
}

void require_germ_ring(const GermContext& germ, const Ideal& I) {
    if (!compatible(germ.ring, I.ring())) throw RingMismatch("ideal is not in the germ's ring");
}

void require_cosupport(const GermContext& germ, const Ideal& I, const MultiplicityConfig& config) {
    if (I.is_zero()) throw PreconditionFailed(kModule, "the zero ideal has no Segre numbers");
    if (is_unit_ideal(I)) throw PreconditionFailed(kModule, "the unit ideal has no Segre numbers");
    const Ideal restricted = I + germ.ambient;
    if (!passes_through_origin(restricted)) return;
    const LocalMultiplicityResult r = multiplicity_at_origin(restricted, config);
    if (r.local_dimension >= germ.n)
        throw PreconditionFailed(kModule, "V(I) contains a component of the germ: " + I.to_string());
}

PolarChain chain_for_round(const GermContext& germ, const Ideal& I, const GenericityConfig& config,
                           unsigned round, unsigned attempt, std::uint64_t bound) {
    const std::uint64_t seed = derive_seed(config.seed, round, attempt, kPolarTuple);
    PolarChain chain{germ, I, generic_tuple(I, static_cast<std::size_t>(germ.n), seed, bound), {}, {seed}};
    chain.stages = polar_recursion(germ, I, chain.tuple.combinations, static_cast<std::size_t>(germ.n),
                                   config.multiplicity);
    return chain;
}

// The k-th stage of the mixed recursion for one round.
std::uint64_t mixed_for_round(const GermContext& germ, const Ideal& I1, const Ideal& I2, int k, int i, int j,
                              const GenericityConfig& config, unsigned round, unsigned attempt,
                              std::uint64_t bound) {
    std::vector<Polynomial> f, g;
    if (i > 0)
        f = generic_tuple(I1, static_cast<std::size_t>(i), derive_seed(config.seed, round, attempt, kFirstFactor),
                          bound)
                .combinations;
    if (j > 0)
        g = generic_tuple(I2, static_cast<std::size_t>(j), derive_seed(config.seed, round, attempt, kSecondFactor),
                          bound)
                .combinations;
    const Ideal span(germ.ring, concatenated(f, g));
    const GenericTuple h =
        generic_tuple(span, static_cast<std::size_t>(k), derive_seed(config.seed, round, attempt, kMixedSpan), bound);
    const auto stages = polar_recursion(germ, I1 + I2, h.combinations, static_cast<std::size_t>(k), config.multiplicity);
    return stages.back().segre_number;
}

std::uint64_t primary_for_round(const GermContext& germ, const Ideal& I1, const Ideal& I2, int i,
                                const GenericityConfig& config, unsigned round, unsigned attempt,
                                std::uint64_t bound) {
    std::vector<Polynomial> gens = germ.ambient.generators();
    if (i > 0) {
        auto f = generic_tuple(I1, static_cast<std::size_t>(i), derive_seed(config.seed, round, attempt, kPrimaryFirst),
                               bound);
        gens.insert(gens.end(), f.combinations.begin(), f.combinations.end());
    }
    if (germ.n - i > 0) {
        auto g = generic_tuple(I2, static_cast<std::size_t>(germ.n - i),
                               derive_seed(config.seed, round, attempt, kPrimarySecond), bound);
        gens.insert(gens.end(), g.combinations.begin(), g.combinations.end());
    }
    const Ideal J(germ.ring, std::move(gens));
    return multiplicity_in_dimension(J, 0, config.multiplicity, "complete intersection of generic elements");
}

} // namespace

GermContext GermContext::affine_space(const Ring& ring) {
    return GermContext{ring, Ideal(ring), static_cast<int>(ring->nvars())};
}

GermContext GermContext::from_ambient(const Ideal& ambient, const MultiplicityConfig& config) {
    if (!passes_through_origin(ambient))
        throw PreconditionFailed(kModule, "ambient ideal does not pass through the origin");
    const LocalMultiplicityResult r = multiplicity_at_origin(ambient, config);
    return GermContext{ambient.ring(), ambient, r.local_dimension};
}

CoefficientStream::CoefficientStream(std::uint64_t seed) : engine_(seed) {}

std::int64_t CoefficientStream::draw(std::uint64_t bound) {
    if (bound == 0 || bound > (std::numeric_limits<std::uint64_t>::max() >> 2))
        throw InvalidArgument(kModule, "coefficient bound out of range");
    const std::uint64_t range = 2 * bound + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return static_cast<std::int64_t>(x % range) - static_cast<std::int64_t>(bound);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t round, std::uint64_t attempt, std::uint64_t purpose) {
    std::uint64_t s = splitmix(seed);
    s = splitmix(s ^ round);
    s = splitmix(s ^ (attempt << 8));
    return splitmix(s ^ (purpose << 16));
}

GenericTuple generic_tuple(const Ideal& I, std::size_t count, std::uint64_t seed, std::uint64_t bound) {
    if (count < 1) throw InvalidArgument(kModule, "generic tuple needs count >= 1");
    if (I.is_zero()) throw InvalidArgument(kModule, "generic tuple of the zero ideal");
    const auto& gens = I.generators();
    const std::size_t want = std::min(count, gens.size());
    constexpr unsigned kRankRetries = 8;
    CoefficientStream stream(seed);
    for (unsigned attempt = 0; attempt < kRankRetries; ++attempt) {
        GenericTuple t{I, {}, {}, seed};
        for (std::size_t c = 0; c < count; ++c) {
            std::vector<std::int64_t> row;
            Polynomial combo(I.ring());
            for (const auto& g : gens) {
                const std::int64_t v = stream.draw(bound);
                row.push_back(v);
                if (v != 0) combo += Rational(static_cast<long>(v)) * g;
            }
            t.coefficients.push_back(std::move(row));
            t.combinations.push_back(std::move(combo));
        }
        if (matrix_rank(t.coefficients) == want) return t;
    }
    throw GenericityFailure("coefficient matrix stayed rank deficient; increase the coefficient bound");
}

GenericTuple generic_tuple(const Ideal& I, std::size_t count, const GenericityConfig& config) {
    return generic_tuple(I, count, config.seed, config.coefficient_bound);
}

std::vector<PolarStage> polar_recursion(const GermContext& germ, const Ideal& support,
                                        const std::vector<Polynomial>& combinations, std::size_t length,
                                        const MultiplicityConfig& config) {
    if (combinations.size() < length) throw InvalidArgument(kModule, "not enough combinations for the chain");
    std::vector<PolarStage> stages;
    PolarStage zero{0, germ.ambient, germ.ambient, 0, 0, {}, {}};
    zero.polar_multiplicity = multiplicity_in_dimension(germ.ambient, germ.n, config, "ambient germ", &zero.polar_samples);
    stages.push_back(std::move(zero));

    const Ideal unit = Ideal::unit(germ.ring);
    for (std::size_t k = 1; k <= length; ++k) {
        const int dim = germ.n - static_cast<int>(k);
        const PolarStage& prev = stages.back();
        if (is_unit_ideal(prev.polar)) {
            stages.push_back(PolarStage{static_cast<int>(k), unit, unit, 0, 0, {}, {}});
            continue;
        }
        PolarStage stage{static_cast<int>(k), prev.polar.with(combinations[k - 1]), unit, 0, 0, {}, {}};
        stage.polar = saturate(stage.section, support);
        if (!passes_through_origin(stage.polar)) stage.polar = unit;
        const std::uint64_t cut = multiplicity_in_dimension(stage.section, dim, config, "section of the polar variety",
                                                            &stage.section_samples);
        stage.polar_multiplicity =
            multiplicity_in_dimension(stage.polar, dim, config, "polar variety", &stage.polar_samples);
        if (stage.polar_multiplicity > cut)
            throw DegenerateDraw{"polar multiplicity exceeds the multiplicity of the section"};
        stage.segre_number = cut - stage.polar_multiplicity;
        stages.push_back(std::move(stage));
    }
    return stages;
}

std::vector<PolarChain> polar_chain_rounds(const GermContext& germ, const Ideal& I, const GenericityConfig& config) {
    require_germ_ring(germ, I);
    require_cosupport(germ, I, config.multiplicity);
    auto chains = certify<PolarChain>(
        config, "polar chain of " + I.to_string(),
        [&](unsigned round, unsigned attempt, std::uint64_t bound) {
            return chain_for_round(germ, I, config, round, attempt, bound);
        },
        [](const PolarChain& c) { return profile_of(c); });
    std::vector<std::uint64_t> seeds;
    for (const auto& c : chains) seeds.push_back(c.seeds.front());
    for (auto& c : chains) c.seeds = seeds;
    return chains;
}

PolarChain polar_chain(const GermContext& germ, const Ideal& I, const GenericityConfig& config) {
    return polar_chain_rounds(germ, I, config).front();
}

SegreProfile profile_of(const PolarChain& chain) {
    SegreProfile p;
    for (const auto& s : chain.stages) {
        if (s.k >= 1) p.e.push_back(s.segre_number);
        if (s.k < chain.germ.n) p.m.push_back(s.polar_multiplicity);
    }
    return p;
}

std::uint64_t SegreProfile::segre(int k) const {
    if (k < 1 || static_cast<std::size_t>(k) > e.size()) return 0;
    return e[static_cast<std::size_t>(k - 1)];
}

std::uint64_t MixedSegreTable::at(int k, int i, int j) const {
    auto it = entries.find({k, i, j});
    if (it == entries.end())
        throw InvalidArgument(kModule, "no mixed Segre entry (" + std::to_string(k) + ", " + std::to_string(i) + ", " +
                                           std::to_string(j) + ")");
    return it->second;
}

SegreProfile segre_profile(const GermContext& germ, const Ideal& I, const GenericityConfig& config) {
    return profile_of(polar_chain(germ, I, config));
}

SegreProfile segre_on_subspace(const GermContext& germ, const Ideal& I, const Ideal& subspace,
                               const GenericityConfig& config) {
    require_germ_ring(germ, I);
    require_germ_ring(germ, subspace);
    const Ideal presented = subspace + germ.ambient;
    if (!passes_through_origin(presented)) return {};
    if (!ideals_equal(saturate(presented, I), presented))
        throw PreconditionFailed(kModule, "a component of the subgerm lies in V(I)");
    const GermContext sub = GermContext::from_ambient(presented, config.multiplicity);
    if (sub.n <= 0) return {};
    return segre_profile(sub, I, config);
}

std::uint64_t mixed_segre(const GermContext& germ, const Ideal& I1, const Ideal& I2, int k, int i, int j,
                          const GenericityConfig& config) {
    require_germ_ring(germ, I1);
    require_germ_ring(germ, I2);
    if (i < 0 || j < 0 || i + j < k || k < 1 || k > germ.n)
        throw InvalidArgument(kModule, "mixed Segre index needs i + j >= k, i, j >= 0 and 1 <= k <= n");
    if (i == k && j == 0) return segre_profile(germ, I1, config).segre(k);
    if (i == 0 && j == k) return segre_profile(germ, I2, config).segre(k);
    require_cosupport(germ, I1, config.multiplicity);
    require_cosupport(germ, I2, config.multiplicity);
    const auto values = certify<std::uint64_t>(
        config,
        "mixed Segre number e_" + std::to_string(k) + "^{" + std::to_string(i) + "," + std::to_string(j) + "}",
        [&](unsigned round, unsigned attempt, std::uint64_t bound) {
            return mixed_for_round(germ, I1, I2, k, i, j, config, round, attempt, bound);
        },
        [](std::uint64_t v) { return v; });
    return values.front();
}

MixedSegreTable mixed_segre_table(const GermContext& germ, const Ideal& I1, const Ideal& I2,
                                  const GenericityConfig& config) {
    MixedSegreTable table;
    table.n = germ.n;
    const SegreProfile p1 = segre_profile(germ, I1, config);
    const SegreProfile p2 = segre_profile(germ, I2, config);
    for (int k = 1; k <= germ.n; ++k) {
        table.entries[{k, k, 0}] = p1.segre(k);
        table.entries[{k, 0, k}] = p2.segre(k);
        for (int i = 1; i < k; ++i) table.entries[{k, i, k - i}] = mixed_segre(germ, I1, I2, k, i, k - i, config);
    }
    if (germ.n >= 1) table.entries[{1, 1, 1}] = mixed_segre(germ, I1, I2, 1, 1, 1, config);
    return table;
}

bool is_primary_at_origin(const GermContext& germ, const Ideal& I, const MultiplicityConfig& config) {
    const Ideal restricted = I + germ.ambient;
    if (!passes_through_origin(restricted)) return false;
    return multiplicity_at_origin(restricted, config).local_dimension == 0;
}

std::uint64_t mixed_multiplicity_primary(const GermContext& germ, const Ideal& I1, const Ideal& I2, int i,
                                         const GenericityConfig& config) {
    require_germ_ring(germ, I1);
    require_germ_ring(germ, I2);
    if (i < 0 || i > germ.n) throw InvalidArgument(kModule, "mixed multiplicity index needs 0 <= i <= n");
    if (!is_primary_at_origin(germ, I1, config.multiplicity) || !is_primary_at_origin(germ, I2, config.multiplicity))
        throw PreconditionFailed(kModule, "mixed multiplicities need ideals primary to the maximal ideal");
    auto run = [&](const Ideal& A, const Ideal& B, int a) {
        return certify<std::uint64_t>(
                   config, "mixed multiplicity e_{" + std::to_string(a) + "," + std::to_string(germ.n - a) + "}",
                   [&](unsigned round, unsigned attempt, std::uint64_t bound) {
                       return primary_for_round(germ, A, B, a, config, round, attempt, bound);
                   },
                   [](std::uint64_t v) { return v; })
            .front();
    };
    const std::uint64_t value = run(I1, I2, i);
    const std::uint64_t mirrored = run(I2, I1, germ.n - i);
    if (value != mirrored)
        throw GenericityFailure("mixed multiplicity is not symmetric: " + std::to_string(value) + " vs " +
                                std::to_string(mirrored));
    return value;
}

ChainConditionResult chain_condition(const GermContext& germ, const Ideal& I, const GenericityConfig& config) {
    const auto chains = polar_chain_rounds(germ, I, config);
    ChainConditionResult result{true, std::nullopt};
    for (const auto& chain : chains) {
        // Support ideals of the Segre cycles Lambda_1..Lambda_n.
        std::vector<Ideal> lambda;
        for (std::size_t k = 1; k < chain.stages.size(); ++k) {
            const auto& s = chain.stages[k];
            lambda.push_back(is_unit_ideal(s.polar) ? s.section : saturate(s.section, s.polar));
        }
        const SegreProfile p = profile_of(chain);
        int first = 1;
        while (first <= germ.n && p.segre(first) == 0) ++first;
        for (int k = first; k < germ.n; ++k) {
            if (p.segre(k + 1) == 0) continue;
            bool contained = p.segre(k) > 0;
            if (contained) {
                const Ideal& outer = lambda[static_cast<std::size_t>(k - 1)];
                const Ideal& inner = lambda[static_cast<std::size_t>(k)];
                for (const auto& g : outer.generators())
                    if (!radical_membership(g, inner)) {
                        contained = false;
                        break;
                    }
            }
            if (!contained) {
                if (!result.failing_k || *result.failing_k > k) result.failing_k = k;
                result.holds = false;
                break;
            }
        }
    }
    return result;
}

bool truncation_check(const GermContext& germ, const Ideal& I, int k, const GenericityConfig& config) {
    require_germ_ring(germ, I);
    if (k < 1 || k > germ.n) throw InvalidArgument(kModule, "truncation index needs 1 <= k <= n");
    require_cosupport(germ, I, config.multiplicity);
    struct Outcome {
        std::uint64_t full_e;
        std::uint64_t truncated_e;
        bool same_polar;
    };
    const auto outcomes = certify<Outcome>(
        config, "truncation check at k = " + std::to_string(k),
        [&](unsigned round, unsigned attempt, std::uint64_t bound) {
            const auto tuple = generic_tuple(I, static_cast<std::size_t>(k + 1),
                                             derive_seed(config.seed, round, attempt, kPolarTuple), bound);
            const Ideal truncated(germ.ring, tuple.combinations);
            const auto full = polar_recursion(germ, I, tuple.combinations, static_cast<std::size_t>(k), config.multiplicity);
            const auto part =
                polar_recursion(germ, truncated, tuple.combinations, static_cast<std::size_t>(k), config.multiplicity);
            return Outcome{full.back().segre_number, part.back().segre_number,
                           ideals_equal(full.back().polar, part.back().polar)};
        },
        [](const Outcome& o) { return std::make_tuple(o.full_e, o.truncated_e, o.same_polar); });
    return std::all_of(outcomes.begin(), outcomes.end(),
                       [](const Outcome& o) { return o.same_polar && o.full_e == o.truncated_e; });
}

} // namespace mixsegre

#pragma once

#include "mixsegre/ideal.hpp"

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mixsegre {

// Budgets for a single Buchberger run. Exceeding one raises ResourceLimit
// carrying the partial statistics; nothing is ever silently truncated.
struct GroebnerLimits {
    std::size_t max_basis_size = 5000;
    long max_degree = 120;
};

// Process-wide defaults used by the ideal toolbox below.
GroebnerLimits default_groebner_limits();
void set_default_groebner_limits(const GroebnerLimits& limits);

// Counters accumulated over the process lifetime. Deterministic for a given
// sequence of calls, so reports may include them.
struct EngineCounters {
    std::atomic<std::uint64_t> groebner_runs{0};
    std::atomic<std::uint64_t> pairs_reduced{0};
    std::atomic<std::uint64_t> zero_reductions{0};
};
EngineCounters& engine_counters();
void reset_engine_counters();

class GroebnerBasis {
public:
    GroebnerBasis(Ring ring, std::vector<Polynomial> basis, bool reduced);

    // The ring carries the order the basis was computed in.
    const Ring& ring() const noexcept { return ring_; }
    const MonomialOrder& order() const noexcept { return ring_->order(); }
    const std::vector<Polynomial>& basis() const noexcept { return basis_; }
    bool reduced() const noexcept { return reduced_; }
    bool is_unit() const noexcept;

    // Remainder with no term divisible by a leading monomial of the basis.
    Polynomial normal_form(const Polynomial& p) const;
    bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
    std::vector<Monomial> leading_monomials() const;
    Ideal ideal() const { return Ideal(ring_, basis_); }

private:
    Ring ring_;
    std::vector<Polynomial> basis_;
    bool reduced_;
};

// Reduced Groebner basis of `ideal` under `order` (Buchberger with the
// Gebauer-Moeller pair criteria, normal selection strategy).
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits);

// Basis of `ideal` + (all monomials of degree `degree`) under grevlex. Terms
// of degree >= `degree` are discarded as soon as they appear.
GroebnerBasis buchberger_truncated(const Ideal& ideal, unsigned degree);

// Throws RingMismatch when p's ring order differs from the basis order.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

// Generators of ideal intersected with the subring of the last `keep_last`
// variables; the result lives in that subring.
Ideal eliminate(const Ideal& ideal, std::size_t keep_last);

// (I : J^infinity), one auxiliary variable per generator of J, then intersected.
Ideal saturate(const Ideal& I, const Ideal& J);
// (I : J).
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);

// Dimension of the quotient ring as a vector space; nullopt means infinite.
class Colength {
public:
    static Colength finite(std::uint64_t value) { return Colength(value); }
    static Colength infinite() { return Colength(std::nullopt); }

    bool is_finite() const noexcept { return value_.has_value(); }
    std::uint64_t value() const;
    std::string to_string() const;

    friend bool operator==(const Colength&, const Colength&) = default;

private:
    explicit Colength(std::optional<std::uint64_t> v) : value_(v) {}
    std::optional<std::uint64_t> value_;
};

Colength colength(const Ideal& ideal);
// Number of monomials outside the monomial ideal generated by `leading`;
// nullopt when infinitely many.
std::optional<std::uint64_t> count_standard_monomials(const std::vector<Monomial>& leading, std::size_t nvars);

// p vanishes on V(I), decided by 1 in I + (t*p - 1).
bool radical_membership(const Polynomial& p, const Ideal& I);

// Krull dimension of V(I) in affine space; -1 for the unit ideal.
int dimension(const Ideal& ideal);

bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideals_equal(const Ideal& a, const Ideal& b);
bool is_unit_ideal(const Ideal& ideal);

// q with p = q*g, or nullopt if g does not divide p.
std::optional<Polynomial> exact_quotient(const Polynomial& p, const Polynomial& g);

} // namespace mixsegre

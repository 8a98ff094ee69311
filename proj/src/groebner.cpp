#include "mixsegre/groebner.hpp"

#include "mixsegre/error.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace mixsegre {

namespace {

std::mutex g_limits_mutex;
GroebnerLimits g_limits;

EngineCounters g_counters;

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

// a - c*q*b[from..], all lists descending, terms of degree >= trunc dropped
// when trunc > 0.
std::vector<Term> subtract_scaled(std::vector<Term>::const_iterator a_begin, std::vector<Term>::const_iterator a_end,
                                  const Rational& c, const Monomial& q, const std::vector<Term>& b, std::size_t from,
                                  const MonomialOrder& order, long trunc) {
    std::vector<Term> out;
    out.reserve(static_cast<std::size_t>(a_end - a_begin) + b.size());
    auto ai = a_begin;
    std::size_t bj = from;
    Monomial bm;
    bool have_b = false;
    auto load_b = [&] {
        while (bj < b.size()) {
            bm = b[bj].mono * q;
            if (trunc <= 0 || bm.degree() < trunc) {
                have_b = true;
                return;
            }
            ++bj;
        }
        have_b = false;
    };
    load_b();
    while (ai != a_end && have_b) {
        const int cmp = order.compare(ai->mono, bm);
        if (cmp > 0) {
            out.push_back(*ai++);
        } else if (cmp < 0) {
            out.push_back({Rational(-c * b[bj].coeff), bm});
            ++bj;
            load_b();
        } else {
            Rational s = ai->coeff - c * b[bj].coeff;
            if (s != 0) out.push_back({std::move(s), bm});
            ++ai;
            ++bj;
            load_b();
        }
    }
    for (; ai != a_end; ++ai) out.push_back(*ai);
    while (have_b) {
        out.push_back({Rational(-c * b[bj].coeff), bm});
        ++bj;
        load_b();
    }
    return out;
}

// Working basis: every polynomial ever added (monic), of which `active`
// indexes the current minimal basis.
class Workspace {
public:
    Workspace(Ring ring, long trunc) : ring_(std::move(ring)), trunc_(trunc) {}

    const Ring& ring() const { return ring_; }
    const Polynomial& poly(std::size_t i) const { return polys_[i]; }
    const Monomial& lm(std::size_t i) const { return lms_[i]; }
    std::size_t total() const { return polys_.size(); }
    const std::vector<std::size_t>& active() const { return active_; }

    std::size_t add(Polynomial p) {
        lms_.push_back(p.leading_monomial());
        masks_.push_back(lms_.back().support_mask());
        polys_.push_back(std::move(p));
        return polys_.size() - 1;
    }

    void set_active(std::vector<std::size_t> active) { active_ = std::move(active); }

    long find_reducer(const Monomial& m) const {
        const std::uint32_t mask = m.support_mask();
        for (std::size_t k : active_) {
            if ((masks_[k] & ~mask) != 0) continue;
            if (lms_[k].divides(m)) return static_cast<long>(k);
        }
        return -1;
    }

    // Full reduction against the active basis.
    Polynomial reduce(const Polynomial& p) const { return reduce_terms(p.terms()); }

    Polynomial reduce_terms(std::vector<Term> h) const {
        const auto& order = ring_->order();
        std::vector<Term> rest;
        std::size_t pos = 0;
        if (trunc_ > 0) std::erase_if(h, [&](const Term& t) { return t.mono.degree() >= trunc_; });
        while (pos < h.size()) {
            const Term& t = h[pos];
            const long k = find_reducer(t.mono);
            if (k < 0) {
                rest.push_back(t);
                ++pos;
                continue;
            }
            const Polynomial& g = polys_[static_cast<std::size_t>(k)];
            const Monomial q = t.mono / lms_[static_cast<std::size_t>(k)];
            const Rational c = t.coeff; // g is monic
            h = subtract_scaled(h.cbegin() + static_cast<long>(pos) + 1, h.cend(), c, q, g.terms(), 1, order, trunc_);
            pos = 0;
        }
        return Polynomial(ring_, std::move(rest));
    }

    std::vector<Term> spoly_terms(const Pair& pr) const {
        const Polynomial& f = polys_[pr.i];
        const Polynomial& g = polys_[pr.j];
        const Monomial qf = pr.lcm / lms_[pr.i];
        const Monomial qg = pr.lcm / lms_[pr.j];
        std::vector<Term> a;
        a.reserve(f.size());
        for (std::size_t k = 1; k < f.size(); ++k) {
            Monomial m = f.terms()[k].mono * qf;
            if (trunc_ <= 0 || m.degree() < trunc_) a.push_back({f.terms()[k].coeff, m});
        }
        return subtract_scaled(a.cbegin(), a.cend(), Rational(1), qg, g.terms(), 1, ring_->order(), trunc_);
    }

private:
    Ring ring_;
    long trunc_;
    std::vector<Polynomial> polys_;
    std::vector<Monomial> lms_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::size_t> active_;
};

class Buchberger {
public:
    Buchberger(Ring ring, const GroebnerLimits& limits, long trunc)
        : ws_(std::move(ring), trunc), limits_(limits), trunc_(trunc) {}

    std::vector<Polynomial> run(std::vector<Polynomial> inputs) {
        ++g_counters.groebner_runs;
        const auto& order = ws_.ring()->order();
        for (auto& p : inputs) p = p.monic();
        std::sort(inputs.begin(), inputs.end(), [&](const Polynomial& a, const Polynomial& b) {
            return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        for (auto& p : inputs) {
            Polynomial r = ws_.reduce(p);
            if (r.is_zero()) continue;
            if (r.is_constant()) return {Polynomial::constant(ws_.ring(), 1)};
            insert(r.monic());
        }
        while (true) {
            if (!pairs_.empty()) {
                auto best = pairs_.begin();
                for (auto it = pairs_.begin(); it != pairs_.end(); ++it)
                    if (order.compare(it->lcm, best->lcm) < 0) best = it;
                const Pair pr = *best;
                pairs_.erase(best);
                ++g_counters.pairs_reduced;
                ++pairs_done_;
                Polynomial r = ws_.reduce_terms(ws_.spoly_terms(pr));
                if (!consume(std::move(r))) return {Polynomial::constant(ws_.ring(), 1)};
            } else if (!virtual_.empty()) {
                const auto [g, t] = virtual_.back();
                virtual_.pop_back();
                ++g_counters.pairs_reduced;
                ++pairs_done_;
                Polynomial r = ws_.reduce_terms(low_tail_times(g, t));
                if (!consume(std::move(r))) return {Polynomial::constant(ws_.ring(), 1)};
            } else {
                break;
            }
        }
        return finalize();
    }

private:
    // false when the ideal turned out to be the unit ideal.
    bool consume(Polynomial r) {
        if (r.is_zero()) {
            ++g_counters.zero_reductions;
            return true;
        }
        if (r.is_constant()) return false;
        insert(r.monic());
        return true;
    }

    [[noreturn]] void limit_failure(const std::string& what) const {
        std::ostringstream os;
        os << what << " (basis elements so far: " << ws_.active().size() << ", total generated: " << ws_.total()
           << ", pairs reduced: " << pairs_done_ << ", pairs pending: " << pairs_.size() + virtual_.size() << ")";
        throw ResourceLimit("groebner_engine", os.str());
    }

    void insert(Polynomial p) {
        if (p.leading_monomial().degree() > limits_.max_degree)
            limit_failure("Groebner basis degree budget " + std::to_string(limits_.max_degree) + " exceeded");
        const std::size_t h = ws_.add(std::move(p));
        update(h);
        if (ws_.active().size() > limits_.max_basis_size)
            limit_failure("Groebner basis size budget " + std::to_string(limits_.max_basis_size) + " exceeded");
        if (trunc_ > 0) queue_virtual(h);
    }

    // Gebauer-Moeller installation of the new element h.
    void update(std::size_t h) {
        const Monomial& lh = ws_.lm(h);
        struct Candidate {
            Pair pair;
            bool coprime;
            bool alive = true;
        };
        std::vector<Candidate> C;
        for (std::size_t g : ws_.active()) C.push_back({{g, h, lcm(ws_.lm(g), lh)}, ws_.lm(g).coprime(lh)});

        std::vector<Candidate> D;
        for (std::size_t a = 0; a < C.size(); ++a) {
            C[a].alive = false;
            bool keep = C[a].coprime;
            if (!keep) {
                keep = true;
                for (const auto& c : C)
                    if (c.alive && c.pair.lcm.divides(C[a].pair.lcm)) {
                        keep = false;
                        break;
                    }
                if (keep)
                    for (const auto& d : D)
                        if (d.pair.lcm.divides(C[a].pair.lcm)) {
                            keep = false;
                            break;
                        }
            }
            if (keep) D.push_back(C[a]);
        }

        std::vector<Pair> kept;
        kept.reserve(pairs_.size() + D.size());
        for (auto& p : pairs_) {
            if (!lh.divides(p.lcm) || lcm(ws_.lm(p.i), lh) == p.lcm || lcm(lh, ws_.lm(p.j)) == p.lcm) kept.push_back(std::move(p));
        }
        for (auto& d : D) {
            if (d.coprime) continue;
            // Two monomials have a zero S-polynomial.
            if (ws_.poly(d.pair.i).is_monomial() && ws_.poly(h).is_monomial()) continue;
            kept.push_back(std::move(d.pair));
        }
        pairs_ = std::move(kept);

        std::vector<std::size_t> active;
        for (std::size_t g : ws_.active())
            if (!lh.divides(ws_.lm(g))) active.push_back(g);
        active.push_back(h);
        ws_.set_active(std::move(active));
    }

    // Pairs against the implicit generators of m^trunc: for every t with
    // deg(t*lm(g)) == trunc the S-polynomial is t times the part of the tail
    // of g below the leading degree.
    void queue_virtual(std::size_t g) {
        const Polynomial& p = ws_.poly(g);
        const long d = ws_.lm(g).degree();
        bool has_low = false;
        for (std::size_t k = 1; k < p.size(); ++k)
            if (p.terms()[k].mono.degree() < d) has_low = true;
        if (!has_low) return;
        const std::size_t n = ws_.ring()->nvars();
        Monomial t(n);
        std::function<void(std::size_t, long)> rec = [&](std::size_t var, long remaining) {
            if (var + 1 == n) {
                t.set(var, static_cast<int>(remaining));
                virtual_.push_back({g, t});
                return;
            }
            for (long e = remaining; e >= 0; --e) {
                t.set(var, static_cast<int>(e));
                rec(var + 1, remaining - e);
            }
            t.set(var, 0);
        };
        rec(0, trunc_ - d);
    }

    std::vector<Term> low_tail_times(std::size_t g, const Monomial& t) const {
        const Polynomial& p = ws_.poly(g);
        const long d = ws_.lm(g).degree();
        std::vector<Term> out;
        for (std::size_t k = 1; k < p.size(); ++k) {
            const auto& term = p.terms()[k];
            if (term.mono.degree() >= d) continue;
            Monomial m = term.mono * t;
            if (m.degree() < trunc_) out.push_back({term.coeff, m});
        }
        return out;
    }

    std::vector<Polynomial> finalize() const {
        const auto& order = ws_.ring()->order();
        std::vector<Polynomial> basis;
        for (std::size_t g : ws_.active()) {
            const Polynomial& p = ws_.poly(g);
            std::vector<Term> tail(p.terms().begin() + 1, p.terms().end());
            Polynomial reduced_tail = ws_.reduce_terms(std::move(tail));
            std::vector<Term> terms;
            terms.push_back(p.leading_term());
            for (const auto& t : reduced_tail.terms()) terms.push_back(t);
            basis.emplace_back(ws_.ring(), std::move(terms));
        }
        if (trunc_ > 0) {
            // Monomials of degree trunc not divisible by a leading monomial
            // complete the basis.
            const std::size_t n = ws_.ring()->nvars();
            Monomial t(n);
            std::function<void(std::size_t, long)> rec = [&](std::size_t var, long remaining) {
                if (var + 1 == n) {
                    t.set(var, static_cast<int>(remaining));
                    if (ws_.find_reducer(t) < 0) basis.push_back(Polynomial::monomial(ws_.ring(), t));
                    return;
                }
                for (long e = remaining; e >= 0; --e) {
                    t.set(var, static_cast<int>(e));
                    rec(var + 1, remaining - e);
                }
                t.set(var, 0);
            };
            if (n > 0) rec(0, trunc_);
        }
        std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
            return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        return basis;
    }

    Workspace ws_;
    GroebnerLimits limits_;
    long trunc_;
    std::vector<Pair> pairs_;
    std::vector<std::pair<std::size_t, Monomial>> virtual_;
    std::uint64_t pairs_done_ = 0;
};

std::vector<Polynomial> minimal_monomial_basis(const Ring& ring, const std::vector<Polynomial>& gens) {
    std::vector<Monomial> ms;
    for (const auto& g : gens) ms.push_back(g.leading_monomial());
    const auto& order = ring->order();
    std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
    std::vector<Monomial> minimal;
    for (const auto& m : ms) {
        bool redundant = false;
        for (const auto& k : minimal)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(m);
    }
    std::vector<Polynomial> out;
    for (const auto& m : minimal) out.push_back(Polynomial::monomial(ring, m));
    return out;
}

GroebnerBasis run_buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits, long trunc) {
    Ring ring = ideal.ring()->order() == order ? ideal.ring() : ideal.ring()->with_order(order);
    std::vector<Polynomial> gens;
    bool all_monomial = true;
    for (const auto& g : ideal.generators()) {
        Polynomial p = g.in_ring(ring);
        if (trunc > 0) p = p.truncated(trunc);
        if (p.is_zero()) continue;
        if (p.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, true);
        all_monomial = all_monomial && p.is_monomial();
        gens.push_back(std::move(p));
    }
    if (trunc > 0) {
        if (ring->nvars() == 0) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, true);
        if (trunc == 0) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, true);
        if (all_monomial) {
            const Ideal power = Ideal::maximal_power(ring, static_cast<unsigned>(trunc));
            for (const auto& m : power.generators()) gens.push_back(m);
            ++g_counters.groebner_runs;
            return GroebnerBasis(ring, minimal_monomial_basis(ring, gens), true);
        }
    } else if (all_monomial) {
        ++g_counters.groebner_runs;
        return GroebnerBasis(ring, minimal_monomial_basis(ring, gens), true);
    }
    Buchberger engine(ring, limits, trunc);
    return GroebnerBasis(ring, engine.run(std::move(gens)), true);
}

Ideal base_ideal_from_extended(const GroebnerBasis& gb, const Ring& base, std::size_t offset) {
    std::vector<Polynomial> keep;
    for (const auto& g : gb.basis()) {
        bool free_of_extra = true;
        for (const auto& t : g.terms()) {
            for (std::size_t i = 0; i < offset; ++i)
                if (t.mono[i] != 0) free_of_extra = false;
            if (!free_of_extra) break;
        }
        if (free_of_extra) keep.push_back(restrict_to(g, base, offset));
    }
    return Ideal(base, std::move(keep));
}

// Reduced basis generators, in the ring of `ideal`.
Ideal canonical(const Ideal& ideal) {
    GroebnerBasis gb = buchberger(ideal, ideal.ring()->order());
    return Ideal(ideal.ring(), gb.basis());
}

Ideal saturate_by(const Ideal& I, const Polynomial& g) {
    const Ring& R = I.ring();
    if (g.is_constant()) return I;
    Ring ext = R->with_leading_variables({"_sat"});
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(embed(f, ext, 1));
    gens.push_back(Polynomial::variable(ext, 0) * embed(g, ext, 1) - Polynomial::constant(ext, 1));
    GroebnerBasis gb = buchberger(Ideal(ext, std::move(gens)), ext->order());
    return base_ideal_from_extended(gb, R, 1);
}

} // namespace

GroebnerLimits default_groebner_limits() {
    std::lock_guard lock(g_limits_mutex);
    return g_limits;
}

void set_default_groebner_limits(const GroebnerLimits& limits) {
    std::lock_guard lock(g_limits_mutex);
    g_limits = limits;
}

EngineCounters& engine_counters() { return g_counters; }

void reset_engine_counters() {
    g_counters.groebner_runs = 0;
    g_counters.pairs_reduced = 0;
    g_counters.zero_reductions = 0;
}

GroebnerBasis::GroebnerBasis(Ring ring, std::vector<Polynomial> basis, bool reduced)
    : ring_(std::move(ring)), basis_(std::move(basis)), reduced_(reduced) {}

bool GroebnerBasis::is_unit() const noexcept { return basis_.size() == 1 && basis_.front().is_constant(); }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(basis_.size());
    for (const auto& g : basis_) out.push_back(g.leading_monomial());
    return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
    if (!compatible(p.ring(), ring_)) throw RingMismatch("normal form: polynomial order differs from the basis order");
    Workspace ws(ring_, 0);
    std::vector<std::size_t> active;
    for (const auto& g : basis_) active.push_back(ws.add(g.monic()));
    ws.set_active(std::move(active));
    return ws.reduce(p);
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
    return run_buchberger(ideal, order, default_groebner_limits(), 0);
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits) {
    return run_buchberger(ideal, order, limits, 0);
}

GroebnerBasis buchberger_truncated(const Ideal& ideal, unsigned degree) {
    if (degree == 0) {
        Ring ring = ideal.ring()->with_order(MonomialOrder::grevlex());
        return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, true);
    }
    return run_buchberger(ideal, MonomialOrder::grevlex(), default_groebner_limits(), static_cast<long>(degree));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) { return basis.normal_form(p); }

Ideal eliminate(const Ideal& ideal, std::size_t keep_last) {
    const std::size_t n = ideal.ring()->nvars();
    if (keep_last < 1 || keep_last >= n)
        throw InvalidArgument("groebner_engine", "eliminate: need 1 <= keep_last < number of variables");
    const std::size_t split = n - keep_last;
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::block(split));
    Ring sub = ideal.ring()->trailing_subring(keep_last);
    return base_ideal_from_extended(gb, sub, split);
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    const Ring& R = I.ring();
    if (I.is_zero() || J.is_zero()) return Ideal(R);
    Ring ext = R->with_leading_variables({"_int"});
    const Polynomial t = Polynomial::variable(ext, 0);
    const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(t * embed(f, ext, 1));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * embed(g, ext, 1));
    GroebnerBasis gb = buchberger(Ideal(ext, std::move(gens)), ext->order());
    return base_ideal_from_extended(gb, R, 1);
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    const Ring& R = I.ring();
    if (J.is_zero()) return Ideal::unit(R);
    if (is_unit_ideal(I)) return Ideal::unit(R);
    std::optional<Ideal> result;
    for (const auto& g : J.generators()) {
        if (g.is_constant()) return canonical(I);
        Ideal part = saturate_by(I, g);
        result = result ? intersect(*result, part) : part;
        if (result->is_zero()) break;
    }
    return canonical(*result);
}

std::optional<Polynomial> exact_quotient(const Polynomial& p, const Polynomial& g) {
    require_same_ring(p.ring(), g.ring());
    if (g.is_zero()) throw InvalidArgument("groebner_engine", "division by the zero polynomial");
    const Ring& R = p.ring();
    std::vector<Term> quotient;
    Polynomial rest = p;
    const Monomial& lg = g.leading_monomial();
    const Rational& cg = g.leading_coeff();
    while (!rest.is_zero()) {
        const Term& t = rest.leading_term();
        if (!lg.divides(t.mono)) return std::nullopt;
        const Monomial q = t.mono / lg;
        const Rational c = t.coeff / cg;
        quotient.push_back({c, q});
        rest = rest - g.mul_term(c, q);
    }
    return Polynomial(R, std::move(quotient));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    const Ring& R = I.ring();
    if (J.is_zero()) return Ideal::unit(R);
    std::optional<Ideal> result;
    for (const auto& g : J.generators()) {
        Ideal part(R);
        if (g.is_constant()) {
            part = I;
        } else {
            Ideal inter = intersect(I, Ideal(R, {g}));
            std::vector<Polynomial> gens;
            for (const auto& h : inter.generators()) {
                auto q = exact_quotient(h, g);
                if (!q) throw Error("groebner_engine", "internal: intersection element not divisible by the divisor");
                gens.push_back(*q);
            }
            part = Ideal(R, std::move(gens));
        }
        result = result ? intersect(*result, part) : part;
    }
    return canonical(*result);
}

std::uint64_t Colength::value() const {
    if (!value_) throw InvalidArgument("groebner_engine", "colength is infinite");
    return *value_;
}

std::string Colength::to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

std::optional<std::uint64_t> count_standard_monomials(const std::vector<Monomial>& leading, std::size_t nvars) {
    for (const auto& m : leading)
        if (m.is_one()) return 0;
    if (nvars == 0) return 1;
    std::vector<int> bound(nvars, -1);
    for (const auto& m : leading) {
        std::size_t var = nvars;
        int count = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (m[i] != 0) {
                var = i;
                ++count;
            }
        if (count == 1 && (bound[var] < 0 || m[var] < bound[var])) bound[var] = m[var];
    }
    for (int b : bound)
        if (b < 0) return std::nullopt;
    std::uint64_t total = 0;
    Monomial cur(nvars);
    auto divisible = [&](const Monomial& x) {
        for (const auto& m : leading)
            if (m.divides(x)) return true;
        return false;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t var) {
        if (var == nvars) {
            ++total;
            return;
        }
        for (int e = 0; e < bound[var]; ++e) {
            cur.set(var, e);
            if (divisible(cur)) break;
            rec(var + 1);
        }
        cur.set(var, 0);
    };
    rec(0);
    return total;
}

Colength colength(const Ideal& ideal) {
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex());
    auto c = count_standard_monomials(gb.leading_monomials(), ideal.ring()->nvars());
    return c ? Colength::finite(*c) : Colength::infinite();
}

bool radical_membership(const Polynomial& p, const Ideal& I) {
    require_same_ring(p.ring(), I.ring());
    if (p.is_zero()) return true;
    Ring ext = I.ring()->with_leading_variables({"_rad"});
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(embed(f, ext, 1));
    gens.push_back(Polynomial::variable(ext, 0) * embed(p, ext, 1) - Polynomial::constant(ext, 1));
    return buchberger(Ideal(ext, std::move(gens)), MonomialOrder::grevlex()).is_unit();
}

int dimension(const Ideal& ideal) {
    const std::size_t n = ideal.ring()->nvars();
    if (ideal.is_zero()) return static_cast<int>(n);
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex());
    if (gb.is_unit()) return -1;
    std::vector<std::uint32_t> masks;
    for (const auto& m : gb.leading_monomials()) masks.push_back(m.support_mask());
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        const int size = __builtin_popcount(s);
        if (size <= best) continue;
        bool independent = true;
        for (std::uint32_t m : masks)
            if ((m & ~s) == 0) {
                independent = false;
                break;
            }
        if (independent) best = size;
    }
    return best;
}

bool is_unit_ideal(const Ideal& ideal) {
    for (const auto& g : ideal.generators())
        if (g.is_constant()) return true;
    if (ideal.is_zero()) return false;
    return buchberger(ideal, ideal.ring()->order()).is_unit();
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
    require_same_ring(big.ring(), small.ring());
    GroebnerBasis gb = buchberger(big, big.ring()->order());
    for (const auto& g : small.generators())
        if (!gb.contains(g.in_ring(gb.ring()))) return false;
    return true;
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    GroebnerBasis ga = buchberger(a, MonomialOrder::grevlex());
    GroebnerBasis gb = buchberger(b, MonomialOrder::grevlex());
    return ga.basis() == gb.basis();
}

} // namespace mixsegre

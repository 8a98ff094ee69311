#include "mixsegre/ideal.hpp"

#include "mixsegre/error.hpp"

#include <algorithm>
#include <functional>

namespace mixsegre {

Ideal::Ideal(Ring ring) : ring_(std::move(ring)) {}

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    generators_.reserve(generators.size());
    for (auto& g : generators) {
        require_same_ring(ring_, g.ring());
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::maximal(const Ring& ring) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(gens));
}

Ideal Ideal::maximal_power(const Ring& ring, unsigned degree) {
    std::vector<Polynomial> gens;
    const std::size_t n = ring->nvars();
    if (n == 0) return unit(ring);
    Monomial m(n);
    std::function<void(std::size_t, int)> rec = [&](std::size_t var, int remaining) {
        if (var + 1 == n) {
            m.set(var, remaining);
            gens.push_back(Polynomial::monomial(ring, m));
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            m.set(var, e);
            rec(var + 1, remaining - e);
        }
        m.set(var, 0);
    };
    rec(0, static_cast<int>(degree));
    return Ideal(ring, std::move(gens));
}

long Ideal::max_degree() const noexcept {
    long d = -1;
    for (const auto& g : generators_) d = std::max(d, g.total_degree());
    return d;
}

Ideal operator+(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    std::vector<Polynomial> gens = a.generators_;
    gens.insert(gens.end(), b.generators_.begin(), b.generators_.end());
    return Ideal(a.ring_, std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators_)
        for (const auto& g : b.generators_) {
            Polynomial h = f * g;
            if (std::find(gens.begin(), gens.end(), h) == gens.end()) gens.push_back(std::move(h));
        }
    return Ideal(a.ring_, std::move(gens));
}

Ideal Ideal::pow(unsigned exponent) const {
    Ideal result = unit(ring_);
    for (unsigned i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

Ideal Ideal::with(const Polynomial& p) const {
    std::vector<Polynomial> gens = generators_;
    gens.push_back(p);
    return Ideal(ring_, std::move(gens));
}

Ideal Ideal::in_ring(const Ring& target) const {
    std::vector<Polynomial> gens;
    gens.reserve(generators_.size());
    for (const auto& g : generators_) gens.push_back(g.in_ring(target));
    return Ideal(target, std::move(gens));
}

std::string Ideal::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i > 0) out += ", ";
        out += generators_[i].to_string();
    }
    return out + ")";
}

} // namespace mixsegre

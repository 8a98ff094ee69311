#pragma once

#include "mixsegre/polynomial.hpp"

#include <string>
#include <vector>

namespace mixsegre {

// Finite generator list in a ring. Zero generators are dropped on
// construction; an ideal without generators is the zero ideal.
class Ideal {
public:
    explicit Ideal(Ring ring);
    Ideal(Ring ring, std::vector<Polynomial> generators);

    static Ideal unit(const Ring& ring);
    // (x_1, ..., x_n).
    static Ideal maximal(const Ring& ring);
    // All monomials of total degree exactly `degree`.
    static Ideal maximal_power(const Ring& ring, unsigned degree);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool is_zero() const noexcept { return generators_.empty(); }
    long max_degree() const noexcept;

    // Ideal sum and ideal product (generator-wise).
    friend Ideal operator+(const Ideal& a, const Ideal& b);
    friend Ideal operator*(const Ideal& a, const Ideal& b);
    Ideal pow(unsigned exponent) const;
    Ideal with(const Polynomial& p) const;

    Ideal in_ring(const Ring& target) const;

    // "(g1, g2, ...)" with canonical polynomial text.
    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Polynomial> generators_;
};

} // namespace mixsegre

#pragma once

#include "mixsegre/monomial.hpp"
#include "mixsegre/rational.hpp"
#include "mixsegre/ring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mixsegre {

struct Term {
    Rational coeff;
    Monomial mono;

    friend bool operator==(const Term&, const Term&) = default;
};

// Sparse distributed polynomial over the rationals. Terms are kept sorted
// strictly descending under the ring's order with no zero coefficients.
class Polynomial {
public:
    explicit Polynomial(Ring ring);
    // Sorts and combines; zero coefficients are dropped.
    Polynomial(Ring ring, std::vector<Term> terms);

    static Polynomial constant(Ring ring, const Rational& c);
    static Polynomial variable(Ring ring, std::size_t index);
    static Polynomial monomial(Ring ring, const Monomial& m, const Rational& c = 1);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    // Leading data under the ring's order. Throw InvalidArgument on zero.
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coeff() const { return leading_term().coeff; }

    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    Rational constant_term() const;
    // Highest and lowest total degree among the terms; -1 for zero.
    long total_degree() const noexcept;
    long order_at_origin() const noexcept;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
    Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    Polynomial pow(unsigned exponent) const;
    Polynomial monic() const;
    Polynomial mul_term(const Rational& c, const Monomial& m) const;
    // Formal partial derivative with respect to variable `index`.
    Polynomial derivative(std::size_t index) const;
    // Drops every term of total degree >= degree.
    Polynomial truncated(long degree) const;

    // Same variables, possibly another order: terms are re-sorted.
    Polynomial in_ring(const Ring& target) const;

    // Canonical text: `3*x^2*y - 1/2*z + 1`, terms in descending order.
    std::string to_string() const;

    friend bool operator==(const Polynomial& p, const Polynomial& q);

private:
    void normalize();

    Ring ring_;
    std::vector<Term> terms_;
};

// Maximal term of `p` under `order` (not necessarily the ring's order).
std::pair<Rational, Monomial> leading_term(const Polynomial& p, const MonomialOrder& order);

// Throws RingMismatch unless both polynomials share variables and order.
void require_same_ring(const Ring& a, const Ring& b);

// Moves `p` into `target` whose variables are `offset` extra variables
// followed by the variables of p's ring.
Polynomial embed(const Polynomial& p, const Ring& target, std::size_t offset);
// Inverse of embed; throws InvalidArgument if an extra variable occurs.
Polynomial restrict_to(const Polynomial& p, const Ring& target, std::size_t offset);

} // namespace mixsegre

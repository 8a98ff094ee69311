#include "mixsegre/polynomial.hpp"

#include "mixsegre/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace mixsegre {

namespace {

// mpq_class(a, b) keeps the fraction as given; GMP arithmetic expects lowest terms.
Rational canonical(Rational q) {
    q.canonicalize();
    return q;
}

} // namespace

void require_same_ring(const Ring& a, const Ring& b) {
    if (!compatible(a, b)) throw RingMismatch("polynomials live in different rings");
}

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.mono.size() != ring_->nvars())
            throw InvalidArgument("algebra_kernel", "monomial length does not match the ring");
    normalize();
}

void Polynomial::normalize() {
    const auto& order = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        t.coeff.canonicalize();
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(merged);
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({canonical(c), Monomial(ring->nvars())});
    return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
    if (index >= ring->nvars()) throw InvalidArgument("algebra_kernel", "variable index out of range");
    Monomial m(ring->nvars());
    m.set(index, 1);
    return monomial(std::move(ring), m);
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({canonical(c), m});
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw InvalidArgument("algebra_kernel", "zero polynomial has no leading term");
    return terms_.front();
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational Polynomial::constant_term() const {
    // The constant monomial is minimal in every supported order.
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
}

long Polynomial::total_degree() const noexcept {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

long Polynomial::order_at_origin() const noexcept {
    if (terms_.empty()) return -1;
    long d = terms_.front().mono.degree();
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

// Merge of two descending term lists, b scaled by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign,
                              const MonomialOrder& order) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const int c = order.compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({sign > 0 ? b[j].coeff : Rational(-b[j].coeff), b[j].mono});
            ++j;
        } else {
            Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
            if (s != 0) out.push_back({std::move(s), a[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({sign > 0 ? b[j].coeff : Rational(-b[j].coeff), b[j].mono});
    return out;
}

} // namespace

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p.ring_, q.ring_);
    Polynomial r(p.ring_);
    r.terms_ = merge_terms(p.terms_, q.terms_, +1, p.ring_->order());
    return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p.ring_, q.ring_);
    Polynomial r(p.ring_);
    r.terms_ = merge_terms(p.terms_, q.terms_, -1, p.ring_->order());
    return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p.ring_, q.ring_);
    if (p.is_zero() || q.is_zero()) return Polynomial(p.ring_);
    std::unordered_map<Monomial, Rational> acc;
    acc.reserve(p.size() * q.size());
    for (const auto& a : p.terms_)
        for (const auto& b : q.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) terms.push_back({std::move(c), m});
    Polynomial r(p.ring_);
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.ring_);
    if (c == 0) return r;
    r.terms_ = p.terms_;
    const Rational f = canonical(c);
    for (auto& t : r.terms_) t.coeff *= f;
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const Rational inv = 1 / leading_coeff();
    return inv * *this;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    // Multiplication by a monomial preserves the order of the terms.
    const Rational f = canonical(c);
    for (const auto& t : terms_) r.terms_.push_back({t.coeff * f, t.mono * m});
    return r;
}

Polynomial Polynomial::derivative(std::size_t index) const {
    if (index >= ring_->nvars()) throw InvalidArgument("algebra_kernel", "variable index out of range");
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        const int e = t.mono[index];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(index, e - 1);
        terms.push_back({t.coeff * e, m});
    }
    return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::truncated(long degree) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
        if (t.mono.degree() < degree) r.terms_.push_back(t);
    return r;
}

Polynomial Polynomial::in_ring(const Ring& target) const {
    if (!ring_->same_variables(*target)) throw RingMismatch("cannot move polynomial between rings with different variables");
    Polynomial r(target);
    r.terms_ = terms_;
    if (!(ring_->order() == target->order())) r.normalize();
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff < 0;
        const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string body;
        if (t.mono.is_one() || mag != 1) body = mixsegre::to_string(mag);
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            const int e = t.mono[i];
            if (e == 0) continue;
            if (!body.empty()) body += "*";
            body += ring_->variables()[i];
            if (e > 1) body += "^" + std::to_string(e);
        }
        out += body;
    }
    return out;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
    return compatible(p.ring_, q.ring_) && p.terms_ == q.terms_;
}

std::pair<Rational, Monomial> leading_term(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw InvalidArgument("algebra_kernel", "zero polynomial has no leading term");
    const Term* best = &p.terms().front();
    for (const auto& t : p.terms())
        if (order.compare(t.mono, best->mono) > 0) best = &t;
    return {best->coeff, best->mono};
}

Polynomial embed(const Polynomial& p, const Ring& target, std::size_t offset) {
    if (target->nvars() != p.ring()->nvars() + offset) throw InvalidArgument("algebra_kernel", "embedding size mismatch");
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < t.mono.size(); ++i) m.set(i + offset, t.mono[i]);
        terms.push_back({t.coeff, m});
    }
    return Polynomial(target, std::move(terms));
}

Polynomial restrict_to(const Polynomial& p, const Ring& target, std::size_t offset) {
    if (p.ring()->nvars() != target->nvars() + offset) throw InvalidArgument("algebra_kernel", "restriction size mismatch");
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < offset; ++i)
            if (t.mono[i] != 0) throw InvalidArgument("algebra_kernel", "polynomial involves an eliminated variable");
        for (std::size_t i = 0; i < target->nvars(); ++i) m.set(i, t.mono[i + offset]);
        terms.push_back({t.coeff, m});
    }
    return Polynomial(target, std::move(terms));
}

} // namespace mixsegre

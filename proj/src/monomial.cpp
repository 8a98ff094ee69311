#include "mixsegre/monomial.hpp"

#include "mixsegre/error.hpp"

#include <algorithm>
#include <limits>

namespace mixsegre {

namespace {

std::int32_t checked_exponent(std::int64_t e) {
    if (e < 0) throw InvalidArgument("algebra_kernel", "negative exponent");
    if (e > std::numeric_limits<std::int32_t>::max())
        throw ResourceLimit("algebra_kernel", "exponent exceeds machine width");
    return static_cast<std::int32_t>(e);
}

} // namespace

Monomial::Monomial(std::size_t nvars) {
    if (nvars > kMaxVariables)
        throw ResourceLimit("algebra_kernel", "too many variables (limit " + std::to_string(kMaxVariables) + ")");
    n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, int e) {
    const std::int32_t v = checked_exponent(e);
    deg_ += static_cast<std::int64_t>(v) - exps_[i];
    exps_[i] = v;
}

std::uint32_t Monomial::support_mask() const noexcept {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n_; ++i)
        if (exps_[i] != 0) mask |= 1u << i;
    return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        r.exps_[i] = checked_exponent(static_cast<std::int64_t>(a.exps_[i]) + b.exps_[i]);
    r.deg_ = a.deg_ + b.deg_;
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.exps_[i] = checked_exponent(a.exps_[i] - b.exps_[i]);
    r.deg_ = a.deg_ - b.deg_;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        r.deg_ += r.exps_[i];
    }
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
        r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        r.deg_ += r.exps_[i];
    }
    return r;
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n_; ++i) {
        h ^= static_cast<std::size_t>(exps_[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace mixsegre

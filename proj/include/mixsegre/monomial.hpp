#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace mixsegre {

// Variables beyond this count are rejected when a ring is created. Inputs
// stay well under it; the headroom is for elimination variables.
inline constexpr std::size_t kMaxVariables = 16;

// Exponent vector with inline storage. Total degree is cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars);
    Monomial(std::initializer_list<int> exponents);
    explicit Monomial(std::span<const int> exponents);

    std::size_t size() const noexcept { return n_; }
    int operator[](std::size_t i) const noexcept { return exps_[i]; }
    void set(std::size_t i, int e);
    long degree() const noexcept { return deg_; }
    bool is_one() const noexcept { return deg_ == 0; }

    // Bit i set iff variable i occurs; used as a cheap divisibility filter.
    std::uint32_t support_mask() const noexcept;

    bool divides(const Monomial& other) const noexcept;
    bool coprime(const Monomial& other) const noexcept;

    // Overflow-checked product; throws ResourceLimit past 32-bit exponents.
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.n_ == b.n_ && a.exps_ == b.exps_;
    }

    std::size_t hash() const noexcept;

private:
    std::array<std::int32_t, kMaxVariables> exps_{};
    std::uint8_t n_ = 0;
    std::int64_t deg_ = 0;
};

} // namespace mixsegre

template <>
struct std::hash<mixsegre::Monomial> {
    std::size_t operator()(const mixsegre::Monomial& m) const noexcept { return m.hash(); }
};

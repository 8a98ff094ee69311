#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mixsegre {

// GMP keeps mpq_class canonical after every arithmetic operation: the
// denominator is positive and coprime to the numerator, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

// Accepts "a" or "a/b" with an optional sign. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace mixsegre

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

}  // namespace nilorb

#pragma once

// Arbitrary-precision rationals, backed by GMP.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace crepant {

/// Exact rational number. mpq_class keeps values canonical (gcd = 1, positive
/// denominator) as long as every construction path goes through make_rational
/// or parse_rational.
using Rational = mpq_class;

inline Rational make_rational(long long num, long long den = 1) {
    Rational r{mpz_class{std::to_string(num)}, mpz_class{std::to_string(den)}};
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q".
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace crepant

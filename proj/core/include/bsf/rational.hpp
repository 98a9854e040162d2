#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bsf {

// Arbitrary-precision integers and gcd-reduced fractions with positive
// denominators. cpp_rational keeps both invariants on every operation, so the
// whole exact layer sits on top of these two aliases.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// "a", "-a" or "a/b" (b > 0 after normalization). Rejects everything else.
Rational parse_rational(const std::string& text);

// "a" or "a/b"; the round-trip through parse_rational is exact.
inline std::string rational_str(const Rational& q) { return q.str(); }

// Narrowing helper for table indices and small exponents.
long long to_long_checked(const BigInt& v);

}  // namespace bsf

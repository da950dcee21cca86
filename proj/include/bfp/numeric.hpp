#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bfp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer ipow(const Integer& base, std::uint64_t exp);

/// Smallest integer >= x.
Integer ceil(const Rational& x);

/// Largest integer <= x.
Integer floor(const Rational& x);

/// Fractional part in [0, 1).
Rational frac(const Rational& x);

/// Parses "num/den" or "num" (optionally signed). Decimal points, exponents
/// and other float spellings are rejected with ValidationError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);

/// Narrowing with a ValidationError when the value does not fit.
std::uint64_t to_u64(const Integer& x, const char* what);

}  // namespace bfp

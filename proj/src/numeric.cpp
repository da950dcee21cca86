#include "bfp/numeric.hpp"

#include <cctype>
#include <limits>

#include "bfp/errors.hpp"

namespace bfp {

Integer ipow(const Integer& base, std::uint64_t exp) {
  Integer result = 1;
  Integer b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

Integer floor(const Rational& x) {
  const Integer num = numerator(x);
  const Integer den = denominator(x);  // always positive
  Integer q = num / den;               // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil(const Rational& x) {
  const Integer f = floor(x);
  return Rational(f) == x ? f : f + 1;
}

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

Rational parse_rational(std::string_view text) {
  auto fail = [&](const std::string& why) -> Rational {
    throw ValidationError("invalid exact rational '" + std::string(text) + "': " + why);
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return fail("empty");
  const auto slash = s.find('/');
  auto parse_int = [&](std::string_view part, bool allow_sign) -> Integer {
    std::size_t i = 0;
    bool negative = false;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) {
      negative = part[i] == '-';
      ++i;
    }
    if (i == part.size()) fail("missing digits");
    Integer v = 0;
    for (; i < part.size(); ++i) {
      const char c = part[i];
      if (c == '.' || c == 'e' || c == 'E') fail("floating point is not accepted; write num/den");
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(std::string("unexpected character '") + c + "'");
      v = v * 10 + (c - '0');
    }
    return negative ? Integer(-v) : v;
  };
  if (slash == std::string::npos) return Rational(parse_int(s, true));
  const Integer num = parse_int(std::string_view(s).substr(0, slash), true);
  const Integer den = parse_int(std::string_view(s).substr(slash + 1), false);
  if (den == 0) return fail("zero denominator");
  return Rational(num, den);
}

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::uint64_t to_u64(const Integer& x, const char* what) {
  if (x < 0 || x > Integer(std::numeric_limits<std::uint64_t>::max()))
    throw ValidationError(std::string(what) + " is out of range: " + x.str());
  return static_cast<std::uint64_t>(x);
}

}  // namespace bfp

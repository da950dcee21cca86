#pragma once

// Sparse multivariate polynomials over the prime field F_p, in the variables
// x0..x{n-1} and optionally one distinguished variable (t or tau).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bfp/numeric.hpp"

namespace bfp {

/// Characteristic data: the prime p, gamma, and q = p^gamma.
class CharConfig {
 public:
  explicit CharConfig(std::uint32_t p, unsigned gamma = 1);

  std::uint32_t p() const noexcept { return p_; }
  unsigned gamma() const noexcept { return gamma_; }
  const Integer& q() const noexcept { return q_; }

  /// q^e as an exact integer.
  Integer q_pow(std::uint64_t e) const { return ipow(q_, e); }

  /// q as a machine word; throws when q is too large to index a list by.
  std::size_t q_index() const;

  bool operator==(const CharConfig& o) const noexcept { return p_ == o.p_ && gamma_ == o.gamma_; }

 private:
  std::uint32_t p_;
  unsigned gamma_;
  Integer q_;
};

bool is_prime(std::uint64_t n);

enum class Extra : std::uint8_t { none, t, tau };

/// Ambient ring descriptor: F_p[x0..x{n-1}] or F_p[x0..x{n-1}][t|tau].
struct Ring {
  std::uint32_t p = 2;
  std::size_t num_vars = 0;
  Extra extra = Extra::none;

  std::size_t arity() const noexcept { return num_vars + (extra == Extra::none ? 0 : 1); }
  Ring with_extra(Extra x) const noexcept { return Ring{p, num_vars, x}; }
  bool operator==(const Ring&) const = default;
};

Ring make_ring(const CharConfig& cfg, std::size_t num_vars, Extra extra = Extra::none);

/// Exponent vector. The distinguished variable, when present, is the last slot.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity) {}
  explicit Monomial(std::vector<Integer> exps);

  std::size_t arity() const noexcept { return exps_.size(); }
  const Integer& operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Integer>& exponents() const noexcept { return exps_; }
  const Integer& degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, Integer value);

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial scaled(const Integer& factor) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

 private:
  std::vector<Integer> exps_;
  Integer degree_ = 0;
};

/// Graded reverse lexicographic comparison: negative when a < b.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) < 0; }
};

using Coeff = std::uint32_t;

struct Term {
  Monomial mono;
  Coeff coeff = 0;
};

/// Canonical sparse polynomial: terms strictly decreasing in grevlex order,
/// every stored coefficient nonzero.
class Poly {
 public:
  explicit Poly(const Ring& ring) : ring_(ring) {}

  static Poly constant(const Ring& ring, std::uint64_t c);
  static Poly variable(const Ring& ring, std::size_t index, const Integer& exp = 1);
  static Poly monomial(const Ring& ring, Monomial m, std::uint64_t c = 1);
  /// Canonicalizes arbitrary terms: sorts, merges equal monomials, drops zeros.
  static Poly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  /// Maximum total degree; -1 for the zero polynomial.
  Integer total_degree() const;
  /// Maximum exponent of the variable in the given slot; -1 for zero.
  Integer degree_in(std::size_t slot) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator-() const;
  Poly scaled(std::uint64_t c) const;
  Poly times_term(const Monomial& m, Coeff c) const;
  Poly pow(const Integer& n) const;
  /// Multiplies every exponent by factor; equals f^factor when factor is a power of p.
  Poly exponents_scaled(const Integer& factor) const;

  bool operator==(const Poly& o) const;

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

/// Parses the polynomial grammar
///   expression = term ('+' term)*
///   term       = integer ('*' factor)* | factor ('*' factor)*
///   factor     = variable ('^' natural)?
/// with variables x0..x{n-1}, plus t or tau when the ring carries them.
Poly parse_poly(std::string_view text, const Ring& ring);

/// f^(q^e); every exponent multiplied by q^e since coefficients lie in F_p.
Poly frobenius_power(const Poly& f, std::uint64_t e, const CharConfig& cfg);

using FrobeniusDecomposition = std::map<Monomial, Poly, GrevlexLess>;

/// Writes f = sum_u a_u^(q^e) x^u with every exponent of u below q^e and
/// returns the nonzero a_u keyed by u.
FrobeniusDecomposition frobenius_decompose(const Poly& f, std::uint64_t e, const CharConfig& cfg);

namespace fp {
inline Coeff add(Coeff a, Coeff b, std::uint32_t p) {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Coeff>(s >= p ? s - p : s);
}
inline Coeff sub(Coeff a, Coeff b, std::uint32_t p) { return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p - b); }
inline Coeff mul(Coeff a, Coeff b, std::uint32_t p) { return static_cast<Coeff>(std::uint64_t{a} * b % p); }
inline Coeff neg(Coeff a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
Coeff inv(Coeff a, std::uint32_t p);
Coeff reduce(const Integer& v, std::uint32_t p);
}  // namespace fp

}  // namespace bfp

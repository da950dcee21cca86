#include "bfp/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "bfp/errors.hpp"

namespace bfp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CharConfig::CharConfig(std::uint32_t p, unsigned gamma) : p_(p), gamma_(gamma) {
  if (!is_prime(p)) throw ValidationError("characteristic p = " + std::to_string(p) + " is not prime");
  if (p >= (1U << 31)) throw ValidationError("characteristic p must be below 2^31");
  if (gamma == 0) throw ValidationError("gamma must be positive");
  q_ = ipow(Integer(p), gamma);
}

std::size_t CharConfig::q_index() const {
  if (q_ > Integer(1U << 20)) throw ValidationError("q = " + q_.str() + " is too large for list indexing");
  return static_cast<std::size_t>(q_);
}

Ring make_ring(const CharConfig& cfg, std::size_t num_vars, Extra extra) { return Ring{cfg.p(), num_vars, extra}; }

namespace fp {
Coeff inv(Coeff a, std::uint32_t p) {
  if (a % p == 0) throw InternalError("inverse of zero in F_p");
  // a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<Coeff>(result);
}

Coeff reduce(const Integer& v, std::uint32_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return static_cast<Coeff>(r);
}
}  // namespace fp

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Integer> exps) : exps_(std::move(exps)) {
  for (const auto& x : exps_) {
    if (x < 0) throw ValidationError("negative exponent");
    degree_ += x;
  }
}

void Monomial::set(std::size_t i, Integer value) {
  if (value < 0) throw ValidationError("negative exponent");
  degree_ += value - exps_.at(i);
  exps_[i] = std::move(value);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= other.exps_[i];
    if (r.exps_[i] < 0) throw InternalError("monomial quotient is not exact");
  }
  r.degree_ -= other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::scaled(const Integer& factor) const {
  Monomial r(*this);
  for (auto& x : r.exps_) x *= factor;
  r.degree_ *= factor;
  return r;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Poly

namespace {

void check_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw ValidationError("polynomials live in different rings");
}

}  // namespace

Poly Poly::constant(const Ring& ring, std::uint64_t c) {
  Poly r(ring);
  const auto v = static_cast<Coeff>(c % ring.p);
  if (v != 0) r.terms_.push_back(Term{Monomial(ring.arity()), v});
  return r;
}

Poly Poly::variable(const Ring& ring, std::size_t index, const Integer& exp) {
  if (index >= ring.arity()) throw ValidationError("variable index out of range");
  Monomial m(ring.arity());
  m.set(index, exp);
  return monomial(ring, std::move(m), 1);
}

Poly Poly::monomial(const Ring& ring, Monomial m, std::uint64_t c) {
  if (m.arity() != ring.arity()) throw ValidationError("monomial arity does not match ring");
  Poly r(ring);
  const auto v = static_cast<Coeff>(c % ring.p);
  if (v != 0) r.terms_.push_back(Term{std::move(m), v});
  return r;
}

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
  Poly r(ring);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (t.mono.arity() != ring.arity()) throw ValidationError("monomial arity does not match ring");
    const Coeff c = t.coeff % ring.p;
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff = fp::add(r.terms_.back().coeff, c, ring.p);
      if (r.terms_.back().coeff == 0) r.terms_.pop_back();
    } else if (c != 0) {
      r.terms_.push_back(Term{std::move(t.mono), c});
    }
  }
  return r;
}

Integer Poly::total_degree() const {
  Integer d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Integer Poly::degree_in(std::size_t slot) const {
  Integer d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono[slot]);
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  check_same_ring(ring_, o.ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int cmp;
    if (i == terms_.size()) cmp = -1;
    else if (j == o.terms_.size()) cmp = 1;
    else cmp = grevlex_compare(terms_[i].mono, o.terms_[j].mono);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      const Coeff c = fp::add(terms_[i].coeff, o.terms_[j].coeff, ring_.p);
      if (c != 0) r.terms_.push_back(Term{terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = fp::neg(t.coeff, ring_.p);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back(Term{a.mono * b.mono, fp::mul(a.coeff, b.coeff, ring_.p)});
  return from_terms(ring_, std::move(prod));
}

Poly Poly::scaled(std::uint64_t c) const {
  const auto v = static_cast<Coeff>(c % ring_.p);
  if (v == 0) return Poly(ring_);
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = fp::mul(t.coeff, v, ring_.p);
  return r;
}

Poly Poly::times_term(const Monomial& m, Coeff c) const {
  c %= ring_.p;
  if (c == 0) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, fp::mul(t.coeff, c, ring_.p)});
  return r;
}

Poly Poly::exponents_scaled(const Integer& factor) const {
  if (factor <= 0) throw ValidationError("exponent scale must be positive");
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono.scaled(factor), t.coeff});
  return r;
}

Poly Poly::pow(const Integer& n) const {
  if (n < 0) throw ValidationError("negative power");
  // f^n = prod_i (f^{d_i})^{p^i} over the base-p digits d_i of n.
  Poly result = constant(ring_, 1);
  Integer rest = n;
  Integer scale = 1;
  while (rest != 0) {
    const auto digit = static_cast<std::uint32_t>(rest % ring_.p);
    rest /= ring_.p;
    if (digit != 0) {
      Poly piece = constant(ring_, 1);
      for (std::uint32_t k = 0; k < digit; ++k) piece *= *this;
      result *= piece.exponents_scaled(scale);
      if (result.is_zero()) return result;
    }
    scale *= ring_.p;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  if (!(ring_ == o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono)) return false;
  return true;
}

namespace {

std::string variable_name(const Ring& ring, std::size_t slot) {
  if (slot < ring.num_vars) return "x" + std::to_string(slot);
  return ring.extra == Extra::t ? "t" : "tau";
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    if (k != 0) out += " + ";
    std::string piece;
    if (t.coeff != 1 || t.mono.is_one()) piece = std::to_string(t.coeff);
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!piece.empty()) piece += "*";
      piece += variable_name(ring_, i);
      if (t.mono[i] != 1) piece += "^" + t.mono[i].str();
    }
    out += piece;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    std::vector<Term> terms;
    terms.push_back(term());
    skip_ws();
    while (!at_end()) {
      if (text_[pos_] != '+') throw ParseError(pos_, std::string("expected '+' but found '") + text_[pos_] + "'");
      ++pos_;
      terms.push_back(term());
      skip_ws();
    }
    return Poly::from_terms(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer natural() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(pos_, "expected a non-negative integer");
    Integer v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  void factor(Monomial& m) {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) {
      if (at_end()) throw ParseError(start, "unexpected end of input");
      throw ParseError(start, std::string("unexpected character '") + text_[start] + "'");
    }
    const std::size_t slot = lookup(name, start);
    Integer exp = 1;
    skip_ws();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      exp = natural();
    }
    m.set(slot, m[slot] + exp);
  }

  std::size_t lookup(const std::string& name, std::size_t at) const {
    if (name == "t" || name == "tau") {
      if ((name == "t" && ring_.extra == Extra::t) || (name == "tau" && ring_.extra == Extra::tau)) return ring_.num_vars;
      throw ValidationError("unknown variable '" + name + "' at position " + std::to_string(at));
    }
    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
        (name.size() == 2 || name[1] != '0') && name.size() < 12) {
      const auto idx = std::stoull(name.substr(1));
      if (idx < ring_.num_vars) return idx;
    }
    throw ValidationError("unknown variable '" + name + "' at position " + std::to_string(at));
  }

  Term term() {
    skip_ws();
    Monomial m(ring_.arity());
    Coeff c = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      c = fp::reduce(natural(), ring_.p);
    } else {
      factor(m);
    }
    skip_ws();
    while (!at_end() && text_[pos_] == '*') {
      ++pos_;
      factor(m);
      skip_ws();
    }
    return Term{std::move(m), c};
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

// ---------------------------------------------------------------------------
// Frobenius

Poly frobenius_power(const Poly& f, std::uint64_t e, const CharConfig& cfg) {
  if (f.ring().p != cfg.p()) throw ValidationError("polynomial characteristic does not match configuration");
  if (e == 0) return f;
  return f.exponents_scaled(cfg.q_pow(e));
}

FrobeniusDecomposition frobenius_decompose(const Poly& f, std::uint64_t e, const CharConfig& cfg) {
  if (f.ring().extra != Extra::none) throw ValidationError("frobenius_decompose expects a polynomial in R");
  if (f.ring().p != cfg.p()) throw ValidationError("polynomial characteristic does not match configuration");
  const Integer Q = cfg.q_pow(e);
  std::map<Monomial, std::vector<Term>, GrevlexLess> buckets;
  const std::size_t n = f.ring().arity();
  for (const auto& t : f.terms()) {
    std::vector<Integer> w(n), u(n);
    for (std::size_t i = 0; i < n; ++i) divide_qr(t.mono[i], Q, w[i], u[i]);
    buckets[Monomial(std::move(u))].push_back(Term{Monomial(std::move(w)), t.coeff});
  }
  FrobeniusDecomposition out;
  for (auto& [u, terms] : buckets) {
    Poly a = Poly::from_terms(f.ring(), std::move(terms));
    if (!a.is_zero()) out.emplace(u, std::move(a));
  }
  return out;
}

}  // namespace bfp

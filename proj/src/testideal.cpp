#include "bfp/testideal.hpp"

#include <algorithm>

#include "bfp/errors.hpp"

namespace bfp {

namespace {

void check_poly(const Poly& f, const CharConfig& cfg) {
  if (f.ring().extra != Extra::none) throw ValidationError("expected a polynomial in R");
  if (f.ring().p != cfg.p()) throw ValidationError("polynomial characteristic does not match configuration");
}

// (f^n)^[1/q^e] one digit at a time: with n = sum n_k q^k + q^e n_hi,
// J_0 = (1), J_{k+1} = (f^{n_k} J_k)^[1/q], result f^{n_hi} J_e.
Submodule power_root(const Poly& f, const Integer& n, std::uint64_t e, const CharConfig& cfg) {
  const Ring& ring = f.ring();
  const Integer Q = cfg.q_pow(e);
  const auto digits = base_q_digits(n % Q, cfg.q(), e);
  Submodule j = Submodule::full(ring, 1);
  for (std::size_t k = 0; k < e; ++k) {
    const Poly fk = f.pow(digits[k]);
    std::vector<VectorR> gens;
    for (const auto& b : j.basis()) gens.push_back(VectorR{fk * b[0]});
    j = Submodule(ring, 1, root_vectors(gens, 1, cfg));
  }
  const Poly hi = f.pow(n / Q);
  std::vector<VectorR> gens;
  for (const auto& b : j.basis()) gens.push_back(VectorR{hi * b[0]});
  return Submodule(ring, 1, std::move(gens));
}

}  // namespace

std::vector<std::size_t> base_q_digits(const Integer& n, const Integer& q, std::size_t count) {
  std::vector<std::size_t> out(count, 0);
  Integer rest = n;
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = static_cast<std::size_t>(rest % q);
    rest /= q;
  }
  if (rest != 0) throw InternalError("digit expansion overflow");
  return out;
}

Submodule tau_f(const Poly& f, const Rational& alpha, std::uint64_t e, const CharConfig& cfg) {
  check_poly(f, cfg);
  if (alpha < 0) throw ValidationError("alpha must be non-negative");
  if (f.is_zero()) throw ValidationError("f must be nonzero");
  return power_root(f, ceil(alpha * cfg.q_pow(e)), e, cfg);
}

StableTau tau_f_stable(const Poly& f, const Rational& alpha, const CharConfig& cfg, std::uint64_t e_cap) {
  check_poly(f, cfg);
  if (alpha < 0) throw ValidationError("alpha must be non-negative");
  if (f.is_zero()) throw ValidationError("f must be nonzero");
  std::optional<Submodule> prev;
  for (std::uint64_t e = 0; e <= e_cap; ++e) {
    const Integer Q = cfg.q_pow(e);
    const Integer up = ceil(alpha * Q);
    const Integer down = floor(alpha * Q);
    Submodule upper = power_root(f, up, e, cfg);
    if (up == down || equals(upper, power_root(f, down, e, cfg))) return StableTau{upper, e, true};
    if (e == e_cap) {
      if (prev && equals(*prev, upper)) return StableTau{upper, e, false};
      throw NoStabilizationError("test ideal did not stabilize within e_cap = " + std::to_string(e_cap),
                                 prev ? prev->to_string() : std::string("<none>"), upper.to_string());
    }
    prev = std::move(upper);
  }
  throw InternalError("unreachable");
}

FJumpReport f_jumping_report(const Poly& f, const CharConfig& cfg, unsigned e_max) {
  check_poly(f, cfg);
  if (f.is_zero() || f.is_constant()) throw ValidationError("f must be a nonzero non-unit");
  if (e_max < 1) throw ValidationError("e_max must be at least 1");
  const Integer Q = cfg.q_pow(e_max);
  const std::size_t count = static_cast<std::size_t>(Q);
  std::vector<Submodule> values;
  values.reserve(count + 1);
  for (std::size_t k = 0; k <= count; ++k)
    values.push_back(tau_f_stable(f, Rational(Integer(k), Q), cfg, e_max).ideal);

  FJumpReport out;
  for (unsigned e = 1; e <= e_max; ++e) {
    const std::size_t stride = static_cast<std::size_t>(cfg.q_pow(e_max - e));
    const std::size_t points = static_cast<std::size_t>(cfg.q_pow(e));
    std::vector<GridRational> level;
    for (std::size_t k = 1; k <= points; ++k)
      if (!equals(values[k * stride], values[(k - 1) * stride])) level.push_back(GridRational{k, e - 1, cfg.q()});
    out.drops.push_back(std::move(level));
  }
  const Estimate est = estimate_from_levels(out.drops, cfg, std::max(1U, e_max / 2), 1);
  for (const auto& j : est.jumps) out.exponents.push_back(j.lambda);
  out.unresolved = est.unresolved;
  return out;
}

std::vector<Rational> f_jumping_exponents(const Poly& f, const CharConfig& cfg, unsigned e_max) {
  return f_jumping_report(f, cfg, e_max).exponents;
}

namespace {

void check_list(const std::vector<Poly>& r, const CharConfig& cfg) {
  if (r.size() != cfg.q_index())
    throw ValidationError("simple list must have exactly q = " + cfg.q().str() + " entries, got " +
                          std::to_string(r.size()));
  for (const auto& f : r) check_poly(f, cfg);
  for (const auto& f : r)
    if (!(f.ring() == r.front().ring())) throw ValidationError("list entries live in different rings");
}

Submodule list_I_at(const std::vector<Poly>& r, const Integer& m, unsigned e, const CharConfig& cfg) {
  const Ring& ring = r.front().ring();
  const auto digits = base_q_digits(m - 1, cfg.q(), e + 1);
  Poly prod = Poly::constant(ring, 1);
  for (std::size_t k = 0; k <= e; ++k) {
    prod *= frobenius_power(r[digits[k]], k, cfg);
    if (prod.is_zero()) return Submodule::zero(ring, 1);
  }
  return Submodule(ring, 1, root_vectors({VectorR{prod}}, e + 1, cfg));
}

Integer grid_index(const Rational& lambda, unsigned e, const CharConfig& cfg) {
  if (lambda <= 0 || lambda > 1) throw ValidationError("lambda must lie in (0, 1]");
  return ceil(lambda * cfg.q_pow(e + 1));
}

}  // namespace

Submodule simple_list_I(const std::vector<Poly>& r, const Rational& lambda, unsigned e, const CharConfig& cfg) {
  check_list(r, cfg);
  return list_I_at(r, grid_index(lambda, e, cfg), e, cfg);
}

Submodule simple_list_I(const std::vector<Poly>& r, const GridRational& lambda, unsigned e, const CharConfig& cfg) {
  return simple_list_I(r, lambda.value(), e, cfg);
}

Submodule simple_list_tau(const std::vector<Poly>& r, const Rational& lambda, unsigned e, const CharConfig& cfg) {
  check_list(r, cfg);
  const Integer m = grid_index(lambda, e, cfg);
  ModuleAccumulator acc(r.front().ring(), 1);
  for (Integer k = 1; k <= m; ++k) acc.add(list_I_at(r, k, e, cfg));
  return acc.value();
}

Submodule simple_list_tau(const std::vector<Poly>& r, const GridRational& lambda, unsigned e, const CharConfig& cfg) {
  return simple_list_tau(r, lambda.value(), e, cfg);
}

std::vector<Submodule> simple_list_scan(const std::vector<Poly>& r, unsigned e, const CharConfig& cfg) {
  check_list(r, cfg);
  const Integer Q = cfg.q_pow(e + 1);
  std::vector<Submodule> out;
  ModuleAccumulator acc(r.front().ring(), 1);
  for (Integer k = 1; k <= Q; ++k) {
    acc.add(list_I_at(r, k, e, cfg));
    out.push_back(acc.value());
  }
  return out;
}

SeReport s_set_simple(const std::vector<Poly>& r, unsigned e, const CharConfig& cfg) {
  check_list(r, cfg);
  const Integer Q = cfg.q_pow(e + 1);
  SeReport rep;
  rep.e = e;
  ModuleAccumulator acc(r.front().ring(), 1);
  for (Integer k = 1; k <= Q; ++k) {
    if (acc.add(list_I_at(r, k, e, cfg))) {
      // tau(k/Q) != tau((k-1)/Q), so (k-1)/Q is a jump when it lies in (0, 1).
      if (k >= 2) rep.jumps.push_back(GridRational{k - 1, e, cfg.q()});
      rep.chain.emplace_back(GridRational{k, e, cfg.q()}, acc.value());
    }
  }
  return rep;
}

}  // namespace bfp

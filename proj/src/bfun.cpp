#include "bfp/bfun.hpp"

#include <algorithm>

#include "bfp/errors.hpp"

namespace bfp {

ThetaDigits weight_to_theta_digits(const EulerWeight& w) {
  const std::size_t count = static_cast<std::size_t>(w.gamma) * w.e;
  if (w.m < 0 || w.m >= ipow(Integer(w.p), count)) throw ValidationError("weight out of range for its level");
  ThetaDigits out;
  Integer rest = w.m;
  for (std::size_t l = 0; l < count; ++l) {
    const auto d = static_cast<std::uint32_t>(rest % w.p);
    rest /= w.p;
    out.theta.push_back(d);
    out.Theta.push_back((d + 1) % w.p);
    const std::uint32_t j = w.p - 1 - d;
    out.complement_j.push_back(j);
    out.complement_Theta.push_back((w.p - j) % w.p);
  }
  return out;
}

TMatrix graph_generator(const Poly& f, const CharConfig& cfg) {
  if (f.ring().extra != Extra::none) throw ValidationError("f must not involve t");
  if (f.ring().p != cfg.p()) throw ValidationError("polynomial characteristic does not match configuration");
  const Ring tr = f.ring().with_extra(Extra::t);
  std::vector<Term> lifted;
  for (const auto& t : f.terms()) {
    std::vector<Integer> ex = t.mono.exponents();
    ex.push_back(0);
    lifted.push_back(Term{Monomial(std::move(ex)), t.coeff});
  }
  const Poly g = Poly::from_terms(tr, std::move(lifted)) - Poly::variable(tr, tr.num_vars);
  TMatrix out(tr, 1, 1);
  out.at(0, 0) = g.pow(cfg.q() - 1);
  return out;
}

std::vector<EulerWeight> euler_eigenvalue_candidates(const TMatrix& a, unsigned e, const CharConfig& cfg) {
  if (e < 1) throw ValidationError("level e must be positive");
  const SeReport s = s_set(decompose_A(a, cfg), e - 1, cfg);
  std::vector<EulerWeight> out{EulerWeight{0, e, cfg.p(), cfg.gamma()}};
  for (const auto& g : s.jumps) out.push_back(EulerWeight{g.m, e, cfg.p(), cfg.gamma()});
  return out;
}

BFunctionResult b_function(const TMatrix& a, const CharConfig& cfg, unsigned e_max) {
  if (e_max < 3) throw ValidationError("e_max must be at least 3");
  BFunctionResult out;
  EstimateReport est = estimate_jumping_numbers(decompose_A(a, cfg), cfg, e_max);
  if (a.is_zero()) out.diagnostics.push_back("generating matrix is zero; b = 1");
  for (const auto& j : est.jumps) out.roots.push_back(j.lambda < 1 ? Rational(1) - j.lambda : Rational(1));
  std::sort(out.roots.begin(), out.roots.end());

  // Smallest N such that from level N on every jump lies within q^N grid
  // steps below a snapped jumping number.
  for (unsigned n = 0; n <= e_max && !out.shift_N; ++n) {
    const Integer bound = ipow(cfg.q(), n);
    bool ok = true;
    for (unsigned e = n; e <= e_max && ok; ++e)
      for (const auto& g : est.s_sets[e].jumps) {
        bool matched = false;
        for (const auto& j : est.jumps) {
          const Integer d = ceil(j.lambda * g.denominator()) - g.m;
          if (d >= 0 && d < bound) {
            matched = true;
            break;
          }
        }
        if (!matched) {
          ok = false;
          break;
        }
      }
    if (ok) out.shift_N = n;
  }
  if (!out.shift_N) out.diagnostics.push_back("no shift N <= e_max covers every jump set");
  if (!est.unresolved.empty()) {
    out.divides_only = true;
    out.diagnostics.push_back(std::to_string(est.unresolved.size()) +
                              " chain(s) unresolved; roots bound b in the divisibility order");
  }
  out.jumping_numbers = std::move(est.jumps);
  out.unresolved = std::move(est.unresolved);
  out.evidence = std::move(est.s_sets);
  return out;
}

std::vector<Rational> b_polynomial(const std::vector<Rational>& roots) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

std::string b_polynomial_string(const std::vector<Rational>& roots) {
  if (roots.empty()) return "1";
  std::string out;
  for (const auto& r : roots) {
    if (!out.empty()) out += "*";
    out += "(s - " + to_string(r) + ")";
  }
  return out;
}

}  // namespace bfp

#pragma once

// Test-only helpers: deterministic random generators and independent oracles.

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bfp/bfun.hpp"
#include "bfp/listmod.hpp"

namespace bfp::test {

inline Ring ring_of(std::uint32_t p, std::size_t nv, Extra x = Extra::none) { return Ring{p, nv, x}; }

inline Poly P(const std::string& s, const Ring& r) { return parse_poly(s, r); }

inline Submodule ideal_of(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<Poly> ps;
  for (const char* g : gens) ps.push_back(parse_poly(g, r));
  return Submodule::ideal(r, ps);
}

inline TMatrix tmatrix(const Ring& tr, const std::vector<std::vector<std::string>>& rows) {
  TMatrix a(tr, rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) a.at(i, j) = parse_poly(rows[i][j], tr);
  return a;
}

inline std::vector<Rational> values(const std::vector<GridRational>& gs) {
  std::vector<Rational> out;
  for (const auto& g : gs) out.push_back(g.value());
  return out;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  Monomial monomial(const Ring& r, unsigned max_deg) {
    Monomial m(r.arity());
    unsigned budget = static_cast<unsigned>(below(max_deg + 1));
    for (std::size_t i = 0; i < r.arity() && budget > 0; ++i) {
      const auto take = static_cast<unsigned>(i + 1 == r.arity() ? budget : below(budget + 1));
      m.set(i, take);
      budget -= take;
    }
    return m;
  }

  Poly poly(const Ring& r, unsigned max_deg, unsigned max_terms) {
    std::vector<Term> ts;
    const auto n = between(1, max_terms);
    for (std::uint64_t k = 0; k < n; ++k) ts.push_back(Term{monomial(r, max_deg), static_cast<Coeff>(between(1, r.p - 1))});
    return Poly::from_terms(r, std::move(ts));
  }

  Poly homogeneous(const Ring& r, unsigned deg, unsigned max_terms) {
    std::vector<Term> ts;
    const auto n = between(1, max_terms);
    for (std::uint64_t k = 0; k < n; ++k) {
      Monomial m(r.arity());
      unsigned budget = deg;
      for (std::size_t i = 0; i < r.arity(); ++i) {
        const auto take = static_cast<unsigned>(i + 1 == r.arity() ? budget : below(budget + 1));
        m.set(i, take);
        budget -= take;
      }
      ts.push_back(Term{std::move(m), static_cast<Coeff>(between(1, r.p - 1))});
    }
    return Poly::from_terms(r, std::move(ts));
  }

  VectorR vector(const Ring& r, std::size_t rank, unsigned max_deg, unsigned max_terms) {
    VectorR v;
    for (std::size_t i = 0; i < rank; ++i) v.push_back(below(3) == 0 ? Poly(r) : poly(r, max_deg, max_terms));
    return v;
  }

  Submodule submodule(const Ring& r, std::size_t rank, unsigned max_gens, unsigned max_deg, unsigned max_terms) {
    std::vector<VectorR> gens;
    const auto n = between(1, max_gens);
    for (std::uint64_t k = 0; k < n; ++k) gens.push_back(vector(r, rank, max_deg, max_terms));
    return Submodule(r, rank, std::move(gens));
  }

  TMatrix tmatrix(const Ring& tr, std::size_t l, unsigned max_t, unsigned max_x, unsigned max_terms) {
    TMatrix a(tr, l, l);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) {
        if (below(3) == 0) continue;
        std::vector<Term> ts;
        const auto n = between(1, max_terms);
        for (std::uint64_t k = 0; k < n; ++k) {
          Monomial m(tr.arity());
          for (std::size_t v = 0; v < tr.num_vars; ++v) m.set(v, below(max_x + 1));
          m.set(tr.num_vars, below(max_t + 1));
          ts.push_back(Term{std::move(m), static_cast<Coeff>(between(1, tr.p - 1))});
        }
        a.at(i, j) = Poly::from_terms(tr, std::move(ts));
      }
    return a;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// An ideal placed in the tau^0 slot of a rank-`rank` ambient.
inline Submodule embed_tau0(const Submodule& ideal, std::size_t rank) {
  std::vector<VectorR> gens;
  for (const auto& v : ideal.generators()) {
    VectorR w = zero_vector(ideal.ring(), rank);
    w[0] = v[0];
    gens.push_back(std::move(w));
  }
  return Submodule(ideal.ring(), rank, std::move(gens));
}

namespace oracle {

// Dense product by schoolbook accumulation into an ordered map.
inline Poly naive_mul(const Poly& a, const Poly& b) {
  std::map<std::vector<Integer>, std::uint64_t> acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      std::vector<Integer> ex(s.mono.arity());
      for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = s.mono[i] + t.mono[i];
      acc[ex] = (acc[ex] + std::uint64_t{s.coeff} * t.coeff) % a.ring().p;
    }
  std::vector<Term> ts;
  for (auto& [ex, c] : acc)
    if (c != 0) ts.push_back(Term{Monomial(ex), static_cast<Coeff>(c)});
  return Poly::from_terms(a.ring(), std::move(ts));
}

// f^n by n - 1 successive multiplications.
inline Poly repeated_power(const Poly& f, unsigned n) {
  Poly r = Poly::constant(f.ring(), 1);
  for (unsigned i = 0; i < n; ++i) r = naive_mul(r, f);
  return r;
}

// Membership of a monomial in a monomial ideal: some generator divides it.
inline bool monomial_ideal_contains(const std::vector<Monomial>& gens, const Monomial& m) {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

// Membership by linear algebra over F_p in the span of all multiples x^a g
// of total degree <= D (a Macaulay matrix). Exact for homogeneous input with
// D = deg v; otherwise a lower bound on membership.
inline bool macaulay_contains(const std::vector<VectorR>& gens, const VectorR& v, unsigned D) {
  if (v.empty()) return true;
  const Ring& r = v.front().ring();
  const std::uint32_t p = r.p;
  using Key = std::pair<std::size_t, std::vector<Integer>>;
  using Row = std::map<Key, std::uint64_t>;
  auto to_row = [&](const VectorR& w, const Monomial& shift) {
    Row row;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (const auto& t : w[i].terms()) row[{i, (t.mono * shift).exponents()}] = t.coeff;
    return row;
  };
  std::vector<Monomial> monos;
  std::vector<Integer> cur(r.arity());
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == r.arity()) {
      monos.emplace_back(cur);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
    cur[i] = 0;
  };
  rec(0, D);
  // Echelon basis keyed by pivot (largest key in the row).
  std::map<Key, Row> pivots;
  auto reduce = [&](Row row) {
    while (!row.empty()) {
      const Key lead = row.rbegin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) return row;
      const std::uint64_t c = row.rbegin()->second;
      for (const auto& [k, val] : it->second) {
        auto& slot = row[k];
        slot = (slot + (p - c) * val) % p;
        if (slot == 0) row.erase(k);
      }
    }
    return row;
  };
  auto inverse = [&](std::uint64_t a) {
    std::uint64_t r2 = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r2 = r2 * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r2;
  };
  for (const auto& g : gens) {
    Integer gdeg = -1;
    for (const auto& f : g) gdeg = std::max(gdeg, f.total_degree());
    if (gdeg < 0) continue;
    for (const auto& m : monos) {
      if (m.degree() + gdeg > D) continue;
      Row row = reduce(to_row(g, m));
      if (row.empty()) continue;
      const std::uint64_t inv = inverse(row.rbegin()->second);
      for (auto& [k, val] : row) val = val * inv % p;
      pivots.emplace(row.rbegin()->first, std::move(row));
    }
  }
  return reduce(to_row(v, Monomial(r.arity()))).empty();
}

// One-variable root: (x^a)^[1/Q] = (x^floor(a/Q)).
inline Integer univariate_root_exponent(const Integer& a, const Integer& Q) { return a / Q; }

// One-variable test ideal: tau((x^a)^alpha) = (x^floor(a alpha)).
inline Integer monomial_tau_exponent(unsigned a, const Rational& alpha) { return floor(alpha * a); }

// Root of a principal ideal by the raw coefficient extraction of the product.
inline Submodule direct_root(const Poly& f, std::uint64_t e, const CharConfig& cfg) {
  return Submodule(f.ring(), 1, root_vectors({VectorR{f}}, e, cfg));
}

// Shift property: (m-1)/q^(e+1) in S_e with q^e not dividing m-1 has
// frac((m-1)/q^e) in S_(e-1). Returns the first violation, if any.
inline std::string shift_violation(const std::vector<std::vector<GridRational>>& s, const Integer& q) {
  for (std::size_t e = 1; e < s.size(); ++e) {
    const Integer qe = ipow(q, e);
    for (const auto& g : s[e]) {
      if (g.m % qe == 0) continue;
      const Rational target = frac(Rational(g.m, qe));
      bool found = false;
      for (const auto& h : s[e - 1])
        if (h.value() == target) found = true;
      if (!found) return "S_" + std::to_string(e) + " element " + g.to_string() + " has no image " + to_string(target);
    }
  }
  return {};
}

// H^e from H^(e-1) and H^1:
// H^e_{beta + j0 q^(e-1)} = sum_{j1} sum_n (H^1_n)^[q^(e-1)] B_{j0 + j1 q - n, beta} tau^j1
// with H^(e-1)_beta = sum_k B_{k,beta} tau^k; coefficients are Frobenius powered, tau is not.
inline std::map<Integer, Matrix> h_recursion(const HFamily& prev, const HFamily& first, const CharConfig& cfg) {
  const Ring& tr = first.tau_ring;
  const std::size_t l = first.rank;
  const Integer q = cfg.q();
  const unsigned e = prev.e + 1;
  const Integer step = ipow(q, e - 1);
  const std::size_t nv = tr.num_vars;

  // Coefficient of tau^k in a polynomial over R[tau], as a polynomial over R[tau] of tau-degree 0.
  auto coeff_k = [&](const Poly& f, const Integer& k) {
    std::vector<Term> ts;
    for (const auto& t : f.terms())
      if (t.mono[nv] == k) {
        Monomial m = t.mono;
        m.set(nv, 0);
        ts.push_back(Term{m, t.coeff});
      }
    return Poly::from_terms(tr, std::move(ts));
  };
  // Frobenius power of the R-coefficients only.
  auto frob_coeffs = [&](const Poly& f) {
    const Integer Q = ipow(q, e - 1);
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
      std::vector<Integer> ex = t.mono.exponents();
      for (std::size_t i = 0; i < nv; ++i) ex[i] *= Q;
      ts.push_back(Term{Monomial(ex), t.coeff});
    }
    return Poly::from_terms(tr, std::move(ts));
  };

  std::map<Integer, Matrix> out;
  Integer kmax = 0;
  for (const auto& [b, m] : prev.table) kmax = std::max(kmax, extra_degree(m));
  for (const auto& [beta, hb] : prev.table) {
    for (Integer j0 = 0; j0 < q; ++j0) {
      Matrix acc(tr, l, l);
      for (Integer j1 = 0; j1 <= kmax + 1; ++j1) {
        for (const auto& [n, h1] : first.table) {
          const Integer k = j0 + j1 * q - n;
          if (k < 0 || k > kmax) continue;
          Matrix bk = hb.map(tr, [&](const Poly& f) { return coeff_k(f, k); });
          if (bk.is_zero()) continue;
          Matrix c = h1.map(tr, [&](const Poly& f) { return frob_coeffs(f); });
          Matrix prod = c * bk;
          Monomial tj(tr.arity());
          tj.set(nv, j1);
          acc = acc + prod.map(tr, [&](const Poly& f) { return f.times_term(tj, 1); });
        }
      }
      if (!acc.is_zero()) {
        const Integer idx = beta + j0 * step;
        auto it = out.find(idx);
        if (it == out.end())
          out.emplace(idx, acc);
        else
          it->second = it->second + acc;
      }
    }
  }
  return out;
}

}  // namespace oracle

}  // namespace bfp::test

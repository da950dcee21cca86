#pragma once

// Test ideals tau(f^alpha), F-jumping exponents, and simple list test ideals.

#include <cstdint>
#include <utility>
#include <vector>

#include "bfp/frobenius.hpp"
#include "bfp/snapping.hpp"

namespace bfp {

struct SeReport {
  unsigned e = 0;
  std::vector<GridRational> jumps;  // strictly increasing, inside (0, 1)
  /// Cumulative value at each grid point where it changed (audit trail).
  std::vector<std::pair<GridRational, Submodule>> chain;
};

/// (f^ceil(alpha q^e))^[1/q^e].
Submodule tau_f(const Poly& f, const Rational& alpha, std::uint64_t e, const CharConfig& cfg);

struct StableTau {
  Submodule ideal;
  std::uint64_t e;   // level at which the value was accepted
  bool certified;    // upper and lower level-e bounds agreed
};

/// tau(f^alpha). Level e brackets it between (f^ceil(alpha q^e))^[1/q^e] and
/// (f^floor(alpha q^e))^[1/q^e]; the first level where both agree is exact.
/// At e_cap the upper value is accepted if it repeated, otherwise throws.
StableTau tau_f_stable(const Poly& f, const Rational& alpha, const CharConfig& cfg, std::uint64_t e_cap = 16);

struct FJumpReport {
  std::vector<Rational> exponents;                 // sorted, inside (0, 1]
  std::vector<std::vector<GridRational>> drops;    // drops[e-1]: drops on the grid k/q^e
  std::vector<Chain> unresolved;
};

FJumpReport f_jumping_report(const Poly& f, const CharConfig& cfg, unsigned e_max);
std::vector<Rational> f_jumping_exponents(const Poly& f, const CharConfig& cfg, unsigned e_max);

/// (r_{i_0} r_{i_1}^q ... r_{i_e}^{q^e})^[1/q^(e+1)] for the base-q digits of ceil(lambda q^(e+1)) - 1.
Submodule simple_list_I(const std::vector<Poly>& r, const Rational& lambda, unsigned e, const CharConfig& cfg);
Submodule simple_list_I(const std::vector<Poly>& r, const GridRational& lambda, unsigned e, const CharConfig& cfg);

/// Sum of simple_list_I over grid points k/q^(e+1) <= lambda.
Submodule simple_list_tau(const std::vector<Poly>& r, const Rational& lambda, unsigned e, const CharConfig& cfg);
Submodule simple_list_tau(const std::vector<Poly>& r, const GridRational& lambda, unsigned e, const CharConfig& cfg);

/// Cumulative values at m/q^(e+1) for m = 1..q^(e+1); entry m-1 holds point m.
std::vector<Submodule> simple_list_scan(const std::vector<Poly>& r, unsigned e, const CharConfig& cfg);

SeReport s_set_simple(const std::vector<Poly>& r, unsigned e, const CharConfig& cfg);

/// Base-q digits of n, least significant first, padded to count digits.
std::vector<std::size_t> base_q_digits(const Integer& n, const Integer& q, std::size_t count);

}  // namespace bfp

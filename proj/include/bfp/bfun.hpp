#pragma once

// b-functions of generating matrices along t = 0, Euler-operator weight
// candidates, and the graph-of-f generator.

#include <optional>
#include <string>
#include <vector>

#include "bfp/listmod.hpp"

namespace bfp {

/// Weight m in [0, q^e) of the Euler operators at level e.
struct EulerWeight {
  Integer m;
  unsigned e = 0;
  std::uint32_t p = 2;
  unsigned gamma = 1;

  bool operator==(const EulerWeight&) const = default;
};

struct ThetaDigits {
  std::vector<std::uint32_t> theta;          // base-p digits of m, least significant first
  std::vector<std::uint32_t> Theta;          // theta + 1 mod p
  std::vector<std::uint32_t> complement_j;      // p - 1 - theta
  std::vector<std::uint32_t> complement_Theta;  // -j mod p
};

ThetaDigits weight_to_theta_digits(const EulerWeight& w);

/// The 1 x 1 matrix [(f - t)^(q-1)] over R[t].
TMatrix graph_generator(const Poly& f, const CharConfig& cfg);

/// {m : m/q^e in S_{e-1}} together with 0, sorted by m.
std::vector<EulerWeight> euler_eigenvalue_candidates(const TMatrix& a, unsigned e, const CharConfig& cfg);

struct BFunctionResult {
  std::vector<Rational> roots;                // sorted, inside (0, 1]
  std::vector<SnappedJump> jumping_numbers;
  std::optional<unsigned> shift_N;
  std::vector<Chain> unresolved;
  std::vector<SeReport> evidence;             // S_e for e = 0..e_max
  bool divides_only = false;                  // some chain did not resolve
  std::vector<std::string> diagnostics;
};

BFunctionResult b_function(const TMatrix& a, const CharConfig& cfg, unsigned e_max = 5);

/// Coefficients of prod (s - root), lowest degree first.
std::vector<Rational> b_polynomial(const std::vector<Rational>& roots);
std::string b_polynomial_string(const std::vector<Rational>& roots);

}  // namespace bfp

#pragma once

// Grid rationals m/q^(e+1), chains of jump sets across levels, and snapping
// of a chain to an exact rational of the form c/(q^a (q^b - 1)).

#include <optional>
#include <string>
#include <vector>

#include "bfp/polyring.hpp"

namespace bfp {

/// The rational m / q^(e+1).
struct GridRational {
  Integer m;
  unsigned e = 0;
  Integer q;

  Integer denominator() const { return ipow(q, e + 1); }
  Rational value() const { return Rational(m, denominator()); }
  std::string to_string() const { return bfp::to_string(value()); }
  bool operator==(const GridRational& o) const { return m == o.m && e == o.e && q == o.q; }
};

/// Grid point ceil(lambda q^(e+1)) / q^(e+1).
GridRational grid_ceil(const Rational& lambda, unsigned e, const CharConfig& cfg);

/// Members of one chain ordered by increasing level.
struct Chain {
  std::vector<GridRational> members;
};

/// levels[i] holds the sorted jump set of one level; consecutive entries are
/// consecutive levels. Each element of the last level starts a chain that
/// follows nearest elements backwards (ties toward the larger value) until an
/// empty level.
std::vector<Chain> build_chains(const std::vector<std::vector<GridRational>>& levels);

/// Smallest-denominator rational lambda in (0, 1] with
/// 0 <= ceil(lambda q^(e+1)) - m < slack on the tail of the chain.
std::optional<Rational> snap_chain(const Chain& chain, const CharConfig& cfg, unsigned window, const Integer& slack);

struct SnappedJump {
  Rational lambda;
  std::vector<GridRational> witnesses;
};

struct Estimate {
  std::vector<SnappedJump> jumps;   // sorted by lambda, distinct
  std::vector<Chain> unresolved;
  std::vector<Chain> chains;
};

Estimate estimate_from_levels(const std::vector<std::vector<GridRational>>& levels, const CharConfig& cfg,
                              unsigned window, const Integer& slack);

}  // namespace bfp

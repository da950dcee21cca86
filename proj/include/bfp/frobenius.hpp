#pragma once

// Frobenius bracket powers and roots of submodules of R^l.

#include <cstdint>
#include <vector>

#include "bfp/modgb.hpp"

namespace bfp {

/// Entrywise q^e-th powers of the generators.
Submodule bracket_power(const Submodule& n, std::uint64_t e, const CharConfig& cfg);

/// All coefficient vectors w_u of the given vectors at level e; their span is
/// the Frobenius root of the span of the inputs.
std::vector<VectorR> root_vectors(const std::vector<VectorR>& gens, std::uint64_t e, const CharConfig& cfg);

/// N^[1/q^e] with an irredundant generator list.
Submodule frobenius_root(const Submodule& n, std::uint64_t e, const CharConfig& cfg);

/// N^[1/q^e] generated by every w_u, without pruning.
Submodule frobenius_root_raw(const Submodule& n, std::uint64_t e, const CharConfig& cfg);

struct StableRoot {
  Submodule value;
  std::uint64_t stabilized_at;  // first e with N^[1/q^e] == N^[1/q^(e+1)]
  bool descending;              // every step of the chain was a containment
};

/// First repeated member of N, N^[1/q], N^[1/q^2], ...
StableRoot stable_root(const Submodule& n, const CharConfig& cfg, std::uint64_t e_cap = 16);

/// (N^[1/q^e])^[q^e], the D^e-module generated by N.
Submodule d_closure(const Submodule& n, std::uint64_t e, const CharConfig& cfg);

}  // namespace bfp

#include "bfp/frobenius.hpp"

#include <map>

#include "bfp/errors.hpp"

namespace bfp {

Submodule bracket_power(const Submodule& n, std::uint64_t e, const CharConfig& cfg) {
  std::vector<VectorR> gens;
  gens.reserve(n.generators().size());
  for (const auto& v : n.generators()) {
    VectorR w;
    w.reserve(v.size());
    for (const auto& f : v) w.push_back(frobenius_power(f, e, cfg));
    gens.push_back(std::move(w));
  }
  return Submodule(n.ring(), n.rank(), std::move(gens));
}

std::vector<VectorR> root_vectors(const std::vector<VectorR>& gens, std::uint64_t e, const CharConfig& cfg) {
  std::vector<VectorR> out;
  for (const auto& v : gens) {
    if (v.empty()) continue;
    const Ring& ring = v.front().ring();
    std::map<Monomial, VectorR, GrevlexLess> by_u;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (auto& [u, a] : frobenius_decompose(v[i], e, cfg)) {
        auto it = by_u.find(u);
        if (it == by_u.end()) it = by_u.emplace(u, zero_vector(ring, v.size())).first;
        it->second[i] = std::move(a);
      }
    }
    for (auto& [u, w] : by_u) out.push_back(std::move(w));
  }
  return out;
}

Submodule frobenius_root_raw(const Submodule& n, std::uint64_t e, const CharConfig& cfg) {
  if (e == 0) return n;
  return Submodule(n.ring(), n.rank(), root_vectors(n.generators(), e, cfg));
}

Submodule frobenius_root(const Submodule& n, std::uint64_t e, const CharConfig& cfg) {
  if (e == 0) return n;
  const std::vector<VectorR> candidates = root_vectors(n.generators(), e, cfg);
  // Forward pass: keep vectors outside the span of those kept so far.
  std::vector<VectorR> kept;
  ModuleAccumulator acc(n.ring(), n.rank());
  for (const auto& w : candidates) {
    if (acc.add(Submodule(n.ring(), n.rank(), {w}))) kept.push_back(w);
  }
  // Backward pass: drop vectors lying in the span of the others.
  for (std::size_t k = kept.size(); k-- > 0;) {
    std::vector<VectorR> others;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (i != k) others.push_back(kept[i]);
    if (contains(Submodule(n.ring(), n.rank(), others), kept[k])) kept = std::move(others);
  }
  return Submodule(n.ring(), n.rank(), std::move(kept));
}

StableRoot stable_root(const Submodule& n, const CharConfig& cfg, std::uint64_t e_cap) {
  Submodule current = n;
  bool descending = true;
  for (std::uint64_t e = 0; e < e_cap; ++e) {
    Submodule next = frobenius_root_raw(current, 1, cfg);
    if (equals(current, next)) return StableRoot{current, e, descending};
    if (!contains(current, next)) descending = false;
    if (e + 1 == e_cap)
      throw NoStabilizationError("Frobenius root chain did not stabilize within " + std::to_string(e_cap) + " steps",
                                 current.to_string(), next.to_string());
    current = std::move(next);
  }
  throw NoStabilizationError("Frobenius root chain did not stabilize within " + std::to_string(e_cap) + " steps",
                             n.to_string(), n.to_string());
}

Submodule d_closure(const Submodule& n, std::uint64_t e, const CharConfig& cfg) {
  return bracket_power(frobenius_root_raw(n, e, cfg), e, cfg);
}

}  // namespace bfp

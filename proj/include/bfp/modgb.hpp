#pragma once

// Submodules of free modules R^l with Groebner-basis membership and equality.
// Module order: position over term, lower position index ranks larger, then
// graded reverse lexicographic inside one position.

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bfp/polyring.hpp"

namespace bfp {

using VectorR = std::vector<Poly>;

VectorR zero_vector(const Ring& ring, std::size_t rank);
VectorR unit_vector(const Ring& ring, std::size_t rank, std::size_t index);
bool is_zero(const VectorR& v);
std::string to_string(const VectorR& v);

struct GbOptions {
  /// Maximum number of pending critical pairs before the computation aborts.
  std::size_t max_pairs = 0;  // 0 means "use the process default"
};

/// Process-wide default pair cap used by lazily computed bases.
void set_default_pair_limit(std::size_t limit);
std::size_t default_pair_limit();

class Submodule {
 public:
  Submodule(const Ring& ring, std::size_t rank, std::vector<VectorR> gens = {});

  static Submodule zero(const Ring& ring, std::size_t rank) { return Submodule(ring, rank); }
  static Submodule full(const Ring& ring, std::size_t rank);
  static Submodule ideal(const Ring& ring, const std::vector<Poly>& gens);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  /// Generators as given, with zero vectors removed.
  const std::vector<VectorR>& generators() const noexcept { return gens_; }

  /// Reduced Groebner basis; computed once and shared by copies.
  const std::vector<VectorR>& basis() const;
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Generators of the reduced basis, one polynomial vector per line.
  std::string to_string() const;

 private:
  friend Submodule groebner_basis(const Submodule& n, const GbOptions& options);
  friend Submodule module_sum(const Submodule& a, const Submodule& b);

  struct Cache {
    std::once_flag once;
    std::vector<VectorR> basis;
    std::size_t seed_count = 0;  // leading generators already forming a basis
  };

  Ring ring_;
  std::size_t rank_;
  std::vector<VectorR> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Forces the reduced basis with an explicit pair cap; the result shares it.
Submodule groebner_basis(const Submodule& n, const GbOptions& options = {});

VectorR normal_form(const Submodule& n, const VectorR& v);
bool contains(const Submodule& n, const VectorR& v);
bool contains(const Submodule& big, const Submodule& small);
bool equals(const Submodule& a, const Submodule& b);
Submodule module_sum(const Submodule& a, const Submodule& b);

/// Running sum N_1 + N_2 + ... that reports whether each summand enlarged it.
class ModuleAccumulator {
 public:
  ModuleAccumulator(const Ring& ring, std::size_t rank) : current_(ring, rank) {}

  /// Adds n; returns true when the running sum strictly grew.
  bool add(const Submodule& n);
  const Submodule& value() const noexcept { return current_; }

 private:
  Submodule current_;
};

}  // namespace bfp

#include "bfp/modgb.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <tuple>

#include "bfp/errors.hpp"

namespace bfp {

VectorR zero_vector(const Ring& ring, std::size_t rank) { return VectorR(rank, Poly(ring)); }

VectorR unit_vector(const Ring& ring, std::size_t rank, std::size_t index) {
  VectorR v = zero_vector(ring, rank);
  v.at(index) = Poly::constant(ring, 1);
  return v;
}

bool is_zero(const VectorR& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& f) { return f.is_zero(); });
}

std::string to_string(const VectorR& v) {
  if (v.size() == 1) return v[0].to_string();
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

namespace {

std::atomic<std::size_t> g_pair_limit{200000};

// Internal sparse module element: terms sorted strictly decreasing in the
// position-over-term order.
struct MTerm {
  std::uint32_t pos;
  Monomial mono;
  Coeff coeff;
};
using MVec = std::vector<MTerm>;

int pot_compare(std::uint32_t pa, const Monomial& ma, std::uint32_t pb, const Monomial& mb) {
  if (pa != pb) return pa < pb ? 1 : -1;
  return grevlex_compare(ma, mb);
}

MVec to_mvec(const VectorR& v) {
  MVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms()) out.push_back(MTerm{static_cast<std::uint32_t>(i), t.mono, t.coeff});
  return out;
}

VectorR from_mvec(const MVec& v, const Ring& ring, std::size_t rank) {
  std::vector<std::vector<Term>> slots(rank);
  for (const auto& t : v) slots[t.pos].push_back(Term{t.mono, t.coeff});
  VectorR out;
  out.reserve(rank);
  for (auto& s : slots) out.push_back(Poly::from_terms(ring, std::move(s)));
  return out;
}

// h - c * m * g
MVec sub_multiple(const MVec& h, Coeff c, const Monomial& m, const MVec& g, std::uint32_t p) {
  MVec out;
  out.reserve(h.size() + g.size());
  std::size_t i = 0, j = 0;
  std::vector<MTerm> scaled;
  while (i < h.size() || j < g.size()) {
    if (j < g.size()) {
      Monomial gm = g[j].mono * m;
      int cmp = i < h.size() ? pot_compare(h[i].pos, h[i].mono, g[j].pos, gm) : -1;
      if (cmp > 0) {
        out.push_back(h[i++]);
        continue;
      }
      const Coeff gc = fp::neg(fp::mul(g[j].coeff, c, p), p);
      if (cmp < 0) {
        out.push_back(MTerm{g[j].pos, std::move(gm), gc});
      } else {
        const Coeff s = fp::add(h[i].coeff, gc, p);
        if (s != 0) out.push_back(MTerm{h[i].pos, h[i].mono, s});
        ++i;
      }
      ++j;
    } else {
      out.push_back(h[i++]);
    }
  }
  return out;
}

void make_monic(MVec& v, std::uint32_t p) {
  if (v.empty()) return;
  const Coeff inv = fp::inv(v.front().coeff, p);
  for (auto& t : v) t.coeff = fp::mul(t.coeff, inv, p);
}

const MVec* find_reducer(const std::vector<MVec>& g, const MTerm& t, std::size_t skip = SIZE_MAX) {
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k == skip || g[k].empty()) continue;
    const MTerm& lt = g[k].front();
    if (lt.pos == t.pos && lt.mono.divides(t.mono)) return &g[k];
  }
  return nullptr;
}

// Full reduction of f modulo g.
MVec reduce(MVec f, const std::vector<MVec>& g, std::uint32_t p, std::size_t skip = SIZE_MAX) {
  MVec rem;
  while (!f.empty()) {
    const MTerm& lt = f.front();
    if (const MVec* r = find_reducer(g, lt, skip)) {
      const Coeff c = fp::mul(lt.coeff, fp::inv(r->front().coeff, p), p);
      const Monomial m = lt.mono / r->front().mono;
      f = sub_multiple(f, c, m, *r, p);
    } else {
      rem.push_back(lt);
      f.erase(f.begin());
    }
  }
  return rem;
}

// Critical pair keyed for the normal selection strategy: smallest lcm first.
struct Pair {
  std::uint32_t pos;
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    const int c = pot_compare(a.pos, a.lcm, b.pos, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }
};

class Buchberger {
 public:
  Buchberger(std::uint32_t p, std::size_t rank, std::size_t max_pairs) : p_(p), rank_(rank), max_pairs_(max_pairs) {}

  // The first seed_count inputs already form a Groebner basis.
  std::vector<MVec> run(std::vector<MVec> inputs, std::size_t seed_count) {
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      if (k < seed_count) {
        add_seed(std::move(inputs[k]));
      } else {
        MVec h = reduce(std::move(inputs[k]), g_, p_);
        if (!h.empty()) add(std::move(h));
      }
    }
    while (!queue_.empty()) {
      const Pair pr = *queue_.begin();
      queue_.erase(queue_.begin());
      pending_.erase({pr.i, pr.j});
      if (chain_skip(pr)) continue;
      MVec h = reduce(s_vector(pr), g_, p_);
      if (!h.empty()) add(std::move(h));
    }
    return finish();
  }

 private:
  void add_seed(MVec h) {
    make_monic(h, p_);
    g_.push_back(std::move(h));
  }

  void add(MVec h) {
    make_monic(h, p_);
    const std::size_t k = g_.size();
    g_.push_back(std::move(h));
    const MTerm& lk = g_[k].front();
    for (std::size_t i = 0; i < k; ++i) {
      const MTerm& li = g_[i].front();
      if (li.pos != lk.pos) continue;
      // Product criterion; only valid for ideals.
      if (rank_ == 1 && li.mono.coprime(lk.mono)) continue;
      queue_.insert(Pair{lk.pos, li.mono.lcm(lk.mono), i, k});
      pending_.insert({i, k});
      if (queue_.size() > max_pairs_)
        throw ResourceLimitError("Groebner pair queue exceeded the limit of " + std::to_string(max_pairs_) + " pairs");
    }
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    return pending_.count({std::min(a, b), std::max(a, b)}) != 0;
  }

  // Chain criterion: some g_k with the same position and lm(g_k) | lcm whose
  // pairs with i and j have both been treated already.
  bool chain_skip(const Pair& pr) const {
    for (std::size_t k = 0; k < g_.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      const MTerm& lk = g_[k].front();
      if (lk.pos != pr.pos || !lk.mono.divides(pr.lcm)) continue;
      if (!is_pending(pr.i, k) && !is_pending(pr.j, k)) return true;
    }
    return false;
  }

  MVec s_vector(const Pair& pr) const {
    const MVec& a = g_[pr.i];
    const MVec& b = g_[pr.j];
    // Both are monic.
    MVec sa;
    const Monomial ma = pr.lcm / a.front().mono;
    sa.reserve(a.size());
    for (const auto& t : a) sa.push_back(MTerm{t.pos, t.mono * ma, t.coeff});
    return sub_multiple(sa, 1, pr.lcm / b.front().mono, b, p_);
  }

  std::vector<MVec> finish() {
    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<MVec> minimal;
    for (std::size_t k = 0; k < g_.size(); ++k) {
      const MTerm& lk = g_[k].front();
      bool redundant = false;
      for (std::size_t i = 0; i < g_.size() && !redundant; ++i) {
        if (i == k) continue;
        const MTerm& li = g_[i].front();
        if (li.pos != lk.pos || !li.mono.divides(lk.mono)) continue;
        // Equal leading terms: keep the earliest.
        redundant = !(li.mono == lk.mono) || i < k;
      }
      if (!redundant) minimal.push_back(g_[k]);
    }
    // Tail-reduce.
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      MVec head{minimal[k].front()};
      MVec tail(minimal[k].begin() + 1, minimal[k].end());
      MVec r = reduce(std::move(tail), minimal, p_, k);
      head.insert(head.end(), r.begin(), r.end());
      minimal[k] = std::move(head);
    }
    std::sort(minimal.begin(), minimal.end(), [](const MVec& a, const MVec& b) {
      return pot_compare(a.front().pos, a.front().mono, b.front().pos, b.front().mono) > 0;
    });
    return minimal;
  }

  std::uint32_t p_;
  std::size_t rank_;
  std::size_t max_pairs_;
  std::vector<MVec> g_;
  std::set<Pair, PairLess> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

std::vector<VectorR> compute_basis(const Ring& ring, std::size_t rank, const std::vector<VectorR>& gens,
                                   std::size_t seed_count, std::size_t max_pairs) {
  std::vector<MVec> inputs;
  inputs.reserve(gens.size());
  for (const auto& v : gens) inputs.push_back(to_mvec(v));
  Buchberger bb(ring.p, rank, max_pairs == 0 ? g_pair_limit.load() : max_pairs);
  std::vector<VectorR> out;
  for (const auto& v : bb.run(std::move(inputs), seed_count)) out.push_back(from_mvec(v, ring, rank));
  return out;
}

void check_vector(const Ring& ring, std::size_t rank, const VectorR& v) {
  if (v.size() != rank)
    throw ValidationError("vector of length " + std::to_string(v.size()) + " in a module of rank " +
                          std::to_string(rank));
  for (const auto& f : v)
    if (!(f.ring() == ring)) throw ValidationError("vector entry lives in a different ring");
}

void check_ranks(const Submodule& a, const Submodule& b) {
  if (a.rank() != b.rank())
    throw ValidationError("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  if (!(a.ring() == b.ring())) throw ValidationError("submodules live over different rings");
}

}  // namespace

void set_default_pair_limit(std::size_t limit) { g_pair_limit = limit == 0 ? 200000 : limit; }
std::size_t default_pair_limit() { return g_pair_limit; }

Submodule::Submodule(const Ring& ring, std::size_t rank, std::vector<VectorR> gens)
    : ring_(ring), rank_(rank), cache_(std::make_shared<Cache>()) {
  for (auto& v : gens) {
    check_vector(ring_, rank_, v);
    if (!bfp::is_zero(v)) gens_.push_back(std::move(v));
  }
}

Submodule Submodule::full(const Ring& ring, std::size_t rank) {
  std::vector<VectorR> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(unit_vector(ring, rank, i));
  return Submodule(ring, rank, std::move(gens));
}

Submodule Submodule::ideal(const Ring& ring, const std::vector<Poly>& gens) {
  std::vector<VectorR> vs;
  for (const auto& f : gens) vs.push_back(VectorR{f});
  return Submodule(ring, 1, std::move(vs));
}

const std::vector<VectorR>& Submodule::basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = compute_basis(ring_, rank_, gens_, cache_->seed_count, 0);
  });
  return cache_->basis;
}

std::string Submodule::to_string() const {
  const auto& b = basis();
  std::string out = "<";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i != 0) out += "; ";
    out += bfp::to_string(b[i]);
  }
  return out + ">";
}

Submodule groebner_basis(const Submodule& n, const GbOptions& options) {
  std::call_once(n.cache_->once, [&] {
    n.cache_->basis = compute_basis(n.ring_, n.rank_, n.gens_, n.cache_->seed_count, options.max_pairs);
  });
  return n;
}

VectorR normal_form(const Submodule& n, const VectorR& v) {
  check_vector(n.ring(), n.rank(), v);
  std::vector<MVec> g;
  for (const auto& b : n.basis()) g.push_back(to_mvec(b));
  return from_mvec(reduce(to_mvec(v), g, n.ring().p), n.ring(), n.rank());
}

bool contains(const Submodule& n, const VectorR& v) { return bfp::is_zero(normal_form(n, v)); }

bool contains(const Submodule& big, const Submodule& small) {
  check_ranks(big, small);
  if (small.is_zero()) return true;
  std::vector<MVec> g;
  for (const auto& b : big.basis()) g.push_back(to_mvec(b));
  for (const auto& v : small.generators())
    if (!reduce(to_mvec(v), g, big.ring().p).empty()) return false;
  return true;
}

bool equals(const Submodule& a, const Submodule& b) {
  check_ranks(a, b);
  return a.basis() == b.basis();
}

Submodule module_sum(const Submodule& a, const Submodule& b) {
  check_ranks(a, b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  // Seed with a's reduced basis so its internal pairs are never revisited.
  std::vector<VectorR> gens = a.basis();
  const std::size_t seed = gens.size();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  Submodule out(a.ring(), a.rank(), std::move(gens));
  out.cache_->seed_count = seed;
  return out;
}

bool ModuleAccumulator::add(const Submodule& n) {
  if (contains(current_, n)) return false;
  current_ = module_sum(current_, n);
  return true;
}

}  // namespace bfp

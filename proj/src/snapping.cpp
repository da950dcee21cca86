#include "bfp/snapping.hpp"

#include <algorithm>
#include <map>

#include "bfp/errors.hpp"

namespace bfp {

GridRational grid_ceil(const Rational& lambda, unsigned e, const CharConfig& cfg) {
  const Integer Q = cfg.q_pow(e + 1);
  return GridRational{ceil(lambda * Q), e, cfg.q()};
}

std::vector<Chain> build_chains(const std::vector<std::vector<GridRational>>& levels) {
  std::vector<Chain> chains;
  if (levels.empty()) return chains;
  for (const auto& start : levels.back()) {
    std::vector<GridRational> rev{start};
    for (std::size_t lv = levels.size() - 1; lv-- > 0;) {
      const auto& prev = levels[lv];
      if (prev.empty()) break;
      const Rational x = rev.back().value();
      const GridRational* best = nullptr;
      Rational best_dist;
      for (const auto& cand : prev) {
        Rational d = cand.value() - x;
        if (d < 0) d = -d;
        if (best == nullptr || d < best_dist || (d == best_dist && cand.value() > best->value())) {
          best = &cand;
          best_dist = d;
        }
      }
      rev.push_back(*best);
    }
    std::reverse(rev.begin(), rev.end());
    chains.push_back(Chain{std::move(rev)});
  }
  return chains;
}

std::optional<Rational> snap_chain(const Chain& chain, const CharConfig& cfg, unsigned window, const Integer& slack) {
  const std::size_t len = chain.members.size();
  if (len < 2) return std::nullopt;
  const std::size_t tail_len = std::max<std::size_t>(2, (len + 1) / 2);
  const std::vector<GridRational> tail(chain.members.end() - static_cast<std::ptrdiff_t>(tail_len),
                                       chain.members.end());
  const GridRational& last = tail.back();
  const Integer q = cfg.q();
  const Integer Q = last.denominator();

  auto slack_of = [&](const Rational& lambda) -> std::optional<Integer> {
    Integer total = 0;
    for (const auto& g : tail) {
      const Integer d = ceil(lambda * g.denominator()) - g.m;
      if (d < 0 || d >= slack) return std::nullopt;
      total += d;
    }
    return total;
  };

  // Denominators q^a (q^b - 1), simplest first: by a + b, then a.
  for (unsigned s = 1; s <= 2 * window; ++s) {
    for (unsigned a = 0; a <= window && a < s; ++a) {
      const unsigned b = s - a;
      if (b < 1 || b > window) continue;
      const Integer D = ipow(q, a) * (ipow(q, b) - 1);
      // c/D in ((m - 1)/Q, (m + slack - 1)/Q] and in (0, 1].
      Integer lo = floor(Rational((last.m - 1) * D, Q)) + 1;
      Integer hi = floor(Rational((last.m + slack - 1) * D, Q));
      lo = std::max(lo, Integer(1));
      hi = std::min(hi, D);
      std::optional<Rational> best;
      Integer best_slack;
      for (Integer c = lo; c <= hi; ++c) {
        const Rational lambda(c, D);
        if (auto sl = slack_of(lambda)) {
          if (!best || *sl < best_slack || (*sl == best_slack && lambda < *best)) {
            best = lambda;
            best_slack = *sl;
          }
        }
      }
      if (best) return best;
    }
  }
  return std::nullopt;
}

Estimate estimate_from_levels(const std::vector<std::vector<GridRational>>& levels, const CharConfig& cfg,
                              unsigned window, const Integer& slack) {
  Estimate out;
  out.chains = build_chains(levels);
  std::map<Rational, std::vector<GridRational>> found;
  for (const auto& ch : out.chains) {
    if (auto lambda = snap_chain(ch, cfg, window, slack)) {
      auto& w = found[*lambda];
      for (const auto& g : ch.members)
        if (std::find(w.begin(), w.end(), g) == w.end()) w.push_back(g);
    } else {
      out.unresolved.push_back(ch);
    }
  }
  for (auto& [lambda, w] : found) {
    std::sort(w.begin(), w.end(), [](const GridRational& x, const GridRational& y) {
      return x.e != y.e ? x.e < y.e : x.m < y.m;
    });
    out.jumps.push_back(SnappedJump{lambda, std::move(w)});
  }
  return out;
}

}  // namespace bfp

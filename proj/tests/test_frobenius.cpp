#include <gtest/gtest.h>

#include "bfp/errors.hpp"
#include "bfp/frobenius.hpp"
#include "support.hpp"

using namespace bfp;
using namespace bfp::test;

namespace {

Integer max_degree(const Submodule& n) {
  Integer d = 0;
  for (const auto& v : n.generators())
    for (const auto& f : v) d = std::max(d, f.total_degree());
  return d;
}

}  // namespace

TEST(BracketPower, Examples) {
  const CharConfig c2(2), c3(3);
  const Ring r2 = ring_of(2, 2), r3 = ring_of(3, 2);
  EXPECT_TRUE(equals(bracket_power(ideal_of(r2, {"x0"}), 1, c2), ideal_of(r2, {"x0^2"})));
  EXPECT_TRUE(bracket_power(Submodule::zero(r2, 2), 1, c2).is_zero());
  const Submodule v(r3, 2, {{P("x0", r3), P("x1", r3)}});
  const Submodule w(r3, 2, {{P("x0^3", r3), P("x1^3", r3)}});
  EXPECT_TRUE(equals(bracket_power(v, 1, c3), w));
}

TEST(FrobeniusRoot, MinimalityOracle) {
  const CharConfig c(2);
  const Ring r = ring_of(2, 1);
  const Submodule root = frobenius_root(ideal_of(r, {"x0^3"}), 1, c);
  EXPECT_TRUE(equals(root, ideal_of(r, {"x0"})));
  // (x0)^[2] = (x0^2) contains x0^3 while (x0^2)^[2] = (x0^4) does not.
  EXPECT_TRUE(contains(ideal_of(r, {"x0^2"}), VectorR{P("x0^3", r)}));
  EXPECT_FALSE(contains(ideal_of(r, {"x0^4"}), VectorR{P("x0^3", r)}));
}

TEST(FrobeniusRoot, ExactSquare) {
  const CharConfig c(2);
  const Ring r = ring_of(2, 2);
  EXPECT_TRUE(equals(frobenius_root(ideal_of(r, {"x0^2 + x1^2"}), 1, c), ideal_of(r, {"x0 + x1"})));
}

TEST(FrobeniusRoot, UnitScaling) {
  const CharConfig c(5);
  const Ring r = ring_of(5, 2);
  const Submodule a(r, 2, {{P("x0^7 + x1^5", r), P("x0*x1^6", r)}});
  const Submodule b(r, 2, {{P("3*x0^7 + 3*x1^5", r), P("3*x0*x1^6", r)}});
  EXPECT_TRUE(equals(frobenius_root(a, 1, c), frobenius_root(b, 1, c)));
}

TEST(FrobeniusRoot, UnivariateOracle) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const CharConfig c(p);
    const Ring r = ring_of(p, 1);
    for (unsigned a = 0; a < 40; ++a)
      for (std::uint64_t e = 1; e <= 3; ++e) {
        const Integer expected = oracle::univariate_root_exponent(a, c.q_pow(e));
        const Submodule root = frobenius_root(Submodule::ideal(r, {Poly::variable(r, 0, a)}), e, c);
        EXPECT_TRUE(equals(root, Submodule::ideal(r, {Poly::variable(r, 0, expected)}))) << a << " " << e;
      }
  }
}

TEST(FrobeniusRoot, GammaTwoUsesQ) {
  const CharConfig c(2, 2);
  const Ring r = ring_of(2, 1);
  EXPECT_TRUE(equals(frobenius_root(ideal_of(r, {"x0^7"}), 1, c), ideal_of(r, {"x0"})));
  EXPECT_TRUE(equals(frobenius_root(ideal_of(r, {"x0^3"}), 1, c), Submodule::full(r, 1)));
}

TEST(StableRoot, NonDescendingChainIsReported) {
  const CharConfig c(2);
  const Ring r = ring_of(2, 1);
  const StableRoot s = stable_root(ideal_of(r, {"x0"}), c);
  EXPECT_TRUE(equals(s.value, Submodule::full(r, 1)));
  EXPECT_FALSE(s.descending);
  // Oracle: the level-1 and level-2 roots are both R.
  EXPECT_TRUE(equals(frobenius_root(ideal_of(r, {"x0"}), 1, c), Submodule::full(r, 1)));
  EXPECT_TRUE(equals(frobenius_root(ideal_of(r, {"x0"}), 2, c), Submodule::full(r, 1)));
}

TEST(StableRoot, FixedPoints) {
  const CharConfig c(3);
  const Ring r = ring_of(3, 2);
  EXPECT_TRUE(stable_root(Submodule::zero(r, 2), c).value.is_zero());
  const StableRoot full = stable_root(Submodule::full(r, 3), c);
  EXPECT_TRUE(equals(full.value, Submodule::full(r, 3)));
  EXPECT_EQ(full.stabilized_at, 0u);
  EXPECT_TRUE(full.descending);
}

TEST(StableRoot, CapIsEnforced) {
  const CharConfig c(2);
  const Ring r = ring_of(2, 1);
  // x0^8 needs three roots to reach R.
  EXPECT_THROW(stable_root(ideal_of(r, {"x0^8"}), c, 2), NoStabilizationError);
  EXPECT_NO_THROW(stable_root(ideal_of(r, {"x0^8"}), c, 8));
}

TEST(DClosure, Examples) {
  const CharConfig c(2);
  const Ring r = ring_of(2, 1);
  EXPECT_TRUE(equals(d_closure(ideal_of(r, {"x0^3"}), 1, c), ideal_of(r, {"x0^2"})));
  EXPECT_TRUE(d_closure(Submodule::zero(r, 1), 1, c).is_zero());
  EXPECT_TRUE(equals(d_closure(ideal_of(r, {"x0^4"}), 2, c), ideal_of(r, {"x0^4"})));
}

class RootProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(RootProperties, RandomSubmodules) {
  const std::uint32_t p = GetParam();
  const CharConfig c(p);
  const Ring r = ring_of(p, 2);
  Gen g(100 + p);
  for (int i = 0; i < 60; ++i) {
    const std::size_t rank = g.between(1, 3);
    const Submodule n = g.submodule(r, rank, 3, 6, 3);
    for (std::uint64_t e = 1; e <= 2; ++e) {
      const Submodule root = frobenius_root(n, e, c);
      // Defining containment.
      const Submodule back = bracket_power(root, e, c);
      for (const auto& v : n.generators()) EXPECT_TRUE(contains(back, v));
      // Round trip.
      EXPECT_TRUE(equals(frobenius_root(bracket_power(n, e, c), e, c), n));
      // Degree bound.
      const Integer bound = max_degree(n) / c.q_pow(e);
      for (const auto& v : root.generators())
        for (const auto& f : v) EXPECT_LE(f.total_degree(), bound);
      // Minimality: no generator can be dropped.
      for (std::size_t k = 0; k < root.generators().size(); ++k) {
        std::vector<VectorR> fewer;
        for (std::size_t j = 0; j < root.generators().size(); ++j)
          if (j != k) fewer.push_back(root.generators()[j]);
        const Submodule smaller = bracket_power(Submodule(r, rank, fewer), e, c);
        bool all = true;
        for (const auto& v : n.generators()) all = all && contains(smaller, v);
        EXPECT_FALSE(all);
      }
      // Monotonicity.
      const Submodule bigger = module_sum(n, g.submodule(r, rank, 2, 6, 3));
      EXPECT_TRUE(contains(frobenius_root(bigger, e, c), root));
      // Raw and pruned roots agree.
      EXPECT_TRUE(equals(frobenius_root_raw(n, e, c), root));
    }
    // d_closure is idempotent and contains N.
    const Submodule d = d_closure(n, 1, c);
    EXPECT_TRUE(contains(d, n));
    EXPECT_TRUE(equals(d_closure(d, 1, c), d));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, RootProperties, ::testing::Values(2u, 3u));

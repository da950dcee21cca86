#include <gtest/gtest.h>

#include "bfp/errors.hpp"
#include "support.hpp"

using namespace bfp;
using namespace bfp::test;

TEST(CharConfig, RejectsCompositeAndComputesQ) {
  EXPECT_THROW(CharConfig(4), ValidationError);
  EXPECT_THROW(CharConfig(1), ValidationError);
  EXPECT_THROW(CharConfig(3, 0), ValidationError);
  const CharConfig c(3, 2);
  EXPECT_EQ(c.q(), 9);
  EXPECT_EQ(c.q_pow(3), 729);
}

TEST(Parse, ZeroIsAdditiveIdentity) {
  const Ring r = ring_of(3, 2);
  EXPECT_TRUE(P("0", r).is_zero());
  EXPECT_EQ(P("x0 + 0", r), P("x0", r));
}

TEST(Parse, ReadsCoefficientsDirectly) {
  const Poly f = P("2*x0^2 + x1", ring_of(3, 2));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.terms()[0].coeff, 2u);
  EXPECT_EQ(f.terms()[1].coeff, 1u);
}

TEST(Parse, ReducesCoefficientsModP) {
  EXPECT_TRUE(P("3*x0", ring_of(3, 1)).is_zero());
  EXPECT_EQ(P("5*x0", ring_of(3, 1)), P("2*x0", ring_of(3, 1)));
}

TEST(Parse, ReportsSyntaxPosition) {
  const Ring r = ring_of(3, 2);
  try {
    P("x0 + * x1", r);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(P("x0^", r), ParseError);
  EXPECT_THROW(P("", r), ParseError);
  EXPECT_THROW(P("x0 x1", r), ParseError);
  EXPECT_THROW(P("x0 - x1", r), ParseError);
}

TEST(Parse, RejectsUnknownVariables) {
  const Ring r = ring_of(3, 2);
  EXPECT_THROW(P("x2", r), ValidationError);
  EXPECT_THROW(P("y", r), ValidationError);
  EXPECT_THROW(P("t", r), ValidationError);
  EXPECT_NO_THROW(P("t^2*x1", ring_of(3, 2, Extra::t)));
  EXPECT_THROW(P("tau", ring_of(3, 2, Extra::t)), ValidationError);
  EXPECT_NO_THROW(P("tau*x0", ring_of(3, 2, Extra::tau)));
}

TEST(Parse, WhitespaceIsInsignificant) {
  const Ring r = ring_of(5, 2);
  EXPECT_EQ(P(" 2 * x0 ^ 3*x1+ 4 ", r), P("2*x0^3*x1 + 4", r));
}

TEST(Print, CanonicalRoundTrip) {
  const Ring r = ring_of(3, 2, Extra::t);
  for (const char* s : {"2*x0^2*x1 + x1 + 1", "x0*t^3 + 2", "0", "x1^20 + x0^10*x1^7*t"}) {
    EXPECT_EQ(P(s, r).to_string(), s);
    EXPECT_EQ(P(P(s, r).to_string(), r), P(s, r));
  }
  EXPECT_EQ(P("x1 + x0^2 + x0*x1", ring_of(2, 2)).to_string(), "x0^2 + x0*x1 + x1");
}

TEST(Print, RandomRoundTrip) {
  Gen g(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Ring r = ring_of(p, 3, Extra::tau);
    for (int i = 0; i < 50; ++i) {
      const Poly f = g.poly(r, 8, 5);
      EXPECT_EQ(P(f.to_string(), r), f);
    }
  }
}

TEST(Order, GrevlexBreaksTiesOnLastVariable) {
  const Ring r = ring_of(2, 3);
  auto lead = [&](const char* s) { return P(s, r).leading().mono; };
  EXPECT_GT(grevlex_compare(lead("x0^2"), lead("x1")), 0);
  EXPECT_GT(grevlex_compare(lead("x0*x1"), lead("x0*x2")), 0);
  EXPECT_GT(grevlex_compare(lead("x1^2"), lead("x0*x2")), 0);
}

TEST(Frobenius, FreshmansDream) {
  const CharConfig c(2);
  const Ring r = ring_of(2, 2);
  EXPECT_EQ(frobenius_power(P("x0 + x1", r), 1, c), P("x0^2 + x1^2", r));
}

TEST(Frobenius, ConstantsAreFixed) {
  const CharConfig c(5);
  const Ring r = ring_of(5, 1);
  for (std::uint64_t e : {0u, 1u, 3u}) EXPECT_EQ(frobenius_power(P("3", r), e, c), P("3", r));
}

TEST(Frobenius, MatchesRepeatedMultiplication) {
  const CharConfig c(3);
  const Ring r = ring_of(3, 1);
  const Poly f = P("2*x0", r);
  EXPECT_EQ(frobenius_power(f, 2, c), oracle::repeated_power(f, 9));
  EXPECT_EQ(frobenius_power(f, 2, c), P("2*x0^9", r));
}

TEST(Frobenius, RandomAgainstRepeatedMultiplication) {
  Gen g(5);
  for (std::uint32_t p : {2u, 3u}) {
    const CharConfig c(p);
    const Ring r = ring_of(p, 2);
    for (int i = 0; i < 20; ++i) {
      const Poly f = g.poly(r, 3, 3);
      EXPECT_EQ(frobenius_power(f, 1, c), oracle::repeated_power(f, p));
      EXPECT_EQ(f.pow(p * p), oracle::repeated_power(f, p * p));
    }
  }
}

TEST(Power, AgreesWithRepeatedMultiplication) {
  Gen g(7);
  const Ring r = ring_of(3, 2);
  for (int i = 0; i < 20; ++i) {
    const Poly f = g.poly(r, 3, 3);
    const unsigned n = static_cast<unsigned>(g.below(12));
    EXPECT_EQ(f.pow(n), oracle::repeated_power(f, n)) << f.to_string() << " ^ " << n;
  }
}

TEST(Decompose, ExactPower) {
  for (std::uint32_t p : {2u, 3u}) {
    const CharConfig c(p);
    const Ring r = ring_of(p, 1);
    const auto d = frobenius_decompose(Poly::variable(r, 0, c.q()), 1, c);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_TRUE(d.begin()->first.is_one());
    EXPECT_EQ(d.begin()->second, P("x0", r));
  }
}

TEST(Decompose, SplitsRemainder) {
  const CharConfig c(3);
  const Ring r = ring_of(3, 1);
  const auto d = frobenius_decompose(P("x0^4", r), 1, c);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.begin()->first[0], 1);
  EXPECT_EQ(d.begin()->second, P("x0", r));
}

TEST(Decompose, TwoVariableExample) {
  const CharConfig c(2);
  const Ring r = ring_of(2, 2);
  const Poly f = P("x0^3 + x0*x1^2", r);
  const auto d = frobenius_decompose(f, 1, c);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.begin()->first, P("x0", r).leading().mono);
  EXPECT_EQ(d.begin()->second, P("x0 + x1", r));
  // Oracle: (x0 + x1)^2 * x0 expanded by plain multiplication.
  EXPECT_EQ(oracle::naive_mul(oracle::repeated_power(P("x0 + x1", r), 2), P("x0", r)), f);
}

TEST(DecomposeProperty, Recomposition) {
  Gen g(21);
  for (std::uint32_t p : {2u, 3u}) {
    const CharConfig c(p);
    const Ring r = ring_of(p, 2);
    for (int i = 0; i < 40; ++i) {
      const Poly f = g.poly(r, 20, 6);
      for (std::uint64_t e = 1; e <= 3; ++e) {
        Poly sum(r);
        for (const auto& [u, a] : frobenius_decompose(f, e, c)) {
          for (std::size_t k = 0; k < u.arity(); ++k) EXPECT_LT(u[k], c.q_pow(e));
          EXPECT_FALSE(a.is_zero());
          sum += oracle::naive_mul(frobenius_power(a, e, c), Poly::monomial(r, u));
        }
        EXPECT_EQ(sum, f);
      }
    }
  }
}

TEST(DecomposeProperty, DigitSplitConsistency) {
  Gen g(22);
  for (std::uint32_t p : {2u, 3u}) {
    const CharConfig c(p);
    const Ring r = ring_of(p, 2);
    for (int i = 0; i < 40; ++i) {
      const Poly f = g.poly(r, 6, 4);
      for (std::uint64_t e = 1; e <= 3; ++e) {
        const auto d = frobenius_decompose(frobenius_power(f, e, c), e, c);
        ASSERT_EQ(d.size(), 1u);
        EXPECT_TRUE(d.begin()->first.is_one());
        EXPECT_EQ(d.begin()->second, f);
      }
    }
  }
}

TEST(RingProperty, AxiomsOnRandomTriples) {
  Gen g(23);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const Ring r = ring_of(p, 3);
    for (int i = 0; i < 40; ++i) {
      const Poly a = g.poly(r, 4, 4), b = g.poly(r, 4, 4), c = g.poly(r, 4, 4);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * b, oracle::naive_mul(a, b));
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Numeric, ParsesExactRationalsOnly) {
  EXPECT_EQ(parse_rational("1/3"), Rational(1, 3));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("0.32"), ValidationError);
  EXPECT_THROW(parse_rational("1e3"), ValidationError);
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational("a/b"), ValidationError);
  EXPECT_EQ(ceil(Rational(-1, 2)), 0);
  EXPECT_EQ(floor(Rational(-1, 2)), -1);
  EXPECT_EQ(frac(Rational(7, 4)), Rational(3, 4));
}

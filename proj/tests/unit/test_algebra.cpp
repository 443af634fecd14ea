#include <gtest/gtest.h>

#include "builders.hpp"
#include "expnev/algebra.hpp"
#include "random_inputs.hpp"

using namespace expnev;
using expnev::testkit::basis;
using expnev::testkit::xpoly;

namespace {

// D_u by the coefficient rule, written out independently of the library:
// a_i x^i -> (a_i' + a_i * sum_j i_j Q_j') x^i.
LaurentPoly coefficient_rule(const LaurentPoly& f, const UnitBasis& b) {
  LaurentPoly out(f.arity());
  for (const auto& [e, a] : f.terms()) {
    ZPoly w;
    for (std::size_t j = 0; j < e.size(); ++j) w += b.frequency(j).derivative().scaled(GR(e[j]));
    out.add_term(e, a.derivative() + a * RatFunc(w));
  }
  return out;
}

}  // namespace

TEST(Gcd, Examples) {
  const LaurentPoly f = xpoly("x0^2 - 1", 1), g = xpoly("x0^2 - 2*x0 + 1", 1);
  EXPECT_EQ(laurent_gcd(f, g), xpoly("x0 - 1", 1));
  EXPECT_EQ(laurent_gcd(xpoly("x0 + 1", 2), xpoly("x1 + 1", 2)), xpoly("1", 2));
  const LaurentPoly h = xpoly("3*x0^2*x1 + 6*z*x0*x1^2", 2);
  EXPECT_EQ(laurent_gcd(h, h), xpoly("x0 + 2*z*x1", 2));
}

TEST(Gcd, RecoversPlantedFactor) {
  testkit::RandomInputs rnd(31);
  for (int trial = 0; trial < 30; ++trial) {
    const LaurentPoly c = rnd.nonmonomial_polynomial(2, 3, 2);
    const LaurentPoly a = rnd.nonmonomial_polynomial(2, 2, 1), b = rnd.nonmonomial_polynomial(2, 2, 1);
    const LaurentPoly g = laurent_gcd(a * c, b * c);
    EXPECT_TRUE(try_divexact(g, c.normalized()).has_value() || try_divexact(g, c).has_value()) << trial;
    EXPECT_TRUE(try_divexact(a * c, g).has_value());
    EXPECT_TRUE(try_divexact(b * c, g).has_value());
  }
}

TEST(Squarefree, Examples) {
  const auto d1 = squarefree_decompose(xpoly("(x0 - 1)^2 * (x0 + 1)", 1));
  ASSERT_EQ(d1.factors.size(), 2u);
  EXPECT_EQ(d1.factors[0], std::make_pair(xpoly("x0 + 1", 1), 1));
  EXPECT_EQ(d1.factors[1], std::make_pair(xpoly("x0 - 1", 1), 2));

  const auto d2 = squarefree_decompose(xpoly("x0^3 * (x1 + z)", 2));
  ASSERT_EQ(d2.factors.size(), 1u);
  EXPECT_EQ(d2.factors[0], std::make_pair(xpoly("x1 + z", 2), 1));
  EXPECT_EQ(d2.unit, xpoly("x0^3", 2));

  EXPECT_TRUE(is_squarefree(xpoly("x0^2 + x1", 2)));
  EXPECT_FALSE(is_squarefree(xpoly("(x0 + z)^2 * x1", 2)));
  EXPECT_FALSE(is_squarefree(xpoly("(x0 - z^2)^3", 1)));
}

TEST(Squarefree, ReassemblyOnRandomProducts) {
  testkit::RandomInputs rnd(32);
  for (int trial = 0; trial < 40; ++trial) {
    const LaurentPoly a = rnd.nonmonomial_polynomial(2, 2, 2), b = rnd.nonmonomial_polynomial(2, 2, 1);
    const LaurentPoly f = a * b * b * LaurentPoly::variable(2, 1, rnd.integer(-2, 2));
    const auto d = squarefree_decompose(f);
    EXPECT_EQ(d.reassemble(), f);
    EXPECT_FALSE(is_squarefree(f));
    for (const auto& [s, k] : d.factors) EXPECT_TRUE(is_squarefree(s));
  }
}

TEST(Derivation, Examples) {
  EXPECT_EQ(derivation_Du(xpoly("x0^2 + z*x0", 1), basis("z")), xpoly("2*x0^2 + (1 + z)*x0", 1));
  EXPECT_TRUE(derivation_Du(xpoly("(2+i)/3", 1), basis("z")).is_zero());
  EXPECT_EQ(derivation_Du(xpoly("x0", 1), basis("z^2")), xpoly("2*z*x0", 1));
}

TEST(Derivation, MatchesCoefficientRuleAndProductRule) {
  testkit::RandomInputs rnd(33);
  for (int trial = 0; trial < 50; ++trial) {
    const UnitBasis b = rnd.independent_basis(2);
    const LaurentPoly f = rnd.laurent(2, 3, -2, 2), g = rnd.laurent(2, 3, -2, 2);
    EXPECT_EQ(derivation_Du(f, b), coefficient_rule(f, b));
    EXPECT_EQ(derivation_Du(f * g, b), derivation_Du(f, b) * g + f * derivation_Du(g, b));
  }
}

TEST(CriticalPair, Examples) {
  const UnitBasis bz = basis("z");
  const auto sq = critical_pair(xpoly("(x0 - 1)^2", 1), bz);
  EXPECT_EQ(sq.radical, xpoly("x0 - 1", 1));
  // k * D(S_k) with k = 2.
  EXPECT_EQ(sq.companion, xpoly("2*x0", 1));
  EXPECT_EQ(sq.gcd, xpoly("1", 1));

  const UnitBasis b2 = basis("z^2; z");
  const LaurentPoly F = xpoly("(x0 - 1)*(x1 - z)", 2);
  const auto cp = critical_pair(F, b2);
  EXPECT_EQ(cp.companion, derivation_Du(F, b2));
  // D(x0 - 1) = 2z x0 over Q_1 = z^2, D(x1 - z) = x1 - 1.
  EXPECT_EQ(cp.companion, xpoly("2*z*x0*(x1 - z) + (x0 - 1)*(x1 - 1)", 2));
  EXPECT_EQ(cp.gcd, xpoly("1", 2));
}

TEST(CriticalPair, SquarefreeInputGivesNormalizedPair) {
  const UnitBasis b = basis("z; i*z");
  const LaurentPoly F = xpoly("2*x0 + x1 + 3", 2);
  const auto cp = critical_pair(F, b);
  EXPECT_EQ(cp.radical, F.normalized());
  EXPECT_EQ(cp.companion, derivation_Du(cp.radical, b));
}

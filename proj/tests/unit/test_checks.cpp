#include <gtest/gtest.h>

#include "builders.hpp"
#include "expnev/numeric/checks.hpp"

using namespace expnev;
using namespace expnev::numeric;

namespace {

double oscillation(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

}  // namespace

TEST(FirstMain, UnitAgainstOne) {
  const auto l = testkit::lowered("exp[z]");
  const auto rep = first_main_check(l.poly, l.basis, GR(1), make_grid(5, 50, 10, false));
  EXPECT_TRUE(rep.preconditions_ok);
  EXPECT_TRUE(rep.pass);
  ASSERT_EQ(rep.margin.size(), 10u);
  for (std::size_t k = 0; k < rep.margin.size(); ++k) EXPECT_NEAR(rep.margin[k], rep.lhs[k] - rep.rhs[k], 1e-12);
  EXPECT_LE(oscillation(rep.margin), 1.0);
  EXPECT_EQ(rep.pass, evaluate_verdict(rep));
}

TEST(LogDeriv, ExponentialPolynomial) {
  const auto l = testkit::lowered("exp[z] + exp[i*z] + 1");
  const auto rep = logderiv_check(l.poly, l.basis, make_grid(4, 12, 6, false));
  EXPECT_TRUE(rep.preconditions_ok);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.rule, "upper_bound_top_half");
}

TEST(TrunBorel, ThreeUnitsAndTheirNegatedSum) {
  const auto lm = expr::lower_jointly({expr::parse_expression("exp[z^2]"), expr::parse_expression("exp[z]"),
                                       expr::parse_expression("1"),
                                       expr::parse_expression("-(exp[z^2] + exp[z] + 1)")});
  const auto rep = trunborel_check(lm.polys, lm.basis, {6, 8});
  ASSERT_TRUE(rep.preconditions_ok);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.metadata.at("subsums_checked").get<int>(), 14);
  const double ratio = rep.column("N_trunc_3").back() / rep.lhs.back();
  EXPECT_GE(ratio, 0.9);
  EXPECT_LE(ratio, 1.05);
}

TEST(TrunBorel, VanishingSubsumIsAPrecondition) {
  const auto lm = expr::lower_jointly({expr::parse_expression("exp[z]"), expr::parse_expression("-exp[z]"),
                                       expr::parse_expression("1"), expr::parse_expression("-1")});
  const auto rep = trunborel_check(lm.polys, lm.basis, {4, 5});
  EXPECT_FALSE(rep.preconditions_ok);
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(rep.diagnostics.empty());
}

TEST(Smt, LinearFormInThreeUnits) {
  const auto rep = smt_moving_check(testkit::xpoly("x0 + x1 + x2", 3), testkit::basis("z; i*z; z^2"), {6, 7, 8});
  ASSERT_TRUE(rep.preconditions_ok);
  EXPECT_TRUE(rep.pass);
  for (std::size_t k = 1; k < 3; ++k) {
    EXPECT_LE(rep.lhs[k], 0.05);
    EXPECT_GE(rep.column("simple_ratio")[k], 0.9);
  }
}

TEST(Smt, RepeatedFactorIsRejected) {
  const auto rep = smt_moving_check(testkit::xpoly("(x0 + x1)^2", 2), testkit::basis("z; i*z"), {4, 5});
  EXPECT_FALSE(rep.preconditions_ok);
  EXPECT_FALSE(rep.pass);
}

TEST(Smt, DependentBasisIsRejected) {
  const auto rep = smt_moving_check(testkit::xpoly("x0 + x1", 2), testkit::basis("z; 2*z"), {4, 5});
  EXPECT_FALSE(rep.preconditions_ok);
}

TEST(GcdSmall, DisjointZeroSets) {
  const UnitBasis b = testkit::basis("z; z^2");
  const auto rep = gcd_smallness_check(testkit::xpoly("x0 + 1", 2), testkit::xpoly("x1 + 1", 2), b, make_grid(2, 10, 5, false));
  ASSERT_TRUE(rep.preconditions_ok);
  for (double v : rep.lhs) EXPECT_EQ(v, 0.0);
  EXPECT_TRUE(rep.pass);
}

TEST(GcdSmall, CommonFactorIsRejected) {
  const UnitBasis b = testkit::basis("z; z^2");
  const auto rep = gcd_smallness_check(testkit::xpoly("(x0 + 1)*x1", 2), testkit::xpoly("(x0 + 1)*(x1 - 1)", 2), b, {3, 4});
  EXPECT_FALSE(rep.preconditions_ok);
}

TEST(DPower, SquarefreeInput) {
  const auto rep = dpower_obstruction_check(testkit::xpoly("x0^2 - x1", 2), testkit::basis("z; i*z"), {4, 6}, 2);
  ASSERT_TRUE(rep.preconditions_ok);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.column("N_gcd").size(), 2u);
}

TEST(Transversal, ConicAndLine) {
  const auto one = transversality_check({testkit::xpoly("x0^2 - z*x1^2", 2)}, {0.5, 1.0 / 3});
  EXPECT_TRUE(one.pass);
  EXPECT_EQ(one.margin.size(), 2u);

  const auto two = transversality_check(
      {testkit::xpoly("x0^2 + x1^2 - x2^2", 3), testkit::xpoly("x0*x1 - z*x2^2", 3)}, {0.5, 1.0 / 3});
  EXPECT_TRUE(two.pass);
  EXPECT_EQ(two.margin.size(), 4u);
}

TEST(Transversal, TangencyFails) {
  // x0^2 has a double root at [0:1], where its only minor 2*x0 vanishes.
  const auto rep = transversality_check({testkit::xpoly("x0^2", 2)}, {0.5, 0.25});
  EXPECT_FALSE(rep.pass);
}

TEST(Verdict, ReproducibleFromReport) {
  const auto l = testkit::lowered("exp[z] - 1");
  const auto grid = make_grid(3, 9, 4, false);
  const auto a = first_main_check(l.poly, l.basis, GR(2), grid);
  const auto b = first_main_check(l.poly, l.basis, GR(2), grid);
  EXPECT_EQ(report_to_json(a).dump(), report_to_json(b).dump());
  EXPECT_EQ(report_to_csv(a), report_to_csv(b));
  CheckReport tampered = a;
  tampered.margin.back() += 10;
  EXPECT_FALSE(evaluate_verdict(tampered));
}

TEST(Report, TwelveDigitFormatting) {
  EXPECT_EQ(format12(1.0 / 3), "0.333333333333");
  EXPECT_EQ(round12(2.0 / 3), 0.666666666667);
  EXPECT_EQ(format12(7), "7");
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "builders.hpp"
#include "expnev/numeric/nevanlinna.hpp"
#include "random_inputs.hpp"

using namespace expnev;
using namespace expnev::numeric;

namespace {

constexpr double kPi = std::numbers::pi;

ExpPolyFunction fn(const std::string& text) {
  const auto l = testkit::lowered(text);
  return ExpPolyFunction(l.poly, l.basis);
}

int total_multiplicity(const std::vector<ZeroRecord>& zs) {
  int n = 0;
  for (const auto& z : zs) n += z.multiplicity;
  return n;
}

}  // namespace

TEST(ExpPolyFunction, ValuesMatchDirectEvaluation) {
  const auto f = fn("z^2 * exp[z^2] + 1/z - exp[i*z]");
  for (cd z : {cd(0.3, 0.4), cd(-1.2, 0.7), cd(2.0, -1.5)}) {
    const cd direct = z * z * std::exp(z * z) + 1.0 / z - std::exp(cd(0, 1) * z);
    EXPECT_LT(std::abs(f(z) - direct), 1e-12 * std::abs(direct));
  }
}

TEST(ExpPolyFunction, DerivativeMatchesFiniteDifferences) {
  testkit::RandomInputs rnd(61);
  std::uniform_real_distribution<double> coord(-1.5, 1.5), height(0.5, 1.5);
  int checked = 0;
  while (checked < 100) {
    const UnitBasis b = rnd.independent_basis(2);
    const ExpPolyFunction f(rnd.laurent(2, 3, -2, 2), b);
    if (f.is_zero()) continue;
    const cd z(coord(rnd.engine()), height(rnd.engine()));
    const double h = 1e-6 * std::max(1.0, std::abs(z));
    const cd numeric = (f(z + h) - f(z - h)) / (2 * h);
    const cd exact = f.derivative(z);
    EXPECT_LT(std::abs(numeric - exact), 1e-6 * std::max(1.0, std::abs(exact)));
    ++checked;
  }
}

TEST(ExpPolyFunction, ScaledEvaluationAvoidsOverflow) {
  const auto f = fn("exp[z^2]");
  const cd z(40, 0);
  EXPECT_NEAR(f.log_abs(z), 1600.0, 1e-9);
  EXPECT_NEAR(std::abs(f.log_derivative(z) - 2.0 * z), 0.0, 1e-9);
}

TEST(Zeros, UnitMinusOne) {
  const auto zs = find_zeros(fn("exp[z] - 1"), 7);
  ASSERT_EQ(zs.zeros.size(), 3u);
  EXPECT_LT(std::abs(zs.zeros[0].location), 1e-12);
  for (const auto& z : zs.zeros) EXPECT_EQ(z.multiplicity, 1);
  EXPECT_LT(std::abs(zs.zeros[1].location - cd(0, -2 * kPi)) * std::abs(zs.zeros[2].location - cd(0, 2 * kPi)), 1e-18);
}

TEST(Zeros, UnitHasNoZeros) {
  EXPECT_TRUE(zeros_in_disk(fn("exp[z]"), 12).empty());
  EXPECT_TRUE(zeros_in_disk(fn("exp[z^2 + i*z]"), 5).empty());
}

TEST(Zeros, DoubleZeroIsOneCluster) {
  const auto zs = zeros_in_disk(fn("(exp[z] - 1)^2"), 1);
  ASSERT_EQ(zs.size(), 1u);
  EXPECT_EQ(zs[0].multiplicity, 2);
  EXPECT_LT(std::abs(zs[0].location), 1e-6);
}

TEST(Zeros, ArgumentPrincipleConsistency) {
  for (const char* text : {"exp[z] - 1", "exp[z] + exp[i*z] + exp[z^2]", "z^3 - exp[z]", "(exp[z] - 1)^2 * (z - 1/2)",
                           "exp[2*z] - z*exp[z] + 1"}) {
    const auto zs = find_zeros(fn(text), 5);
    EXPECT_EQ(total_multiplicity(zs.zeros) - total_multiplicity(zs.poles), zs.outer_winding) << text;
    const cd w = winding_integral(fn(text).cleared(), 0, zs.radius);
    EXPECT_NEAR(w.real(), zs.outer_winding + total_multiplicity(zs.poles), 1e-3) << text;
  }
}

TEST(Zeros, RationalCoefficientPolesAreReported) {
  const auto zs = find_zeros(fn("z - 1/z"), 2);
  ASSERT_EQ(zs.zeros.size(), 2u);
  EXPECT_NEAR(std::abs(zs.zeros[0].location), 1.0, 1e-12);
  ASSERT_EQ(zs.poles.size(), 1u);
  EXPECT_LT(std::abs(zs.poles[0].location), 1e-12);
}

TEST(Zeros, BoundaryNudge) {
  const auto zs = find_zeros(fn("exp[z] - 1"), 2 * kPi);
  EXPECT_GE(zs.nudge, 0);
  EXPECT_NEAR(zs.radius, 2 * kPi * (1 + std::ldexp(1e-3, -zs.nudge)), 1e-12);
  EXPECT_EQ(zs.zeros.size(), 3u);
}

TEST(Zeros, Deterministic) {
  const auto f = fn("exp[z] + exp[i*z] + exp[z^2]");
  const auto a = zeros_in_disk(f, 4), b = zeros_in_disk(f, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].location, b[k].location);
    if (k > 0) EXPECT_FALSE(zero_order(a[k], a[k - 1]));
  }
}

TEST(Counting, ClosedFormForUnitMinusOne) {
  const auto zs = zeros_in_disk(fn("exp[z] - 1"), 7);
  const double oracle = std::log(7.0) + 2 * std::log(7.0 / (2 * kPi));
  EXPECT_NEAR(counting_function(zs, 7), oracle, 1e-9);
  EXPECT_DOUBLE_EQ(counting_function(zs, 7, 1), counting_function(zs, 7));
  EXPECT_EQ(raw_count(zs, 7), 3);
}

TEST(Counting, TruncatedDoubleZeroAtUnitRadius) {
  const auto zs = zeros_in_disk(fn("(exp[z] - 1)^2"), 1);
  EXPECT_DOUBLE_EQ(counting_function(zs, 1, 1), 0.0);
}

TEST(Counting, MonotoneInRadiusAndLevel) {
  const auto f = fn("exp[z] + exp[i*z] + exp[z^2]");
  const auto samples = characteristic(f, make_grid(1, 4, 6, false), {1e-9, {1, 2, 3}});
  for (std::size_t k = 1; k < samples.size(); ++k) {
    EXPECT_GE(samples[k].T, samples[k - 1].T);
    EXPECT_GE(samples[k].N, samples[k - 1].N);
    for (int q : {1, 2, 3}) EXPECT_GE(samples[k].N_trunc.at(q), samples[k - 1].N_trunc.at(q));
  }
  for (const auto& s : samples) {
    EXPECT_LE(s.N_trunc.at(1), s.N_trunc.at(2));
    EXPECT_LE(s.N_trunc.at(2), s.N + 1e-12);
  }
}

TEST(Proximity, ClosedForms) {
  for (double r : {1.0, 5.0, 10.0}) EXPECT_NEAR(proximity_function(fn("exp[z]"), r), r / kPi, 1e-6 * r);
  for (double r : {1.0, 3.0}) EXPECT_NEAR(proximity_function(fn("exp[z^2]"), r), r * r / kPi, 1e-6 * r * r);
  EXPECT_EQ(proximity_function(fn("(1+i)/3"), 4), 0.0);
}

TEST(Characteristic, MapForms) {
  const auto one = fn("1"), e = fn("exp[z]"), g1 = fn("exp[z]"), g2 = fn("exp[i*z^2]");
  for (double r : {2.0, 6.0}) {
    EXPECT_NEAR(characteristic_map({one, e}, r), r / kPi, 1e-6 * r);
    const double tg = characteristic_map({one, g1, g2}, r);
    EXPECT_GE(tg + 1e-9, std::max(characteristic_value(g1, r), characteristic_value(g2, r)));
    EXPECT_LE(tg, characteristic_value(g1, r) + characteristic_value(g2, r) + 1e-9);
  }
}

TEST(Characteristic, PolesCountTowardT) {
  // T of 1/(z - 1/2) at r = 2 is log(2 / (1/2)) plus a vanishing proximity part.
  const auto f = fn("1/(z - 1/2)");
  EXPECT_NEAR(characteristic_value(f, 2), std::log(4.0) + proximity_function(f, 2), 1e-9);
  EXPECT_EQ(poles_in_disk(f, 2).size(), 1u);
}

TEST(GcdCounting, Examples) {
  const auto f = fn("exp[z] - 1");
  const double nf = counting_function(zeros_in_disk(f, 10), 10);
  EXPECT_NEAR(gcd_counting(f, fn("exp[2*z] - 1"), 10).value, nf, 1e-9);
  EXPECT_EQ(gcd_counting(f, fn("exp[z^2] + 1"), 10).value, 0.0);
  EXPECT_NEAR(gcd_counting(f, f, 10).value, nf, 1e-12);
}

TEST(Order, Estimates) {
  EXPECT_NEAR(order_estimate(fn("exp[z] - 1"), make_grid(4, 40, 8, true)), 1.0, 0.1);
  EXPECT_NEAR(order_estimate(fn("exp[z^2] + exp[z]"), make_grid(2, 8, 8, true)), 2.0, 0.1);
  EXPECT_NEAR(order_estimate(fn("3"), make_grid(2, 8, 8, true)), 0.0, 1e-12);
  EXPECT_THROW(order_estimate(fn("exp[z]"), make_grid(2, 8, 3, true)), std::exception);
}

TEST(Jensen, Consistency) {
  for (const char* text : {"exp[z] - 2", "exp[z] + exp[i*z] + exp[z^2]", "exp[z] - 1", "z^2 - exp[z]"}) {
    const auto j = jensen_check(fn(text), 5);
    EXPECT_LT(std::abs(j.difference()), 1e-4) << text;
  }
}

TEST(Grid, Spacing) {
  const auto lin = make_grid(1, 3, 5, false);
  EXPECT_EQ(lin, (std::vector<double>{1, 1.5, 2, 2.5, 3}));
  const auto geo = make_grid(1, 16, 5, true);
  for (std::size_t k = 0; k < geo.size(); ++k) EXPECT_NEAR(geo[k], std::pow(2.0, double(k)), 1e-12);
}

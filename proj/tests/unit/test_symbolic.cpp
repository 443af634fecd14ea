#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "builders.hpp"
#include "expnev/discriminant.hpp"
#include "expnev/jacobian.hpp"
#include "expnev/roots.hpp"
#include "expnev/separation.hpp"
#include "random_inputs.hpp"

using namespace expnev;
using expnev::testkit::basis;
using expnev::testkit::xpoly;
using expnev::testkit::ypoly_over;

namespace {

YPoly linear(const LaurentPoly& root) {
  return YPoly(root.arity(), {-root, LaurentPoly::constant(root.arity(), RatFunc(1))});
}

// F lifted to the refined basis and evaluated at g, exactly.
LaurentPoly substitute(const MonicYPoly& f, const ExtractedRoot& g) {
  return f.to_ypoly().map_coefficients([&](const LaurentPoly& c) { return c.rescale(g.refinement); }).evaluate(g.root);
}

std::set<std::string> rendered_roots(const std::vector<ExtractedRoot>& roots) {
  std::set<std::string> out;
  for (const auto& g : roots) out.insert(expr::render_laurent(g.root, g.basis));
  return out;
}

}  // namespace

TEST(Discriminant, QuadraticAndCubicExamples) {
  const LaurentPoly b = xpoly("z*x0 + 1", 1), c = xpoly("x0^2 - 3", 1);
  EXPECT_EQ(discriminant(MonicYPoly(1, {c, b})), b * b - c.scaled(RatFunc(4)));

  EXPECT_EQ(discriminant(MonicYPoly(1, {-xpoly("x0", 1), LaurentPoly(1)})), xpoly("4*x0", 1));

  const LaurentPoly p = xpoly("x0", 1), q = xpoly("z", 1);
  EXPECT_EQ(discriminant(MonicYPoly(1, {q, p, LaurentPoly(1)})), xpoly("-4*x0^3 - 27*z^2", 1));
}

TEST(Discriminant, CubicClosedFormOnRandomCoefficients) {
  testkit::RandomInputs rnd(41);
  for (int trial = 0; trial < 25; ++trial) {
    const LaurentPoly b = rnd.laurent(2, 2, -1, 1), c = rnd.laurent(2, 2, -1, 1), d = rnd.laurent(2, 2, -1, 1);
    const auto k = [](long v, const LaurentPoly& f) { return f.scaled(RatFunc(v)); };
    const LaurentPoly oracle = b * b * c * c - k(4, c * c * c) - k(4, b * b * b * d) - k(27, d * d) + k(18, b * c * d);
    EXPECT_EQ(discriminant(MonicYPoly(2, {d, c, b})), oracle) << trial;
  }
}

TEST(Discriminant, ResultantOfProductsOfLinearFactors) {
  testkit::RandomInputs rnd(42);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LaurentPoly> r, s;
    for (int k = 0; k < 2; ++k) r.push_back(rnd.laurent(1, 2, -1, 1));
    for (int k = 0; k < 3; ++k) s.push_back(rnd.laurent(1, 2, -1, 1));
    YPoly A = linear(r[0]) * linear(r[1]);
    YPoly B = linear(s[0]) * linear(s[1]) * linear(s[2]);
    LaurentPoly oracle = LaurentPoly::constant(1, RatFunc(1));
    for (const auto& ri : r)
      for (const auto& sj : s) oracle *= ri - sj;
    EXPECT_EQ(resultant(A, B), oracle) << trial;
  }
}

TEST(ShapeCheck, Examples) {
  const auto ok = monomial_shape_check(xpoly("4*z*x0", 1), {0});
  ASSERT_TRUE(ok.ok);
  EXPECT_EQ(ok.q, xpoly("4*z", 1));
  EXPECT_EQ(ok.exponents, std::vector<int>{1});

  const auto bad = monomial_shape_check(xpoly("x0^2 + 1", 1), {0});
  ASSERT_FALSE(bad.ok);
  EXPECT_EQ(bad.witness_var, 0u);
  auto w = bad.witness_exponents;
  std::sort(w.begin(), w.end());
  EXPECT_EQ(w, (std::vector<int>{0, 2}));

  const auto two = monomial_shape_check(xpoly("x0*x1 + x0", 2), {0});
  ASSERT_TRUE(two.ok);
  EXPECT_EQ(two.q, xpoly("x1 + 1", 2));
  EXPECT_EQ(two.exponents, std::vector<int>{1});
}

TEST(Separation, ShiftedSquareOverTwoZ) {
  const UnitBasis b = basis("2*z");
  const MonicYPoly F = ypoly_over("Y^2 - 2*z*Y + z^2 - exp[2*z]", b);
  const auto r = separate_variable(F, b, 0);
  EXPECT_EQ(r.t, mpq_class(-1, 2));
  EXPECT_EQ(r.s, mpq_class(1));
  EXPECT_EQ(r.k, 2);
  EXPECT_EQ(r.refined_basis, basis("z"));
  EXPECT_EQ(r.reduced, MonicYPoly(0, {LaurentPoly::constant(0, RatFunc(-1)), LaurentPoly(0)}));
  EXPECT_EQ(recompose(r), ypoly_over("Y^2 - 2*z*Y + z^2 - exp[2*z]", r.refined_basis));
}

TEST(Separation, PureSquare) {
  const UnitBasis b = basis("2*z");
  const auto r = separate_variable(ypoly_over("Y^2 - exp[2*z]", b), b, 0);
  EXPECT_EQ(r.t, mpq_class(-1, 2));
  EXPECT_TRUE(r.shift.is_zero());
  EXPECT_EQ(recompose(r), ypoly_over("Y^2 - exp[z]^2", r.refined_basis));
}

TEST(Separation, NonMonomialDiscriminantIsRejected) {
  const UnitBasis b = basis("z^2; z");
  const MonicYPoly F = ypoly_over("Y^2 - exp[z^2] - exp[z]", b);
  try {
    separate_variable(F, b, 0);
    FAIL() << "expected SeparationError";
  } catch (const SeparationError& e) {
    EXPECT_EQ(e.kind(), SeparationError::Kind::HypothesesUnmet);
  }
}

TEST(RatFuncRoots, Examples) {
  const auto lower = [](const std::string& t) { return expr::lower_ypoly(expr::parse_expression(t)).poly; };
  auto roots = ratfunc_roots(lower("Y^2 - z^2"));
  std::sort(roots.begin(), roots.end(), ratfunc_less);
  std::vector<RatFunc> want = {RatFunc::z(), -RatFunc::z()};
  std::sort(want.begin(), want.end(), ratfunc_less);
  EXPECT_EQ(roots, want);

  EXPECT_TRUE(ratfunc_roots(lower("Y^2 - z")).empty());

  roots = ratfunc_roots(lower("Y^2 - (2*z + 1)*Y + z^2 + z"));
  want = {RatFunc::z(), RatFunc::z() + RatFunc(1)};
  std::sort(roots.begin(), roots.end(), ratfunc_less);
  std::sort(want.begin(), want.end(), ratfunc_less);
  EXPECT_EQ(roots, want);
}

TEST(RatFuncRoots, RecoversPlantedRationalRoots) {
  testkit::RandomInputs rnd(43);
  for (int trial = 0; trial < 15; ++trial) {
    const RatFunc a = rnd.ratfunc(2), b = rnd.ratfunc(2);
    const LaurentPoly la = LaurentPoly::constant(0, a), lb = LaurentPoly::constant(0, b);
    const MonicYPoly F = MonicYPoly::from_ypoly(linear(la) * linear(lb) * YPoly(0, {LaurentPoly::constant(0, RatFunc::z()), LaurentPoly(0), LaurentPoly::constant(0, RatFunc(1))}));
    const auto roots = ratfunc_roots(F);
    EXPECT_TRUE(std::find(roots.begin(), roots.end(), a) != roots.end()) << trial;
    EXPECT_TRUE(std::find(roots.begin(), roots.end(), b) != roots.end()) << trial;
    for (const auto& g : roots) EXPECT_TRUE(g == a || g == b);
  }
}

TEST(Extraction, ShiftedSquare) {
  const UnitBasis b = basis("2*z");
  const MonicYPoly F = ypoly_over("Y^2 - 2*z*Y + z^2 - exp[2*z]", b);
  const auto roots = extract_exp_poly_roots(F, b);
  EXPECT_EQ(rendered_roots(roots), (std::set<std::string>{"z + exp[z]", "z - exp[z]"}));
  for (const auto& g : roots) {
    EXPECT_TRUE(g.verified);
    EXPECT_TRUE(substitute(F, g).is_zero());
  }
}

TEST(Extraction, IrrationalBaseCaseGivesNothing) {
  const UnitBasis b = basis("2*z; z^3");
  const MonicYPoly F = ypoly_over("Y^2 - 2*exp[z^3]*Y + exp[z^3]^2 - z*exp[2*z]", b);
  EXPECT_TRUE(extract_exp_poly_roots(F, b).empty());
}

TEST(Extraction, LinearInput) {
  const UnitBasis b = basis("z; i*z");
  const MonicYPoly F = ypoly_over("Y - exp[z] - z", b);
  const auto roots = extract_exp_poly_roots(F, b);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].root, testkit::over("exp[z] + z", b));
  EXPECT_TRUE(substitute(F, roots[0]).is_zero());
}

TEST(Jacobian, Examples) {
  EXPECT_EQ(jacobian_det({xpoly("x0", 2), xpoly("x1", 2)}), xpoly("1", 2));
  const LaurentPoly F1 = xpoly("x0^2", 2), F2 = xpoly("x0*x1 + x1^2", 2);
  EXPECT_EQ(jacobian_det({F1, F2}), xpoly("2*x0^2 + 4*x0*x1", 2));
  EXPECT_TRUE(euler_identity_holds(F1));
  EXPECT_TRUE(euler_identity_holds(F2));
  EXPECT_EQ(homogeneous_degree(F2), 2);
  EXPECT_THROW(euler_identity_holds(xpoly("x0^2 + x1", 2)), PreconditionError);
}

TEST(Jacobian, EulerIdentityOnRandomForms) {
  testkit::RandomInputs rnd(44);
  for (int trial = 0; trial < 30; ++trial) {
    const int deg = rnd.integer(1, 3);
    LaurentPoly f(3);
    for (int a = 0; a <= deg; ++a)
      for (int b = 0; a + b <= deg; ++b)
        if (rnd.integer(0, 1)) f.add_term({a, b, deg - a - b}, rnd.ratfunc());
    if (f.is_zero()) continue;
    LaurentPoly euler(3);
    for (std::size_t j = 0; j < 3; ++j) euler += f.partial(j) * LaurentPoly::variable(3, j);
    EXPECT_EQ(euler, f.scaled(RatFunc(deg)));
    EXPECT_TRUE(euler_identity_holds(f));
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <complex>

#include "expnev/zpoly.hpp"
#include "random_inputs.hpp"

using namespace expnev;

TEST(Gaussian, FieldLawsOnRandomValues) {
  testkit::RandomInputs rnd(11);
  for (int trial = 0; trial < 200; ++trial) {
    const GR a = rnd.gaussian(), b = rnd.gaussian(), c = rnd.gaussian();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(GR::from_string(a.str()), a);
  }
}

TEST(Gaussian, CanonicalText) {
  EXPECT_EQ(GR(mpq_class(1, 2), mpq_class(-1, 3)).str(), "(3-2i)/6");
  EXPECT_EQ(GR::i().str(), "i");
  EXPECT_EQ((GR::i() * GR::i()), GR(-1));
}

TEST(ZPoly, DivisionIdentity) {
  testkit::RandomInputs rnd(12);
  for (int trial = 0; trial < 100; ++trial) {
    const ZPoly a = rnd.zpoly(5), b = rnd.nonzero_zpoly(3);
    const auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
  }
}

TEST(ZPoly, GcdOfConstructedProducts) {
  testkit::RandomInputs rnd(13);
  for (int trial = 0; trial < 50; ++trial) {
    const ZPoly c = rnd.nonzero_zpoly(2).monic();
    const ZPoly a = rnd.nonzero_zpoly(2), b = rnd.nonzero_zpoly(2);
    const ZPoly g = gcd(a * c, b * c);
    EXPECT_TRUE((g.divmod(c).second).is_zero());
    EXPECT_TRUE(((a * c).divmod(g).second).is_zero());
    EXPECT_TRUE(((b * c).divmod(g).second).is_zero());
  }
}

TEST(ZPoly, GaussianRationalRootsOfConstructedProduct) {
  const GR r1(mpq_class(1, 2), mpq_class(1)), r2(-3), r3(mpq_class(0), mpq_class(-2, 3));
  const ZPoly p = ZPoly{-r1, GR(1)} * ZPoly{-r2, GR(1)} * ZPoly{-r3, GR(1)} * ZPoly{GR(-2), GR(0), GR(1)};
  auto roots = zpoly::gaussian_rational_roots(p);
  std::vector<GR> expected = {r1, r2, r3};
  std::sort(roots.begin(), roots.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(roots, expected);
}

TEST(ZPoly, NumericRootsMatchConstruction) {
  const std::vector<std::complex<long double>> want = {{1, 2}, {-0.5L, 0}, {0, -3}, {2, 2}};
  std::vector<std::complex<long double>> coeffs = {1};
  for (const auto& r : want) {
    std::vector<std::complex<long double>> next(coeffs.size() + 1, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= r * coeffs[k];
    }
    coeffs = next;
  }
  const auto got = zpoly::numeric_roots(coeffs);
  ASSERT_EQ(got.size(), want.size());
  for (const auto& w : want) {
    const auto best = std::min_element(got.begin(), got.end(), [&](auto a, auto b) { return std::abs(a - w) < std::abs(b - w); });
    EXPECT_LT(std::abs(*best - w), 1e-12L);
  }
}

TEST(ZPoly, RenderAndTaylorShift) {
  const ZPoly p{GR(1), GR(0), GR(1)};  // 1 + z^2
  EXPECT_EQ(zpoly::render(p), "z^2 + 1");
  // (z + 2)^2 + 1 = z^2 + 4z + 5
  EXPECT_EQ(zpoly::taylor_shift(p, GR(2)), (ZPoly{GR(5), GR(4), GR(1)}));
}

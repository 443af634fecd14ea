#include <gtest/gtest.h>

#include <functional>

#include "builders.hpp"
#include "expnev/serialize.hpp"
#include "random_inputs.hpp"

using namespace expnev;
using Kind = expr::Node::Kind;

namespace {

void expect_nested_spans(const expr::Node& n) {
  EXPECT_LE(n.begin, n.end);
  for (const auto& c : n.children) {
    EXPECT_LE(n.begin, c.begin);
    EXPECT_LE(c.end, n.end);
    expect_nested_spans(c);
  }
}

// Random well-formed text over the grammar: sums, products, quotients,
// integer powers, exp of z-polynomials and Gaussian literals.
std::string random_text(testkit::RandomInputs& rnd, int depth) {
  const int pick = depth <= 0 ? rnd.integer(0, 2) : rnd.integer(0, 6);
  switch (pick) {
    case 0: return std::to_string(rnd.integer(1, 9));
    case 1: return "z";
    case 2: return "exp[" + std::to_string(rnd.integer(1, 3)) + "*z^" + std::to_string(rnd.integer(1, 2)) + "]";
    case 3: return random_text(rnd, depth - 1) + " + " + random_text(rnd, depth - 1);
    case 4: return random_text(rnd, depth - 1) + " * " + random_text(rnd, depth - 1);
    case 5: return "(" + random_text(rnd, depth - 1) + ")^" + std::to_string(rnd.integer(0, 3));
    default: return "(" + random_text(rnd, depth - 1) + ") - (2+i)/3*" + random_text(rnd, depth - 1);
  }
}

}  // namespace

TEST(Parse, Examples) {
  const auto e = expr::parse_expression("exp[z]");
  EXPECT_EQ(e.kind, Kind::ExpUnit);
  EXPECT_EQ(e.poly, zpoly::z());

  const auto s = expr::parse_expression("(1+2i)/3 * z^2 + exp[(1+i)*z^2]");
  ASSERT_EQ(s.kind, Kind::Sum);
  ASSERT_EQ(s.children.size(), 2u);
  const auto& prod = s.children[0];
  ASSERT_EQ(prod.kind, Kind::Product);
  EXPECT_EQ(prod.children[0].kind, Kind::Literal);
  EXPECT_EQ(prod.children[0].value, GR(mpq_class(1, 3), mpq_class(2, 3)));
  EXPECT_EQ(prod.children[1].poly, (ZPoly{GR(0), GR(0), GR(1)}));
  ASSERT_EQ(s.children[1].kind, Kind::ExpUnit);
  EXPECT_EQ(s.children[1].poly, (ZPoly{GR(0), GR(0), GR(1, 1)}));
  expect_nested_spans(s);
}

TEST(Parse, ErrorsCarryOffsets) {
  try {
    expr::parse_expression("exp[z^y]");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
  try {
    expr::parse_expression("z + * 2");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(expr::parse_expression("z^(1/2)"), SyntaxError);
  EXPECT_THROW(expr::parse_expression(""), SyntaxError);
}

TEST(Parse, RenderRoundTrip) {
  testkit::RandomInputs rnd(51);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string text = random_text(rnd, 3);
    const auto ast = expr::parse_expression(text);
    const auto again = expr::parse_expression(expr::render(ast));
    EXPECT_EQ(expr::render(again), expr::render(ast)) << text;
    EXPECT_EQ(again.kind, ast.kind) << text;
    expect_nested_spans(ast);
  }
}

TEST(Lower, Examples) {
  const auto a = testkit::lowered("exp[z] + exp[2*z]");
  EXPECT_EQ(a.basis, testkit::basis("z"));
  EXPECT_EQ(a.poly, testkit::xpoly("x0 + x0^2", 1));

  const auto b = testkit::lowered("z^2 * exp[z^2] + 1/z");
  EXPECT_EQ(b.basis, testkit::basis("z^2"));
  EXPECT_EQ(b.poly.coefficient({1}), RatFunc(ZPoly{GR(0), GR(0), GR(1)}));
  EXPECT_EQ(b.poly.coefficient({0}), RatFunc(ZPoly{GR(1)}, zpoly::z()));

  EXPECT_THROW(testkit::lowered("exp[z+1]"), LoweringError);
}

TEST(Lower, IdempotentUnderRendering) {
  testkit::RandomInputs rnd(52);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string text = random_text(rnd, 3);
    const auto first = testkit::lowered(text);
    if (first.basis.empty()) continue;
    const auto second = testkit::lowered(expr::render_laurent(first.poly, first.basis));
    EXPECT_EQ(second.basis, first.basis) << text;
    EXPECT_EQ(second.poly, first.poly) << text;
  }
}

TEST(Lower, BasisIsMinimal) {
  testkit::RandomInputs rnd(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto l = testkit::lowered(random_text(rnd, 3));
    EXPECT_TRUE(l.basis.certified());
    const auto& fs = l.basis.frequencies();
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = 0; j < fs.size(); ++j) {
        if (i == j) continue;
        const GR ratio = fs[i].leading() / fs[j].leading();
        EXPECT_FALSE(fs[j].scaled(ratio) == fs[i]);
      }
  }
}

TEST(Serialize, StableCanonicalForm) {
  const auto l = testkit::lowered("z^2 * exp[z^2] + 1/z");
  EXPECT_EQ(canonical_dump(laurent_to_json(l.poly)),
            R"([{"den":["0","1"],"exponents":[0],"num":["1"]},{"den":["1"],"exponents":[1],"num":["0","0","1"]}])");
  EXPECT_EQ(canonical_dump(basis_to_json(l.basis)), R"([["0","0","1"]])");
}

TEST(Serialize, RoundTrips) {
  testkit::RandomInputs rnd(54);
  for (int trial = 0; trial < 50; ++trial) {
    const LaurentPoly f = rnd.laurent(2, 4, -2, 2);
    EXPECT_EQ(laurent_from_json(laurent_to_json(f), 2), f);
    const UnitBasis b = rnd.independent_basis(2);
    EXPECT_EQ(basis_from_json(basis_to_json(b)), b);
    const ZPoly p = rnd.zpoly(4);
    EXPECT_EQ(zpoly_from_json(zpoly_to_json(p)), p);
  }
}

#include "expnev/separation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "expnev/discriminant.hpp"

namespace expnev {

namespace {

MonicYPoly map_lower(const MonicYPoly& f, std::size_t arity, auto&& fn) {
  std::vector<LaurentPoly> out;
  for (const auto& c : f.lower()) out.push_back(fn(c));
  return MonicYPoly(arity, std::move(out));
}

// Part of p whose exponent in variable j is nonzero.
LaurentPoly moving_part(const LaurentPoly& p, std::size_t j) {
  LaurentPoly out(p.arity());
  for (const auto& [e, c] : p.terms())
    if (e[j] != 0) out.add_term(e, c);
  return out;
}

// Tries one t = a/d; returns P over the refined ring (still arity n) when u_j-free.
std::optional<SeparationResult> try_candidate(const MonicYPoly& f, const UnitBasis& basis, std::size_t j, int a) {
  const int d = f.degree();
  const std::size_t n = f.arity();
  const mpq_class t(a, d);
  mpq_class tc = t;
  tc.canonicalize();
  const int k = static_cast<int>(tc.get_den().get_si());
  const int T = static_cast<int>(tc.get_num().get_si());

  const MonicYPoly fr = map_lower(f, n, [&](const LaurentPoly& c) { return c.scale_variable(j, k); });
  const LaurentPoly vt = LaurentPoly::variable(n, j, T);
  const LaurentPoly shift = moving_part(vt * fr.coeff(d - 1), j).scaled(RatFunc(GR(mpq_class(1, d))));

  const LaurentPoly vinv = LaurentPoly::variable(n, j, -T);
  YPoly p = fr.to_ypoly().compose_linear(vinv, -(vinv * shift)).scaled(LaurentPoly::variable(n, j, T * d));
  if (p.degree() != d) return std::nullopt;
  for (const auto& c : p.coeffs())
    if (c.depends_on(j)) return std::nullopt;

  SeparationResult r{
      .s = -t * d,
      .t = tc,
      .var = j,
      .k = k,
      .shift = shift,
      .reduced = MonicYPoly::from_ypoly(p.map_coefficients([&](const LaurentPoly& c) { return c.remove_variable(j); })),
      .refined_basis = basis.refined(j, k),
      .reduced_basis = basis.refined(j, k).without(j),
  };
  r.s.canonicalize();
  return r;
}

}  // namespace

int SeparationResult::s_refined() const {
  mpq_class v = s * k;
  v.canonicalize();
  return static_cast<int>(v.get_num().get_si());
}

int SeparationResult::t_refined() const {
  mpq_class v = t * k;
  v.canonicalize();
  return static_cast<int>(v.get_num().get_si());
}

ShapeCheck monomial_shape_check(const LaurentPoly& delta, const std::vector<std::size_t>& block) {
  if (delta.is_zero()) throw PreconditionError("monomial_shape_check: zero input");
  ShapeCheck out;
  Exponent shift(delta.arity(), 0);
  for (std::size_t j : block) {
    if (j >= delta.arity()) throw std::invalid_argument("monomial_shape_check: variable out of range");
    const auto ex = delta.exponents_of(j);
    if (ex.size() > 1) {
      out.witness_var = j;
      out.witness_exponents = {ex.front(), ex.back()};
      return out;
    }
    out.exponents.push_back(ex.front());
    shift[j] = -ex.front();
  }
  out.ok = true;
  out.q = delta.shifted(shift);
  return out;
}

int separation_search_bound(const MonicYPoly& f, std::size_t j) {
  const int d = f.degree();
  int bound = 0;
  for (int i = 0; i < d; ++i) {
    const auto ex = f.coeff(i).exponents_of(j);
    if (ex.empty()) continue;
    // The span alone misses pure powers such as Y^2 - u^4, so the largest
    // absolute exponent also enters.
    const int reach = std::max({ex.back() - ex.front(), std::abs(ex.front()), std::abs(ex.back())});
    const int m = d - i;
    bound = std::max(bound, (reach + m - 1) / m);
  }
  return bound + 1;
}

SeparationResult separate_variable(const MonicYPoly& f, const UnitBasis& basis, std::size_t j) {
  if (f.arity() != basis.size()) throw std::invalid_argument("separate_variable: arity does not match basis");
  if (j >= f.arity()) throw std::invalid_argument("separate_variable: variable out of range");
  using Kind = SeparationError::Kind;
  const LaurentPoly delta = discriminant(f);
  if (delta.is_zero()) throw SeparationError(Kind::HypothesesUnmet, "discriminant is zero");
  const auto shape = monomial_shape_check(delta, {j});
  if (!shape.ok)
    throw SeparationError(Kind::HypothesesUnmet, "discriminant is not a monomial in variable " + std::to_string(j) +
                                                     " (exponents " + std::to_string(shape.witness_exponents[0]) +
                                                     " and " + std::to_string(shape.witness_exponents[1]) + ")");

  const int d = f.degree();
  const int limit = separation_search_bound(f, j) * d;
  std::vector<mpq_class> rejected;
  for (int m = 0; m <= limit; ++m) {
    for (int a : {-m, m}) {
      if (auto r = try_candidate(f, basis, j, a)) return *std::move(r);
      mpq_class t(a, d);
      t.canonicalize();
      rejected.push_back(t);
      if (m == 0) break;
    }
  }
  throw SeparationError(Kind::SearchBoundExceeded,
                        "no separating exponent t with |t| <= " + std::to_string(limit / d), std::move(rejected));
}

MonicYPoly recompose(const SeparationResult& r) {
  const std::size_t n = r.refined_basis.size();
  const std::size_t j = r.var;
  std::vector<LaurentPoly> lifted;
  for (const auto& c : r.reduced.lower()) lifted.push_back(c.insert_variable(j));
  const YPoly p = MonicYPoly(n, std::move(lifted)).to_ypoly();
  const YPoly out = p.compose_linear(LaurentPoly::variable(n, j, r.t_refined()), r.shift)
                        .scaled(LaurentPoly::variable(n, j, r.s_refined()));
  return MonicYPoly::from_ypoly(out);
}

}  // namespace expnev

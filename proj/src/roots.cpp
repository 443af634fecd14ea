#include "expnev/roots.hpp"

#include <algorithm>

#include "expnev/algebra.hpp"
#include "expnev/discriminant.hpp"

namespace expnev {

namespace {

using KPoly = UPoly<RatFunc>;

ZPoly lcm(const ZPoly& a, const ZPoly& b) { return (a * b).divmod(gcd(a, b)).first.monic(); }

// G(x, h) mod x^len with G given by its Y-coefficients (in x).
ZPoly eval_truncated(const std::vector<ZPoly>& g, const ZPoly& h, std::size_t len) {
  ZPoly acc;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = (acc * h).truncated(len) + it->truncated(len);
  return acc;
}

bool is_root(const std::vector<ZPoly>& g, const ZPoly& h) {
  ZPoly acc;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * h + *it;
  return acc.is_zero();
}

// c = 0, 1, -1, 2, -2, ... with G(c, Y) square-free in Y.
GR good_shift(const std::vector<ZPoly>& g) {
  for (long m = 0;; ++m) {
    for (long c : {m, -m}) {
      std::vector<GR> vals;
      for (const auto& gi : g) vals.push_back(gi.evaluate(GR(c)));
      const ZPoly p(vals);
      if (gcd(p, p.derivative()).degree() == 0) return GR(c);
      if (m == 0) break;
    }
  }
}

}  // namespace

std::vector<RatFunc> ratfunc_roots(const MonicYPoly& f) {
  if (f.arity() != 0) throw PreconditionError("ratfunc_roots: coefficients must be free of units");
  std::vector<RatFunc> fc;
  for (const auto& a : f.lower()) fc.push_back(a.constant_term());
  fc.emplace_back(1);
  const KPoly full(fc);
  const KPoly sq = full.divmod(gcd(full, full.derivative())).first.monic();
  const int d = sq.degree();

  // G(Y) = D^d sq(Y / D) has polynomial coefficients; its roots in Q(i)(z) are
  // polynomials h, and the roots of sq are h / D.
  ZPoly den = ZPoly::constant(GR(1));
  for (const auto& a : sq.coeffs()) den = lcm(den, a.den());
  std::vector<ZPoly> g(static_cast<std::size_t>(d) + 1);
  ZPoly dpow = ZPoly::constant(GR(1));
  for (int i = d; i >= 0; --i) {
    const RatFunc& a = sq.coeffs()[static_cast<std::size_t>(i)];
    g[static_cast<std::size_t>(i)] = a.num() * dpow.divmod(a.den()).first;
    dpow = dpow * den;
  }
  int bound = 0;
  for (int i = 0; i < d; ++i) {
    const int deg = g[static_cast<std::size_t>(i)].degree();
    if (deg > 0) bound = std::max(bound, (deg + (d - i) - 1) / (d - i));
  }

  // Lift each root of G(c, Y) to a power series in x = z - c up to the degree
  // bound; a polynomial root must coincide with its (unique) lift.
  const GR c = good_shift(g);
  std::vector<ZPoly> gs;
  std::vector<GR> g0;
  for (const auto& gi : g) {
    gs.push_back(zpoly::taylor_shift(gi, c));
    g0.push_back(gs.back().coeff(0));
  }
  const ZPoly base(g0);
  const ZPoly dbase = base.derivative();

  std::vector<RatFunc> out;
  for (const GR& y0 : zpoly::gaussian_rational_roots(base)) {
    const GR slope = dbase.evaluate(y0);
    std::vector<GR> h{y0};
    for (int k = 1; k <= bound; ++k) {
      const ZPoly e = eval_truncated(gs, ZPoly(h), static_cast<std::size_t>(k) + 1);
      h.push_back(-e.coeff(static_cast<std::size_t>(k)) / slope);
    }
    const ZPoly hz = zpoly::taylor_shift(ZPoly(h), -c);
    if (is_root(g, hz)) out.emplace_back(hz, den);
  }
  std::sort(out.begin(), out.end(), ratfunc_less);
  return out;
}

namespace {

MonicYPoly rescaled(const MonicYPoly& f, const std::vector<int>& factors) {
  std::vector<LaurentPoly> out;
  for (const auto& c : f.lower()) out.push_back(c.rescale(factors));
  return MonicYPoly(f.arity(), std::move(out));
}

std::vector<ExtractedRoot> extract_rec(const MonicYPoly& f, const UnitBasis& basis) {
  using Kind = ExtractionError::Kind;
  const LaurentPoly delta = discriminant(f);
  if (delta.is_zero()) throw ExtractionError(Kind::HypothesisFailure, "discriminant is zero");
  if (!is_squarefree(delta)) throw ExtractionError(Kind::HypothesisFailure, "discriminant is not square-free");

  if (f.arity() == 0) {
    std::vector<ExtractedRoot> out;
    for (const auto& r : ratfunc_roots(f)) out.push_back({LaurentPoly::constant(0, r), basis, {}, false});
    return out;
  }

  std::optional<std::size_t> var;
  for (std::size_t j : basis.peeling_order()) {
    if (monomial_shape_check(delta, {j}).ok) {
      var = j;
      break;
    }
  }
  if (!var) throw ExtractionError(Kind::NoPeelableVariable, "discriminant is not a monomial in any single unit");
  const std::size_t j = *var;
  const std::size_t n = f.arity();

  const SeparationResult sep = separate_variable(f, basis, j);
  std::vector<ExtractedRoot> out;
  for (auto& w : extract_rec(sep.reduced, sep.reduced_basis)) {
    std::vector<int> rel = w.refinement;
    rel.insert(rel.begin() + static_cast<std::ptrdiff_t>(j), 1);
    const LaurentPoly shift = sep.shift.rescale(rel);
    const LaurentPoly g =
        (w.root.insert_variable(j) - shift) * LaurentPoly::variable(n, j, -sep.t_refined());
    std::vector<int> total = w.refinement;
    total.insert(total.begin() + static_cast<std::ptrdiff_t>(j), sep.k);
    out.push_back({g, w.basis.with_inserted(j, sep.refined_basis.frequency(j)), std::move(total), false});
  }
  return out;
}

}  // namespace

std::vector<ExtractedRoot> extract_exp_poly_roots(const MonicYPoly& f, const UnitBasis& basis) {
  if (f.arity() != basis.size()) throw std::invalid_argument("extract_exp_poly_roots: arity does not match basis");
  if (!basis.certified()) throw PreconditionError("extract_exp_poly_roots: basis units are not independent");
  auto roots = extract_rec(f, basis);
  for (auto& r : roots) {
    const YPoly p = rescaled(f, r.refinement).to_ypoly();
    if (!p.evaluate(r.root).is_zero()) throw std::logic_error("extract_exp_poly_roots: recomposed root does not satisfy F");
    r.verified = true;
  }
  return roots;
}

}  // namespace expnev

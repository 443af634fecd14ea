#include "expnev/algebra.hpp"

#include <algorithm>
#include <map>

#include "expnev/errors.hpp"

namespace expnev {

namespace detail {

MPoly to_mpoly(const LaurentPoly& f) {
  const std::size_t n = f.arity();
  MPoly out(n + 1);
  if (f.is_zero()) return out;
  ZPoly lcm = ZPoly::constant(GR(1));
  for (const auto& [e, c] : f.terms()) {
    if (c.den().degree() == 0) continue;
    lcm = lcm * c.den().divmod(gcd(lcm, c.den())).first;
  }
  const Exponent mins = f.min_exponents();
  MPoly::Monomial m(n + 1);
  for (const auto& [e, c] : f.terms()) {
    ZPoly num = c.num() * lcm.divmod(c.den()).first;
    for (std::size_t k = 0; k < n; ++k) m[k + 1] = e[k] - mins[k];
    for (int d = 0; d <= num.degree(); ++d) {
      m[0] = d;
      out.add_term(m, num.coeffs()[static_cast<std::size_t>(d)]);
    }
  }
  return out;
}

LaurentPoly from_mpoly(const MPoly& p) {
  const std::size_t n = p.nvars() - 1;
  std::map<Exponent, std::vector<GR>> grouped;
  for (const auto& [m, c] : p.terms()) {
    Exponent e(m.begin() + 1, m.end());
    auto& v = grouped[e];
    if (v.size() <= static_cast<std::size_t>(m[0])) v.resize(static_cast<std::size_t>(m[0]) + 1, GR(0));
    v[static_cast<std::size_t>(m[0])] = c;
  }
  LaurentPoly out(n);
  for (auto& [e, v] : grouped) out.add_term(e, RatFunc(ZPoly(std::move(v))));
  return out;
}

MPoly remove_z_content(const MPoly& p) {
  if (p.is_zero()) return p;
  std::map<MPoly::Monomial, std::vector<GR>> grouped;
  for (const auto& [m, c] : p.terms()) {
    MPoly::Monomial x = m;
    x[0] = 0;
    auto& v = grouped[x];
    if (v.size() <= static_cast<std::size_t>(m[0])) v.resize(static_cast<std::size_t>(m[0]) + 1, GR(0));
    v[static_cast<std::size_t>(m[0])] = c;
  }
  ZPoly g;
  for (auto& [x, v] : grouped) {
    g = gcd(g, ZPoly(v));
    if (g.degree() == 0) break;
  }
  if (g.degree() <= 0) return p.monic();
  MPoly out(p.nvars());
  for (auto& [x, v] : grouped) {
    ZPoly q = ZPoly(v).divmod(g).first;
    MPoly::Monomial m = x;
    for (int d = 0; d <= q.degree(); ++d) {
      m[0] = d;
      out.add_term(m, q.coeffs()[static_cast<std::size_t>(d)]);
    }
  }
  return out.monic();
}

}  // namespace detail

namespace {

bool has_x_variable(const MPoly& p) {
  for (std::size_t v = 1; v < p.nvars(); ++v)
    if (p.has_variable(v)) return true;
  return false;
}

MPoly exact(const MPoly& a, const MPoly& b) {
  auto q = mpoly_divexact(a, b);
  if (!q) throw std::logic_error("squarefree: expected exact division");
  return *std::move(q);
}

// Yun's algorithm in variable v for p primitive in v; appends (a_i, i).
void yun(const MPoly& p, std::size_t v, std::map<int, MPoly>& blocks) {
  MPoly dp = p.derivative(v);
  MPoly b = mpoly_gcd(p, dp);
  MPoly c = exact(p, b);
  MPoly d = exact(dp, b) - c.derivative(v);
  int i = 1;
  while (c.degree(v) > 0) {
    MPoly a = mpoly_gcd(c, d);
    if (a.degree(v) > 0) {
      auto [it, inserted] = blocks.try_emplace(i, a);
      if (!inserted) it->second = it->second * a;
    }
    c = exact(c, a);
    d = exact(d, a) - c.derivative(v);
    ++i;
  }
}

void squarefree_rec(const MPoly& p, std::map<int, MPoly>& blocks) {
  if (!has_x_variable(p)) return;
  std::size_t v = 1;
  while (!p.has_variable(v)) ++v;
  MPoly c = mpoly_content(p, v);
  yun(exact(p, c), v, blocks);
  squarefree_rec(c, blocks);
}

}  // namespace

LaurentPoly SquarefreeDecomposition::reassemble() const {
  LaurentPoly acc = unit;
  for (const auto& [s, k] : factors) acc *= s.pow(static_cast<unsigned>(k));
  return acc;
}

LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.arity() != g.arity()) throw std::invalid_argument("laurent_gcd: arity mismatch");
  if (f.is_zero() && g.is_zero()) throw PreconditionError("laurent_gcd: both arguments are zero");
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  MPoly p = mpoly_gcd(detail::to_mpoly(f), detail::to_mpoly(g));
  if (!has_x_variable(p)) return LaurentPoly::constant(f.arity(), RatFunc(1));
  return detail::from_mpoly(detail::remove_z_content(p)).normalized();
}

SquarefreeDecomposition squarefree_decompose(const LaurentPoly& f) {
  if (f.is_zero()) throw PreconditionError("squarefree_decompose: zero input");
  std::map<int, MPoly> blocks;
  squarefree_rec(detail::remove_z_content(detail::to_mpoly(f)), blocks);
  SquarefreeDecomposition out;
  LaurentPoly product = LaurentPoly::constant(f.arity(), RatFunc(1));
  for (const auto& [k, block] : blocks) {
    LaurentPoly s = detail::from_mpoly(detail::remove_z_content(block)).normalized();
    if (s.is_constant()) continue;
    product *= s.pow(static_cast<unsigned>(k));
    out.factors.emplace_back(std::move(s), k);
  }
  out.unit = laurent_divexact(f, product);
  if (!out.unit.is_monomial()) throw std::logic_error("squarefree_decompose: cofactor is not a monomial unit");
  return out;
}

bool is_squarefree(const LaurentPoly& f) {
  const auto d = squarefree_decompose(f);
  return std::all_of(d.factors.begin(), d.factors.end(), [](const auto& p) { return p.second == 1; });
}

LaurentPoly derivation_Du(const LaurentPoly& f, const UnitBasis& basis) {
  if (f.arity() != basis.size()) throw std::invalid_argument("derivation_Du: arity does not match basis");
  std::vector<RatFunc> log_derivs;
  for (const auto& q : basis.frequencies()) log_derivs.emplace_back(q.derivative());
  LaurentPoly out(f.arity());
  for (const auto& [e, a] : f.terms()) {
    RatFunc s(0);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) s += log_derivs[j] * RatFunc(static_cast<long>(e[j]));
    out.add_term(e, a.derivative() + a * s);
  }
  return out;
}

CriticalPair critical_pair(const LaurentPoly& f, const UnitBasis& basis) {
  if (f.is_zero() || f.is_monomial()) throw PreconditionError("critical_pair: input is a monomial unit");
  const auto dec = squarefree_decompose(f);
  const std::size_t n = f.arity();
  CriticalPair out{LaurentPoly::constant(n, RatFunc(1)), LaurentPoly(n), LaurentPoly(n)};
  for (const auto& [s, k] : dec.factors) out.radical *= s;
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    LaurentPoly term = derivation_Du(dec.factors[i].first, basis).scaled(RatFunc(dec.factors[i].second));
    for (std::size_t j = 0; j < dec.factors.size(); ++j)
      if (j != i) term *= dec.factors[j].first;
    out.companion += term;
  }
  out.gcd = laurent_gcd(out.radical, out.companion);
  return out;
}

}  // namespace expnev

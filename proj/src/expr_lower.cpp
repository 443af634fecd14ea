#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "expnev/errors.hpp"
#include "expnev/expr.hpp"

namespace expnev::expr {

namespace {

using Kind = Node::Kind;

// A term c(z) * exp(F(z)) * Y^a * x0^b * ... ; vars holds [Y, x0, x1, ...]
// without trailing zeros.
struct Key {
  expnev::ZPoly freq;
  std::vector<int> vars;
};

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const {
    if (a.freq != b.freq) return zpoly::less(a.freq, b.freq);
    return a.vars < b.vars;
  }
};

using Value = std::map<Key, RatFunc, KeyLess>;

void trim(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void add_to(Value& acc, const Key& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Value constant(const RatFunc& c) {
  Value v;
  add_to(v, Key{}, c);
  return v;
}

Value add(Value a, const Value& b) {
  for (const auto& [k, c] : b) add_to(a, k, c);
  return a;
}

Value negate(Value a) {
  for (auto& [k, c] : a) c = -c;
  return a;
}

Value multiply(const Value& a, const Value& b) {
  Value out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      Key k{ka.freq + kb.freq, ka.vars};
      if (kb.vars.size() > k.vars.size()) k.vars.resize(kb.vars.size(), 0);
      for (std::size_t j = 0; j < kb.vars.size(); ++j) k.vars[j] += kb.vars[j];
      trim(k.vars);
      add_to(out, k, ca * cb);
    }
  }
  return out;
}

std::optional<Value> inverse(const Value& a) {
  if (a.size() == 1) {
    const auto& [k, c] = *a.begin();
    Key inv{-k.freq, k.vars};
    for (int& e : inv.vars) e = -e;
    return Value{{inv, RatFunc(1) / c}};
  }
  // Several terms: only a rational function of z can be inverted.
  for (const auto& [k, c] : a)
    if (!k.freq.is_zero() || !k.vars.empty()) return std::nullopt;
  RatFunc s(0);
  for (const auto& [k, c] : a) s += c;
  return constant(RatFunc(1) / s);
}

Value power(const Value& base, int e, const Node& where) {
  Value b = base;
  if (e < 0) {
    if (base.empty()) throw LoweringError("zero raised to a negative power at offset " + std::to_string(where.begin));
    auto inv = inverse(base);
    if (!inv)
      throw LoweringError("negative power of an expression that is not a unit at offset " +
                          std::to_string(where.begin));
    b = *inv;
    e = -e;
  }
  Value acc = constant(RatFunc(1));
  for (int k = 0; k < e; ++k) acc = multiply(acc, b);
  return acc;
}

Value evaluate(const Node& n) {
  switch (n.kind) {
    case Kind::Integer:
    case Kind::Literal:
      return constant(RatFunc(n.value));
    case Kind::ZPoly:
      return constant(RatFunc(n.poly));
    case Kind::Variable: {
      Key k;
      if (n.name == "Y") {
        k.vars = {1};
      } else {
        const int idx = std::stoi(n.name.substr(1));
        k.vars.assign(static_cast<std::size_t>(idx) + 2, 0);
        k.vars.back() = 1;
      }
      return Value{{k, RatFunc(1)}};
    }
    case Kind::ExpUnit: {
      if (!n.poly.coeff(0).is_zero())
        throw LoweringError("exp argument has nonzero constant term " + n.poly.coeff(0).str() + " at offset " +
                            std::to_string(n.begin) + "; exp of a nonzero constant is not representable");
      if (n.poly.is_zero()) return constant(RatFunc(1));
      return Value{{Key{n.poly, {}}, RatFunc(1)}};
    }
    case Kind::Sum: {
      Value acc;
      for (const auto& c : n.children) acc = add(std::move(acc), evaluate(c));
      return acc;
    }
    case Kind::Product: {
      Value acc = constant(RatFunc(1));
      for (const auto& c : n.children) acc = multiply(acc, evaluate(c));
      return acc;
    }
    case Kind::Negate:
      return negate(evaluate(n.children[0]));
    case Kind::Quotient: {
      const Value den = evaluate(n.children[1]);
      if (den.empty()) throw LoweringError("division by zero at offset " + std::to_string(n.children[1].begin));
      auto inv = inverse(den);
      if (!inv)
        throw LoweringError("divisor at offset " + std::to_string(n.children[1].begin) +
                            " must be a single term or a rational function of z");
      return multiply(evaluate(n.children[0]), *inv);
    }
    case Kind::Power:
      return power(evaluate(n.children[0]), n.exponent, n);
  }
  return {};
}

// ---- frequency lattice ---------------------------------------------------

// Integer coordinates of rational vectors: columns are (re, im) of the
// z^D, ..., z^1 coefficients, highest degree first, so the echelon rows come
// out sorted by descending degree.
struct Lattice {
  int degree = 0;
  mpz_class scale = 1;
  std::vector<std::vector<mpz_class>> rows;  // Hermite normal form rows
  std::vector<std::size_t> pivots;
};

std::vector<mpq_class> columns(const expnev::ZPoly& q, int degree) {
  std::vector<mpq_class> v;
  for (int k = degree; k >= 1; --k) {
    const GR c = q.coeff(static_cast<std::size_t>(k));
    v.push_back(c.real());
    v.push_back(c.imag());
  }
  return v;
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Lattice hermite(const std::vector<expnev::ZPoly>& gens) {
  Lattice lat;
  for (const auto& g : gens) lat.degree = std::max(lat.degree, g.degree());
  for (const auto& g : gens)
    for (const auto& x : columns(g, lat.degree)) mpz_lcm(lat.scale.get_mpz_t(), lat.scale.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<std::vector<mpz_class>> m;
  for (const auto& g : gens) {
    std::vector<mpz_class> row;
    for (const auto& x : columns(g, lat.degree)) row.push_back(x.get_num() * (lat.scale / x.get_den()));
    m.push_back(std::move(row));
  }
  const std::size_t ncols = static_cast<std::size_t>(2 * lat.degree);
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
    while (true) {
      std::size_t best = m.size();
      for (std::size_t p = r; p < m.size(); ++p)
        if (sgn(m[p][col]) != 0 && (best == m.size() || abs(m[p][col]) < abs(m[best][col]))) best = p;
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool clean = true;
      for (std::size_t p = r + 1; p < m.size(); ++p) {
        if (sgn(m[p][col]) == 0) continue;
        const mpz_class q = floor_div(m[p][col], m[r][col]);
        for (std::size_t c = col; c < ncols; ++c) m[p][c] -= q * m[r][c];
        if (sgn(m[p][col]) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= m.size() || sgn(m[r][col]) == 0) continue;
    if (sgn(m[r][col]) < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t p = 0; p < r; ++p) {
      const mpz_class q = floor_div(m[p][col], m[r][col]);
      for (std::size_t c = col; c < ncols; ++c) m[p][c] -= q * m[r][c];
    }
    lat.pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  lat.rows = std::move(m);
  return lat;
}

expnev::ZPoly row_to_zpoly(const Lattice& lat, const std::vector<mpz_class>& row) {
  std::vector<GR> c(static_cast<std::size_t>(lat.degree) + 1, GR(0));
  for (int k = lat.degree; k >= 1; --k) {
    const std::size_t base = static_cast<std::size_t>(2 * (lat.degree - k));
    c[static_cast<std::size_t>(k)] = GR(mpq_class(row[base], lat.scale), mpq_class(row[base + 1], lat.scale));
  }
  for (auto& x : c) {
    mpq_class re = x.real(), im = x.imag();
    re.canonicalize();
    im.canonicalize();
    x = GR(re, im);
  }
  return expnev::ZPoly(std::move(c));
}

// Integer coordinates of q in the lattice rows; nullopt if q is outside.
std::optional<std::vector<int>> coordinates(const Lattice& lat, const expnev::ZPoly& q) {
  if (q.degree() > lat.degree) return std::nullopt;
  std::vector<mpz_class> v;
  for (const auto& x : columns(q, lat.degree)) {
    mpq_class s = x * lat.scale;
    s.canonicalize();
    if (s.get_den() != 1) return std::nullopt;
    v.push_back(s.get_num());
  }
  std::vector<int> out;
  for (std::size_t r = 0; r < lat.rows.size(); ++r) {
    const std::size_t col = lat.pivots[r];
    if (!mpz_divisible_p(v[col].get_mpz_t(), lat.rows[r][col].get_mpz_t())) return std::nullopt;
    const mpz_class c = v[col] / lat.rows[r][col];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * lat.rows[r][k];
    if (!c.fits_sint_p()) throw LoweringError("frequency coordinate too large");
    out.push_back(static_cast<int>(c.get_si()));
  }
  for (const auto& x : v)
    if (sgn(x) != 0) return std::nullopt;
  return out;
}

std::vector<expnev::ZPoly> frequencies_of(const std::vector<Value>& vals) {
  std::vector<expnev::ZPoly> out;
  for (const auto& v : vals)
    for (const auto& [k, c] : v)
      if (!k.freq.is_zero() && std::find(out.begin(), out.end(), k.freq) == out.end()) out.push_back(k.freq);
  std::sort(out.begin(), out.end(), zpoly::less);
  return out;
}

// Which variable slots a lowering accepts.
enum class Slots { None, YOnly, XOnly };

using CoordFn = std::function<std::vector<int>(const expnev::ZPoly&)>;

LaurentPoly assemble(const Value& v, std::size_t n, const CoordFn& coords, std::map<int, LaurentPoly>* by_y) {
  LaurentPoly out(n);
  for (const auto& [k, c] : v) {
    Exponent e = k.freq.is_zero() ? Exponent(n, 0) : coords(k.freq);
    if (by_y) {
      const int ypow = k.vars.empty() ? 0 : k.vars[0];
      auto it = by_y->try_emplace(ypow, LaurentPoly(n)).first;
      it->second.add_term(e, c);
    } else {
      out.add_term(e, c);
    }
  }
  return out;
}

void require_slots(const Value& v, Slots slots) {
  for (const auto& [k, c] : v) {
    if (k.vars.empty()) continue;
    if (slots == Slots::None) {
      throw LoweringError(k.vars.size() == 1 ? "unexpected variable Y" : "unexpected variable x" +
                                                                          std::to_string(k.vars.size() - 2));
    }
    if (slots == Slots::YOnly) {
      if (k.vars.size() > 1) throw LoweringError("unexpected variable x" + std::to_string(k.vars.size() - 2));
      if (k.vars[0] < 0) throw LoweringError("negative power of Y");
    }
    if (slots == Slots::XOnly && k.vars[0] != 0) throw LoweringError("unexpected variable Y");
  }
}

UnitBasis basis_from(const Lattice& lat) {
  std::vector<expnev::ZPoly> qs;
  for (const auto& r : lat.rows) qs.push_back(row_to_zpoly(lat, r));
  return UnitBasis(std::move(qs));
}

std::vector<int> lattice_coords(const Lattice& lat, const expnev::ZPoly& q) {
  auto c = coordinates(lat, q);
  if (!c) throw std::logic_error("frequency outside its own lattice");
  return *c;
}

// Coordinates over an arbitrary independent basis (columns of an exact solve).
std::vector<int> basis_coords(const UnitBasis& basis, const expnev::ZPoly& q) {
  std::vector<expnev::ZPoly> all = basis.frequencies();
  all.push_back(q);
  const auto dep = frequency_independence(all);
  if (dep.independent || sgn(dep.dependence.back()) == 0)
    throw LoweringError("frequency " + zpoly::render(q) + " is not in the span of the basis");
  // m_0 Q_0 + ... + m_{n-1} Q_{n-1} + m_n q = 0  =>  q = -sum m_j / m_n Q_j
  const mpz_class last = dep.dependence.back();
  std::vector<int> out;
  for (std::size_t j = 0; j + 1 < all.size(); ++j) {
    mpq_class c(-dep.dependence[j], last);
    c.canonicalize();
    if (c.get_den() != 1)
      throw LoweringError("frequency " + zpoly::render(q) + " is a non-integer combination of the basis");
    out.push_back(static_cast<int>(c.get_num().get_si()));
  }
  return out;
}

MonicYPoly to_monic(const Value& v, std::size_t n, const CoordFn& coords) {
  require_slots(v, Slots::YOnly);
  std::map<int, LaurentPoly> by_y;
  assemble(v, n, coords, &by_y);
  if (by_y.empty() || by_y.rbegin()->first < 1) throw LoweringError("polynomial in Y must have degree at least 1");
  const int d = by_y.rbegin()->first;
  const LaurentPoly& lead = by_y.rbegin()->second;
  if (!(lead.is_constant() && lead.constant_term().is_one())) throw LoweringError("polynomial in Y must be monic");
  std::vector<LaurentPoly> lower(static_cast<std::size_t>(d), LaurentPoly(n));
  for (auto& [k, c] : by_y)
    if (k < d) lower[static_cast<std::size_t>(k)] = c;
  return MonicYPoly(n, std::move(lower));
}

}  // namespace

LoweredMany lower_jointly(const std::vector<Node>& asts) {
  std::vector<Value> vals;
  for (const auto& a : asts) {
    vals.push_back(evaluate(a));
    require_slots(vals.back(), Slots::None);
  }
  const Lattice lat = hermite(frequencies_of(vals));
  const UnitBasis basis = basis_from(lat);
  LoweredMany out{{}, basis};
  auto coords = [&](const expnev::ZPoly& q) { return lattice_coords(lat, q); };
  for (const auto& v : vals) out.polys.push_back(assemble(v, basis.size(), coords, nullptr));
  return out;
}

Lowered lower_to_symbolic(const Node& ast) {
  auto many = lower_jointly({ast});
  return {std::move(many.polys[0]), std::move(many.basis)};
}

LoweredY lower_ypoly(const Node& ast) {
  const Value v = evaluate(ast);
  const Lattice lat = hermite(frequencies_of({v}));
  UnitBasis basis = basis_from(lat);
  auto coords = [&](const expnev::ZPoly& q) { return lattice_coords(lat, q); };
  return {to_monic(v, basis.size(), coords), std::move(basis)};
}

LaurentPoly lower_over(const Node& ast, const UnitBasis& basis) {
  const Value v = evaluate(ast);
  require_slots(v, Slots::None);
  auto coords = [&](const expnev::ZPoly& q) { return basis_coords(basis, q); };
  return assemble(v, basis.size(), coords, nullptr);
}

MonicYPoly lower_ypoly_over(const Node& ast, const UnitBasis& basis) {
  auto coords = [&](const expnev::ZPoly& q) { return basis_coords(basis, q); };
  return to_monic(evaluate(ast), basis.size(), coords);
}

LaurentPoly lower_xpoly(const Node& ast, std::size_t arity) {
  const Value v = evaluate(ast);
  require_slots(v, Slots::XOnly);
  std::size_t need = 0;
  for (const auto& [k, c] : v) {
    if (!k.freq.is_zero()) throw LoweringError("coefficients of a polynomial in x0..xn may not contain exp");
    if (k.vars.size() > 1) need = std::max(need, k.vars.size() - 1);
  }
  if (arity == 0) arity = need;
  if (need > arity) throw LoweringError("variable x" + std::to_string(need - 1) + " exceeds the declared arity");
  LaurentPoly out(arity);
  for (const auto& [k, c] : v) {
    Exponent e(arity, 0);
    for (std::size_t j = 1; j < k.vars.size(); ++j) e[j - 1] = k.vars[j];
    out.add_term(e, c);
  }
  return out;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(';', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string item(text.substr(start, stop - start));
    const auto b = item.find_first_not_of(" \t\n");
    const auto e = item.find_last_not_of(" \t\n");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    start = stop + 1;
  }
  return out;
}

UnitBasis parse_basis_list(std::string_view text) {
  std::vector<expnev::ZPoly> qs;
  for (const auto& item : split_list(text)) {
    const Node n = parse_expression(item);
    expnev::ZPoly q;
    if (n.kind == Kind::ExpUnit) {
      q = n.poly;
    } else {
      const Value v = evaluate(n);
      if (v.size() > 1 || (v.size() == 1 && (!v.begin()->first.freq.is_zero() || !v.begin()->first.vars.empty() ||
                                             !v.begin()->second.is_polynomial())))
        throw LoweringError("basis entry '" + item + "' must be exp[Q] or a polynomial Q in z");
      if (!v.empty()) q = v.begin()->second.num();
    }
    if (!q.coeff(0).is_zero()) throw LoweringError("basis entry '" + item + "' has a nonzero constant term");
    if (q.is_zero()) throw LoweringError("basis entry '" + item + "' is the zero frequency");
    qs.push_back(std::move(q));
  }
  if (qs.empty()) throw LoweringError("empty basis list");
  return UnitBasis(std::move(qs));
}

// ---- symbolic rendering -------------------------------------------------

namespace {

bool single_z_term(const expnev::ZPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs()) n += c.is_zero() ? 0 : 1;
  return n == 1;
}

// Text for c * mono, mono possibly empty.
std::string term_text(const RatFunc& c, const std::string& mono) {
  if (mono.empty()) {
    if (c.is_polynomial()) return zpoly::render(c.num());
    return "(" + zpoly::render(c.num()) + ")/(" + zpoly::render(c.den()) + ")";
  }
  if (c.is_one()) return mono;
  if (c == RatFunc(-1)) return "-" + mono;
  std::string coef;
  if (c.is_polynomial()) {
    coef = zpoly::render(c.num());
    if (!single_z_term(c.num()) || coef.find('/') != std::string::npos) coef = "(" + coef + ")";
  } else {
    coef = "(" + zpoly::render(c.num()) + ")/(" + zpoly::render(c.den()) + ")";
  }
  return coef + " * " + mono;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (terms[k][0] == '-')
      out += " - " + terms[k].substr(1);
    else
      out += " + " + terms[k];
  }
  return out;
}

std::string unit_power(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

std::string render_laurent(const LaurentPoly& f, const UnitBasis& basis) {
  if (f.arity() != basis.size()) throw std::invalid_argument("render_laurent: arity does not match basis");
  std::vector<std::string> terms;
  for (const auto& [e, c] : f.terms()) {
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += " * ";
      mono += unit_power("exp[" + zpoly::render(basis.frequency(j)) + "]", e[j]);
    }
    terms.push_back(term_text(c, mono));
  }
  return join_terms(terms);
}

std::string render_ypoly(const MonicYPoly& f, const UnitBasis& basis, const std::string& var) {
  std::vector<std::string> terms;
  for (int k = f.degree(); k >= 0; --k) {
    const std::string mono = k == 0 ? "" : unit_power(var, k);
    if (k == f.degree()) {
      terms.push_back(mono);
      continue;
    }
    const LaurentPoly& c = f.coeff(k);
    if (c.is_zero()) continue;
    if (k == 0) {
      terms.push_back(render_laurent(c, basis));
      continue;
    }
    if (c.is_monomial()) {
      std::string t = render_laurent(c, basis);
      if (t == "1") terms.push_back(mono);
      else if (t == "-1") terms.push_back("-" + mono);
      else terms.push_back(t + " * " + mono);
    } else {
      terms.push_back("(" + render_laurent(c, basis) + ") * " + mono);
    }
  }
  return join_terms(terms);
}

std::string render_xpoly(const LaurentPoly& f) {
  std::vector<std::string> terms;
  for (const auto& [e, c] : f.terms()) {
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += " * ";
      mono += unit_power("x" + std::to_string(j), e[j]);
    }
    terms.push_back(term_text(c, mono));
  }
  return join_terms(terms);
}

}  // namespace expnev::expr

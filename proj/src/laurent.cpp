#include "expnev/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace expnev {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

LaurentPoly LaurentPoly::constant(std::size_t arity, const RatFunc& c) {
  LaurentPoly p(arity);
  p.add_term(Exponent(arity, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const RatFunc& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t arity, std::size_t j, int power) {
  Exponent e(arity, 0);
  e.at(j) = power;
  return monomial(e);
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

RatFunc LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RatFunc(0) : it->second;
}

const std::pair<const Exponent, RatFunc>& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero Laurent polynomial");
  return *terms_.rbegin();
}

void LaurentPoly::add_term(const Exponent& e, const RatFunc& c) {
  if (e.size() != arity_) throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("LaurentPoly: arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("LaurentPoly: arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("LaurentPoly: arity mismatch");
  LaurentPoly out(a.arity_);
  Exponent e(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const RatFunc& c) const {
  LaurentPoly r(arity_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
  if (s.size() != arity_) throw std::invalid_argument("LaurentPoly: shift arity mismatch");
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponent n = e;
    for (std::size_t k = 0; k < n.size(); ++k) n[k] += s[k];
    r.terms_.emplace(std::move(n), c);
  }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(arity_, RatFunc(1));
  LaurentPoly base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

Exponent LaurentPoly::min_exponents() const {
  if (terms_.empty()) return Exponent(arity_, 0);
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < arity_; ++k) m[k] = std::min(m[k], e[k]);
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  if (terms_.empty()) return Exponent(arity_, 0);
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < arity_; ++k) m[k] = std::max(m[k], e[k]);
  return m;
}

std::vector<int> LaurentPoly::exponents_of(std::size_t j) const {
  std::vector<int> out;
  for (const auto& [e, c] : terms_) out.push_back(e.at(j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool LaurentPoly::depends_on(std::size_t j) const {
  return std::any_of(terms_.begin(), terms_.end(), [j](const auto& t) { return t.first.at(j) != 0; });
}

LaurentPoly LaurentPoly::partial(std::size_t j) const {
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e.at(j) == 0) continue;
    Exponent n = e;
    n[j] -= 1;
    r.add_term(n, c * RatFunc(static_cast<long>(e[j])));
  }
  return r;
}

LaurentPoly LaurentPoly::coefficient_derivative() const {
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) r.add_term(e, c.derivative());
  return r;
}

LaurentPoly LaurentPoly::remove_variable(std::size_t j) const {
  if (j >= arity_) throw std::out_of_range("LaurentPoly::remove_variable");
  LaurentPoly r(arity_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[j] != 0) throw std::invalid_argument("LaurentPoly::remove_variable: variable still present");
    Exponent n = e;
    n.erase(n.begin() + static_cast<std::ptrdiff_t>(j));
    r.add_term(n, c);
  }
  return r;
}

LaurentPoly LaurentPoly::insert_variable(std::size_t j) const {
  if (j > arity_) throw std::out_of_range("LaurentPoly::insert_variable");
  LaurentPoly r(arity_ + 1);
  for (const auto& [e, c] : terms_) {
    Exponent n = e;
    n.insert(n.begin() + static_cast<std::ptrdiff_t>(j), 0);
    r.terms_.emplace(std::move(n), c);
  }
  return r;
}

LaurentPoly LaurentPoly::scale_variable(std::size_t j, int k) const {
  std::vector<int> f(arity_, 1);
  f.at(j) = k;
  return rescale(f);
}

LaurentPoly LaurentPoly::rescale(const std::vector<int>& factors) const {
  if (factors.size() != arity_) throw std::invalid_argument("LaurentPoly::rescale: arity mismatch");
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponent n = e;
    for (std::size_t k = 0; k < arity_; ++k) n[k] *= factors[k];
    r.add_term(n, c);
  }
  return r;
}

LaurentPoly LaurentPoly::normalized() const {
  if (terms_.empty()) return *this;
  LaurentPoly r = without_monomial_content();
  const RatFunc lc = r.leading_term().second;
  if (lc.is_one()) return r;
  return r.scaled(RatFunc(1) / lc);
}

Exponent LaurentPoly::negated(Exponent e) {
  for (auto& v : e) v = -v;
  return e;
}

namespace {

bool divides_monomial(const Exponent& d, const Exponent& e) {
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] > e[k]) return false;
  return true;
}

// Division of polynomials (nonnegative exponents, g monomial-free) in K[x].
// Returns quotient and remainder; the remainder collects terms that the
// leading monomial of g does not divide.
std::pair<LaurentPoly, LaurentPoly> poly_divide(LaurentPoly f, const LaurentPoly& g) {
  const std::size_t n = f.arity();
  LaurentPoly q(n), rem(n);
  const auto& [lg_e, lg_c] = g.leading_term();
  const RatFunc inv_lc = RatFunc(1) / lg_c;
  Exponent diff(n);
  while (!f.is_zero()) {
    const auto [lf_e, lf_c] = f.leading_term();
    if (!divides_monomial(lg_e, lf_e)) {
      rem.add_term(lf_e, lf_c);
      f.add_term(lf_e, -lf_c);
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) diff[k] = lf_e[k] - lg_e[k];
    RatFunc c = lf_c * inv_lc;
    q.add_term(diff, c);
    f -= g.shifted(diff).scaled(c);
  }
  return {std::move(q), std::move(rem)};
}

}  // namespace

std::optional<LaurentPoly> try_divexact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("laurent_divexact: division by zero");
  if (f.arity() != g.arity()) throw std::invalid_argument("laurent_divexact: arity mismatch");
  if (f.is_zero()) return LaurentPoly(f.arity());
  if (g.is_monomial()) {
    const auto& [e, c] = *g.terms().begin();
    return f.shifted(LaurentPoly::negated(e)).scaled(RatFunc(1) / c);
  }
  const Exponent mf = f.min_exponents();
  const Exponent mg = g.min_exponents();
  auto [q, rem] = poly_divide(f.shifted(LaurentPoly::negated(mf)), g.shifted(LaurentPoly::negated(mg)));
  if (!rem.is_zero()) return std::nullopt;
  Exponent s(f.arity());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = mf[k] - mg[k];
  return q.shifted(s);
}

LaurentPoly laurent_divexact(const LaurentPoly& f, const LaurentPoly& g) {
  if (auto q = try_divexact(f, g)) return *std::move(q);
  const Exponent mf = f.min_exponents();
  const Exponent mg = g.min_exponents();
  auto rem = poly_divide(f.shifted(LaurentPoly::negated(mf)), g.shifted(LaurentPoly::negated(mg))).second;
  throw NotDivisible(rem.shifted(mf));
}

}  // namespace expnev

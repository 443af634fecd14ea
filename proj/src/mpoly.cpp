#include "expnev/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace expnev {

MPoly MPoly::constant(std::size_t nvars, const GR& c) {
  MPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t v, int power) {
  MPoly p(nvars);
  Monomial m(nvars, 0);
  m.at(v) = power;
  p.add_term(m, GR(1));
  return p;
}

bool MPoly::is_constant() const {
  if (t_.empty()) return true;
  if (t_.size() > 1) return false;
  const auto& m = t_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

void MPoly::add_term(const Monomial& m, const GR& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(a.n_);
  MPoly::Monomial m(a.n_);
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      out.add_term(m, ca * cb);
    }
  return out;
}

MPoly MPoly::scaled(const GR& c) const {
  MPoly r(n_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : t_) r.t_.emplace(m, v * c);
  return r;
}

MPoly MPoly::shifted(const Monomial& s) const {
  MPoly r(n_);
  for (const auto& [m, c] : t_) {
    Monomial n = m;
    for (std::size_t k = 0; k < n.size(); ++k) n[k] += s[k];
    r.t_.emplace(std::move(n), c);
  }
  return r;
}

int MPoly::degree(std::size_t v) const {
  if (t_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m[v]);
  return d;
}

MPoly MPoly::derivative(std::size_t v) const {
  MPoly r(n_);
  for (const auto& [m, c] : t_) {
    if (m[v] == 0) continue;
    Monomial n = m;
    n[v] -= 1;
    r.add_term(n, c * GR(m[v]));
  }
  return r;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t v) const {
  std::vector<MPoly> out(static_cast<std::size_t>(std::max(degree(v), -1) + 1), MPoly(n_));
  for (const auto& [m, c] : t_) {
    Monomial n = m;
    n[v] = 0;
    out[static_cast<std::size_t>(m[v])].t_.emplace(std::move(n), c);
  }
  return out;
}

MPoly MPoly::from_coefficients(std::size_t nvars, std::size_t v, const std::vector<MPoly>& cs) {
  MPoly r(nvars);
  for (std::size_t k = 0; k < cs.size(); ++k)
    for (const auto& [m, c] : cs[k].t_) {
      Monomial n = m;
      n[v] += static_cast<int>(k);
      r.add_term(n, c);
    }
  return r;
}

MPoly MPoly::monic() const {
  if (t_.empty()) return *this;
  const GR& lc = leading_term().second;
  if (lc.is_one()) return *this;
  return scaled(GR(1) / lc);
}

std::optional<MPoly> mpoly_divexact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("mpoly_divexact: division by zero");
  const std::size_t n = a.nvars();
  MPoly q(n), r = a;
  const auto& [lb_m, lb_c] = b.leading_term();
  const GR inv = GR(1) / lb_c;
  MPoly::Monomial diff(n);
  while (!r.is_zero()) {
    const auto [lr_m, lr_c] = r.leading_term();
    for (std::size_t k = 0; k < n; ++k) {
      diff[k] = lr_m[k] - lb_m[k];
      if (diff[k] < 0) return std::nullopt;
    }
    GR c = lr_c * inv;
    q.add_term(diff, c);
    r -= b.shifted(diff).scaled(c);
  }
  return q;
}

namespace {

MPoly exact(const MPoly& a, const MPoly& b) {
  auto q = mpoly_divexact(a, b);
  if (!q) throw std::logic_error("mpoly: expected exact division");
  return *std::move(q);
}

}  // namespace

MPoly mpoly_prem(const MPoly& a, const MPoly& b, std::size_t v) {
  const int db = b.degree(v);
  if (db < 0) throw std::domain_error("mpoly_prem: zero divisor");
  const std::size_t n = a.nvars();
  auto bc = b.coefficients_in(v);
  const MPoly lb = bc.back();
  MPoly r = a;
  int e = std::max(a.degree(v) - db + 1, 0);
  while (!r.is_zero() && r.degree(v) >= db) {
    const int dr = r.degree(v);
    MPoly lr = r.coefficients_in(v).back();
    MPoly::Monomial s(n, 0);
    s[v] = dr - db;
    r = r * lb - (lr * b).shifted(s);
    --e;
  }
  for (int k = 0; k < e; ++k) r = r * lb;
  return r;
}

MPoly mpoly_content(const MPoly& p, std::size_t v) {
  const std::size_t n = p.nvars();
  if (p.is_zero()) return MPoly(n);
  auto cs = p.coefficients_in(v);
  MPoly g(n);
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : mpoly_gcd(g, c);
    if (g.is_constant()) return MPoly::constant(n, GR(1));
  }
  return g;
}

MPoly mpoly_primitive_part(const MPoly& p, std::size_t v) {
  if (p.is_zero()) return p;
  return exact(p, mpoly_content(p, v));
}

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  const std::size_t n = a.nvars();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly::constant(n, GR(1));
  if (a == b) return a.monic();

  // Main variable: present in either argument, smallest combined degree.
  std::size_t v = n;
  int best = 0;
  for (std::size_t k = 0; k < n; ++k) {
    int da = std::max(a.degree(k), 0), db = std::max(b.degree(k), 0);
    if (da + db == 0) continue;
    if (v == n || da + db < best) {
      v = k;
      best = da + db;
    }
  }
  if (!a.has_variable(v)) return mpoly_gcd(a, mpoly_content(b, v));
  if (!b.has_variable(v)) return mpoly_gcd(mpoly_content(a, v), b);

  MPoly ca = mpoly_content(a, v), cb = mpoly_content(b, v);
  MPoly c = mpoly_gcd(ca, cb);
  MPoly pa = exact(a, ca), pb = exact(b, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  MPoly g(n);
  while (true) {
    MPoly r = mpoly_prem(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree(v) == 0) {
      g = MPoly::constant(n, GR(1));
      break;
    }
    pa = std::move(pb);
    pb = mpoly_primitive_part(r, v).monic();
  }
  return (c * mpoly_primitive_part(g, v)).monic();
}

}  // namespace expnev

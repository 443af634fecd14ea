#include "expnev/zpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace expnev::zpoly {

namespace {

bool needs_parens(const GR& c) { return sgn(c.real()) != 0 && sgn(c.imag()) != 0; }

}  // namespace

std::string render(const ZPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    GR c = p.coeffs()[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    bool negative = c.is_real() ? sgn(c.real()) < 0 : (sgn(c.real()) == 0 && sgn(c.imag()) < 0);
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0) {
      os << (needs_parens(c) && c.common_denominator() == 1 ? "(" + c.str() + ")" : c.str());
    } else if (c.is_one()) {
      os << mono;
    } else {
      std::string cs = c.str();
      if (needs_parens(c) && c.common_denominator() == 1) cs = "(" + cs + ")";
      os << cs << '*' << mono;
    }
  }
  return os.str();
}

std::complex<double> eval(const ZPoly& p, std::complex<double> x) {
  std::complex<double> acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

ZPoly taylor_shift(const ZPoly& p, const GR& c) { return p.compose(ZPoly{c, GR(1)}); }

bool less(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    auto o = a.coeffs()[static_cast<size_t>(k)] <=> b.coeffs()[static_cast<size_t>(k)];
    if (o != 0) return o < 0;
  }
  return false;
}

std::vector<std::complex<long double>> numeric_roots(const ZPoly& p) {
  std::vector<std::complex<long double>> a;
  for (const auto& c : p.coeffs()) a.push_back(c.to_complex_ld());
  return numeric_roots(std::move(a));
}

std::vector<std::complex<long double>> numeric_roots(std::vector<std::complex<long double>> a) {
  using C = std::complex<long double>;
  while (!a.empty() && a.back() == C(0)) a.pop_back();
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 1) return {};
  const C lead = a.back();
  for (auto& x : a) x /= lead;

  auto eval_both = [&](C x, C& f, C& df) {
    f = 1;
    df = 0;
    for (int k = n - 1; k >= 0; --k) {
      df = df * x + f;
      f = f * x + a[static_cast<size_t>(k)];
    }
  };

  // Cauchy bound for initial circle.
  long double bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[static_cast<size_t>(k)]));
  bound = 1 + bound;
  long double radius = std::min<long double>(bound, 1 + std::pow(std::abs(a[0]), 1.0L / n));
  std::vector<C> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    long double ang = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[static_cast<size_t>(k)] = std::polar(radius, ang);
  }
  for (int iter = 0; iter < 500; ++iter) {
    long double worst = 0;
    for (int k = 0; k < n; ++k) {
      C f, df;
      eval_both(z[static_cast<size_t>(k)], f, df);
      if (f == C(0)) continue;
      C ratio = f / df;
      C sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += C(1) / (z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)]);
      C step = ratio / (C(1) - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      z[static_cast<size_t>(k)] -= step;
      worst = std::max(worst, std::abs(step) / (1 + std::abs(z[static_cast<size_t>(k)])));
    }
    if (worst < 1e-18L) break;
  }
  std::sort(z.begin(), z.end(), [](const C& x, const C& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return z;
}

std::vector<GR> gaussian_rational_roots(const ZPoly& p) {
  if (p.degree() < 1) return {};
  // Monic with integer-scaled argument: q(Y) = L^d p(Y/L)/lc has Z[i] coefficients,
  // so its roots in Q(i) are Gaussian integers.
  ZPoly m = p.monic();
  mpz_class l = 1;
  for (const auto& c : m.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.common_denominator().get_mpz_t());
  const int d = m.degree();
  std::vector<GR> qc(static_cast<size_t>(d) + 1);
  mpz_class pw = 1;
  for (int k = d; k >= 0; --k) {
    qc[static_cast<size_t>(k)] = m.coeffs()[static_cast<size_t>(k)] * GR(mpq_class(pw));
    pw *= l;
  }
  ZPoly q(std::move(qc));
  std::set<std::pair<mpz_class, mpz_class>> seen;
  std::vector<GR> out;
  for (const auto& r : numeric_roots(q)) {
    mpz_class re(static_cast<double>(std::round(r.real()))), im(static_cast<double>(std::round(r.imag())));
    for (int dr = -1; dr <= 1; ++dr) {
      for (int di = -1; di <= 1; ++di) {
        mpz_class cr = re + dr, ci = im + di;
        if (seen.count({cr, ci})) continue;
        GR cand{mpq_class(cr), mpq_class(ci)};
        if (q.evaluate(cand).is_zero()) {
          seen.insert({cr, ci});
          out.push_back(cand / GR(mpq_class(l)));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace expnev::zpoly

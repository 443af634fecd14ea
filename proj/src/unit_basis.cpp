#include "expnev/unit_basis.hpp"

#include <algorithm>
#include <numeric>

#include "expnev/errors.hpp"

namespace expnev {

namespace {

void validate(const ZPoly& q) {
  if (q.is_zero()) throw PreconditionError("unit frequency must be nonzero");
  if (!q.coeffs()[0].is_zero()) throw PreconditionError("unit frequency must have zero constant term");
}

}  // namespace

UnitBasis::UnitBasis(std::vector<ZPoly> frequencies) : freqs_(std::move(frequencies)) {
  for (const auto& q : freqs_) validate(q);
  indep_ = frequency_independence(freqs_);
}

int UnitBasis::max_order() const {
  int m = 0;
  for (const auto& q : freqs_) m = std::max(m, q.degree());
  return m;
}

UnitBasis UnitBasis::refined(std::size_t j, int k) const {
  std::vector<int> f(freqs_.size(), 1);
  f.at(j) = k;
  return refined(f);
}

UnitBasis UnitBasis::refined(const std::vector<int>& factors) const {
  if (factors.size() != freqs_.size()) throw std::invalid_argument("UnitBasis::refined: size mismatch");
  std::vector<ZPoly> out = freqs_;
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (factors[j] <= 0) throw std::invalid_argument("UnitBasis::refined: factor must be positive");
    if (factors[j] != 1) out[j] = out[j].scaled(GR(1) / GR(factors[j]));
  }
  UnitBasis b;
  b.freqs_ = std::move(out);
  b.indep_ = indep_;  // scaling columns by nonzero rationals preserves (in)dependence up to rescaling
  if (!b.indep_.independent) b.indep_ = frequency_independence(b.freqs_);
  return b;
}

UnitBasis UnitBasis::without(std::size_t j) const {
  std::vector<ZPoly> out = freqs_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
  return UnitBasis(std::move(out));
}

UnitBasis UnitBasis::with_inserted(std::size_t j, ZPoly q) const {
  std::vector<ZPoly> out = freqs_;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(j), std::move(q));
  return UnitBasis(std::move(out));
}

std::vector<std::size_t> UnitBasis::peeling_order() const {
  std::vector<std::size_t> idx(freqs_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return freqs_[a].degree() > freqs_[b].degree();
  });
  return idx;
}

IndependenceResult frequency_independence(const std::vector<ZPoly>& frequencies) {
  const std::size_t n = frequencies.size();
  int deg = 0;
  for (const auto& q : frequencies) deg = std::max(deg, q.degree());
  // Rows: real and imaginary parts of the z^k coefficient, k = 0..deg.
  const std::size_t rows = 2 * (static_cast<std::size_t>(deg) + 1);
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (int k = 0; k <= frequencies[j].degree(); ++k) {
      const GR& c = frequencies[j].coeffs()[static_cast<std::size_t>(k)];
      m[2 * static_cast<std::size_t>(k)][j] = c.real();
      m[2 * static_cast<std::size_t>(k) + 1][j] = c.imag();
    }
  }
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][col]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    mpq_class inv = 1 / m[r][col];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][col]) == 0) continue;
      mpq_class f = m[i][col];
      for (std::size_t c = 0; c < n; ++c) m[i][c] -= f * m[r][c];
    }
    pivot_col.push_back(col);
    ++r;
  }
  IndependenceResult out;
  if (pivot_col.size() == n) return out;
  out.independent = false;
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<mpq_class> v(n, 0);
  v[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free_col];
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> iv(n);
  mpz_class g = 0;
  for (std::size_t j = 0; j < n; ++j) {
    iv[j] = v[j].get_num() * (l / v[j].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[j].get_mpz_t());
  }
  int sign = 1;
  for (const auto& x : iv)
    if (sgn(x) != 0) {
      sign = sgn(x) > 0 ? 1 : -1;
      break;
    }
  for (auto& x : iv) x = x / g * sign;
  out.dependence = std::move(iv);
  return out;
}

}  // namespace expnev

#include "expnev/jacobian.hpp"

#include <numeric>

namespace expnev {

int homogeneous_degree(const LaurentPoly& f) {
  if (f.is_zero()) throw PreconditionError("homogeneous polynomial must be nonzero");
  std::optional<int> deg;
  for (const auto& [e, c] : f.terms()) {
    for (int v : e)
      if (v < 0) throw PreconditionError("homogeneous polynomial has a negative exponent");
    const int t = std::accumulate(e.begin(), e.end(), 0);
    if (deg && *deg != t) throw PreconditionError("polynomial is not homogeneous");
    deg = t;
  }
  return *deg;
}

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  const std::size_t arity = m[0][0].arity();
  if (n == 1) return m[0][0];
  LaurentPoly out(arity);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][col] * determinant(minor);
    if (col % 2 == 1) out -= term;
    else out += term;
  }
  return out;
}

LaurentPoly jacobian_det(const std::vector<LaurentPoly>& fs) {
  const std::size_t n = fs.size();
  if (n == 0) throw std::invalid_argument("jacobian_det: no polynomials");
  std::vector<std::vector<LaurentPoly>> m;
  for (const auto& f : fs) {
    if (f.arity() != n)
      throw std::invalid_argument("jacobian_det: need n+1 polynomials in n+1 variables, got " + std::to_string(n) +
                                  " in " + std::to_string(f.arity()));
    homogeneous_degree(f);
    std::vector<LaurentPoly> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(f.partial(j));
    m.push_back(std::move(row));
  }
  return determinant(m);
}

bool euler_identity_holds(const LaurentPoly& f) {
  const int deg = homogeneous_degree(f);
  LaurentPoly lhs(f.arity());
  for (std::size_t j = 0; j < f.arity(); ++j) lhs += f.partial(j) * LaurentPoly::variable(f.arity(), j);
  return lhs == f.scaled(RatFunc(static_cast<long>(deg)));
}

}  // namespace expnev

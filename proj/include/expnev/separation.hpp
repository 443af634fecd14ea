#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "expnev/ypoly.hpp"
#include "expnev/unit_basis.hpp"

namespace expnev {

/// Result of testing whether a Laurent polynomial is (Q free of a block) times
/// a monomial in the block variables.
struct ShapeCheck {
  bool ok = false;
  LaurentPoly q;               ///< factor free of the block (when ok)
  std::vector<int> exponents;  ///< m_j for each block variable, block order (when ok)
  std::size_t witness_var = 0;           ///< offending variable (when !ok)
  std::vector<int> witness_exponents;    ///< two distinct exponents of it (when !ok)
};

ShapeCheck monomial_shape_check(const LaurentPoly& delta, const std::vector<std::size_t>& block);

/// F(Y) = u_j^s P(u_j^t Y + A) with P free of u_j.
///
/// s and t are reported in units of the original u_j; the refined basis has
/// v_j = u_j^{1/k} and A, P are written over it (P with variable j removed).
struct SeparationResult {
  mpq_class s;
  mpq_class t;
  std::size_t var = 0;
  int k = 1;
  LaurentPoly shift;        ///< A, arity n, refined basis
  MonicYPoly reduced;       ///< P, arity n-1
  UnitBasis refined_basis;  ///< full basis with Q_j / k
  UnitBasis reduced_basis;  ///< refined basis without variable j

  /// s, t as integer exponents of v_j.
  int s_refined() const;
  int t_refined() const;
};

class SeparationError : public Error {
 public:
  enum class Kind { HypothesesUnmet, SearchBoundExceeded };
  SeparationError(Kind kind, std::string message, std::vector<mpq_class> rejected = {})
      : Error(std::move(message)), kind_(kind), rejected_(std::move(rejected)) {}
  Kind kind() const { return kind_; }
  /// Every candidate t tried, in search order.
  const std::vector<mpq_class>& rejected() const { return rejected_; }

 private:
  Kind kind_;
  std::vector<mpq_class> rejected_;
};

/// Largest |t| the search visits for variable j.
int separation_search_bound(const MonicYPoly& f, std::size_t j);

/// Searches t in (1/d)Z by increasing |t| (negative first).  Throws
/// SeparationError; HypothesesUnmet when the discriminant is zero or not a
/// monomial in u_j.
SeparationResult separate_variable(const MonicYPoly& f, const UnitBasis& basis, std::size_t j);

/// u_j^s P(u_j^t Y + A) over the refined basis; equals F with u_j -> v_j^k.
MonicYPoly recompose(const SeparationResult& r);

}  // namespace expnev

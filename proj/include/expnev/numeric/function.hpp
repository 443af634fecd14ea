#pragma once

#include <complex>
#include <vector>

#include "expnev/laurent.hpp"
#include "expnev/unit_basis.hpp"

namespace expnev::numeric {

using cd = std::complex<double>;

/// Value m * e^s kept apart so that |f| may exceed the double range.
struct Scaled {
  cd mantissa;
  double log_scale = 0;
  double log_abs() const { return std::log(std::abs(mantissa)) + log_scale; }
};

/// f(z) = sum_i a_i(z) exp(sum_j i_j Q_j(z)) evaluated in double precision,
/// with the exact derivative D_u(f) alongside.
class ExpPolyFunction {
 public:
  ExpPolyFunction(LaurentPoly body, UnitBasis basis);

  const LaurentPoly& body() const { return body_; }
  const UnitBasis& basis() const { return basis_; }
  bool is_zero() const { return body_.is_zero(); }
  /// No exponent other than zero: a rational function of z.
  bool is_rational() const;
  /// A single term: a unit times a rational function.
  bool is_monomial() const { return body_.is_monomial(); }

  cd operator()(cd z) const;
  cd derivative(cd z) const;
  Scaled scaled(cd z) const;
  /// f'/f at z; both evaluated with one common scale.
  cd log_derivative(cd z) const;
  double log_abs(cd z) const { return scaled(z).log_abs(); }

  /// D_u(f) as a function in its own right.
  ExpPolyFunction derived() const;
  /// Lowest common denominator of all coefficients (monic).
  const ZPoly& denominator() const { return den_; }
  /// den * f, which is entire.
  ExpPolyFunction cleared() const;
  /// f - c for a constant c.
  ExpPolyFunction minus_constant(const GR& c) const;

  /// Numeric roots of the coefficient denominator (with multiplicity).
  const std::vector<cd>& poles() const { return poles_; }

 private:
  struct Term {
    std::vector<cd> freq;  // sum_j i_j Q_j, ascending
    std::vector<cd> num, den, dnum, dden;
  };
  LaurentPoly body_;
  UnitBasis basis_;
  ZPoly den_;
  std::vector<Term> terms_;
  std::vector<cd> poles_;

  template <bool WithDerivative>
  void eval(cd z, Scaled& f, cd* df) const;
};

}  // namespace expnev::numeric

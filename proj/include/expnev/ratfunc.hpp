#pragma once

#include <complex>
#include <string>

#include "expnev/zpoly.hpp"

namespace expnev {

/// Exact element of Q(i)(z): num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(ZPoly::constant(GR(1))) {}
  RatFunc(long v) : num_(ZPoly::constant(GR(v))), den_(ZPoly::constant(GR(1))) {}  // NOLINT
  RatFunc(const GR& c) : num_(ZPoly::constant(c)), den_(ZPoly::constant(GR(1))) {}  // NOLINT
  RatFunc(ZPoly p) : num_(std::move(p)), den_(ZPoly::constant(GR(1))) {}  // NOLINT
  RatFunc(ZPoly num, ZPoly den);

  static RatFunc z() { return RatFunc(zpoly::z()); }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.leading().is_one(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  /// Value of a constant element; throws if not constant.
  GR constant_value() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc derivative() const;
  /// Exact value at a point that is not a pole.
  GR evaluate(const GR& z0) const;
  std::complex<double> evaluate(std::complex<double> z0) const;

  /// Expression-syntax text; "(num)/(den)" when den is not 1.
  std::string render() const;

 private:
  void normalize();
  ZPoly num_;
  ZPoly den_;
};

/// Deterministic total order (by denominator, then numerator) for tie-breaking.
bool ratfunc_less(const RatFunc& a, const RatFunc& b);

}  // namespace expnev

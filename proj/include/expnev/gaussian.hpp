#pragma once

#include <complex>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace expnev {

/// Exact element of Q(i): re + im*i with arbitrary precision rationals.
///
/// Both parts are kept canonical (lowest terms, positive denominator), so
/// structural equality is value equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |x|^2, always a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Arbitrary but total order (real part, then imaginary part); used for
  /// deterministic sorting only.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::complex<long double> to_complex_ld() const;

  /// Canonical text: "a", "a/c", "bi", "bi/c", "(a+bi)/c" with c the common
  /// denominator.  Parses back through the expression grammar.
  std::string str() const;
  /// Parses the canonical text produced by str().
  static GaussianRational from_string(std::string_view text);

  /// Least common denominator of both parts.
  mpz_class common_denominator() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

using GR = GaussianRational;

}  // namespace expnev

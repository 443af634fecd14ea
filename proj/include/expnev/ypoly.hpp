#pragma once

#include <vector>

#include "expnev/laurent.hpp"

namespace expnev {

/// Polynomial in Y with Laurent-polynomial coefficients (ascending powers).
class YPoly {
 public:
  explicit YPoly(std::size_t arity = 0) : arity_(arity) {}
  YPoly(std::size_t arity, std::vector<LaurentPoly> coeffs);

  std::size_t arity() const { return arity_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<LaurentPoly>& coeffs() const { return c_; }
  LaurentPoly coeff(int k) const;
  const LaurentPoly& leading() const { return c_.back(); }

  YPoly& operator+=(const YPoly& o);
  YPoly& operator-=(const YPoly& o);
  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
  friend YPoly operator*(const YPoly& a, const YPoly& b);
  YPoly scaled(const LaurentPoly& s) const;
  friend bool operator==(const YPoly& a, const YPoly& b) { return a.arity_ == b.arity_ && a.c_ == b.c_; }

  YPoly derivative() const;
  /// Horner evaluation at a Laurent polynomial.
  LaurentPoly evaluate(const LaurentPoly& y) const;
  /// Substitutes Y -> a*W + b.
  YPoly compose_linear(const LaurentPoly& a, const LaurentPoly& b) const;
  /// Applies a map to every coefficient.
  template <class Fn>
  YPoly map_coefficients(Fn&& fn) const {
    std::vector<LaurentPoly> out;
    for (const auto& c : c_) out.push_back(fn(c));
    const std::size_t arity = out.empty() ? arity_ : out.front().arity();
    return YPoly(arity, std::move(out));
  }

 private:
  void trim();
  std::size_t arity_;
  std::vector<LaurentPoly> c_;
};

/// F(Y) = Y^d + A_{d-1} Y^{d-1} + ... + A_0 with d >= 1.
class MonicYPoly {
 public:
  /// lower holds A_0..A_{d-1}; all must share one arity.
  MonicYPoly(std::size_t arity, std::vector<LaurentPoly> lower);
  /// Throws PreconditionError unless p is monic of degree >= 1.
  static MonicYPoly from_ypoly(const YPoly& p);

  std::size_t arity() const { return arity_; }
  int degree() const { return static_cast<int>(lower_.size()); }
  /// A_k for 0 <= k < d.
  const LaurentPoly& coeff(int k) const { return lower_.at(static_cast<std::size_t>(k)); }
  const std::vector<LaurentPoly>& lower() const { return lower_; }
  YPoly to_ypoly() const;
  friend bool operator==(const MonicYPoly& a, const MonicYPoly& b) {
    return a.arity_ == b.arity_ && a.lower_ == b.lower_;
  }

 private:
  std::size_t arity_;
  std::vector<LaurentPoly> lower_;
};

}  // namespace expnev

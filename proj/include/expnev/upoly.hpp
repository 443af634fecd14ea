#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace expnev {

/// Dense univariate polynomial over a field F (ascending coefficients).
///
/// F must provide the field operations, `is_zero()`, equality and
/// construction from an integer.  The coefficient vector never ends in a
/// zero; the zero polynomial is the empty vector and has degree -1.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }
  static UPoly constant(F v) { return UPoly(std::vector<F>{std::move(v)}); }
  /// c * x^k
  static UPoly monomial(F c, std::size_t k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = std::move(c);
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }
  /// Coefficient of x^k, zero past the end.
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
  const F& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const F& s) const {
    if (s.is_zero()) return {};
    UPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {UPoly{}, *this};
    std::vector<F> rem = c_;
    std::vector<F> q(c_.size() - d.c_.size() + 1, F(0));
    const F inv_lead = F(1) / d.leading();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      F& top = rem[static_cast<std::size_t>(k) + d.c_.size() - 1];
      if (top.is_zero()) continue;
      F f = top * inv_lead;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= f * d.c_[j];
      q[static_cast<std::size_t>(k)] = std::move(f);
    }
    rem.resize(d.c_.size() - 1);
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
  }

  UPoly monic() const {
    if (is_zero()) return {};
    return scaled(F(1) / leading());
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> out(c_.size() - 1, F(0));
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * F(static_cast<long>(k));
    return UPoly(std::move(out));
  }

  template <class V>
  V evaluate(const V& x) const {
    V acc = V(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  /// Composition p(q(x)).
  UPoly compose(const UPoly& q) const {
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  /// Monic greatest common divisor; gcd(0, 0) = 0.
  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  /// Coefficients of p(x) * x^{-k} truncated below: drops terms of degree < k.
  UPoly truncated(std::size_t len) const {
    if (c_.size() <= len) return *this;
    return UPoly(std::vector<F>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(len)));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

}  // namespace expnev

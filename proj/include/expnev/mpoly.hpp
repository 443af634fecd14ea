#pragma once

#include <map>
#include <optional>
#include <vector>

#include "expnev/gaussian.hpp"

namespace expnev {

/// Sparse polynomial over Q(i) with nonnegative exponents, lex order
/// (variable 0 most significant).  Internal engine behind the Laurent
/// GCD and square-free routines, where z is carried as variable 0.
class MPoly {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, GR>;

  explicit MPoly(std::size_t nvars = 0) : n_(nvars) {}
  static MPoly constant(std::size_t nvars, const GR& c);
  static MPoly variable(std::size_t nvars, std::size_t v, int power = 1);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  /// Scalar (no variable occurs).
  bool is_constant() const;
  const std::pair<const Monomial, GR>& leading_term() const { return *t_.rbegin(); }

  void add_term(const Monomial& m, const GR& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const GR& c) const;
  MPoly shifted(const Monomial& m) const;
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  int degree(std::size_t v) const;
  bool has_variable(std::size_t v) const { return degree(v) > 0; }
  MPoly derivative(std::size_t v) const;

  /// Coefficients c_k (free of v) with p = sum c_k v^k.
  std::vector<MPoly> coefficients_in(std::size_t v) const;
  static MPoly from_coefficients(std::size_t nvars, std::size_t v, const std::vector<MPoly>& cs);

  /// Leading coefficient (lex) equal to 1.
  MPoly monic() const;

 private:
  std::size_t n_;
  Terms t_;
};

std::optional<MPoly> mpoly_divexact(const MPoly& a, const MPoly& b);
/// Pseudo-remainder of a by b with respect to variable v.
MPoly mpoly_prem(const MPoly& a, const MPoly& b, std::size_t v);
/// Greatest common divisor with lex leading coefficient 1 (recursive
/// primitive remainder sequence with content extraction).
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);
/// gcd of the coefficients in v (a polynomial free of v).
MPoly mpoly_content(const MPoly& p, std::size_t v);
MPoly mpoly_primitive_part(const MPoly& p, std::size_t v);

}  // namespace expnev

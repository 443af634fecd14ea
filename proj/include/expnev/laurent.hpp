#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expnev/errors.hpp"
#include "expnev/ratfunc.hpp"

namespace expnev {

using Exponent = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// variable 0 most significant.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Element of K[x_1^{+-1}, ..., x_n^{+-1}] with K = Q(i)(z).
///
/// Terms are kept in graded-lex order and no stored coefficient is zero, so
/// two equal values have identical term maps.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, RatFunc, GrlexLess>;

  explicit LaurentPoly(std::size_t arity = 0) : arity_(arity) {}
  static LaurentPoly constant(std::size_t arity, const RatFunc& c);
  static LaurentPoly monomial(const Exponent& e, const RatFunc& c = RatFunc(1));
  /// x_j
  static LaurentPoly variable(std::size_t arity, std::size_t j, int power = 1);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Only the zero exponent (or empty).
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  RatFunc coefficient(const Exponent& e) const;
  /// Coefficient at the zero exponent.
  RatFunc constant_term() const { return coefficient(Exponent(arity_, 0)); }

  /// Largest term in graded-lex order.
  const std::pair<const Exponent, RatFunc>& leading_term() const;

  void add_term(const Exponent& e, const RatFunc& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly operator-() const;
  LaurentPoly scaled(const RatFunc& c) const;
  LaurentPoly shifted(const Exponent& e) const;  ///< times x^e
  LaurentPoly pow(unsigned k) const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Componentwise minimum / maximum exponent; zero vector for the zero polynomial.
  Exponent min_exponents() const;
  Exponent max_exponents() const;
  /// Distinct exponents of variable j, ascending.
  std::vector<int> exponents_of(std::size_t j) const;
  bool depends_on(std::size_t j) const;

  /// Formal partial derivative with respect to x_j (Laurent rule).
  LaurentPoly partial(std::size_t j) const;
  /// Differentiates every coefficient in z.
  LaurentPoly coefficient_derivative() const;

  /// Drops variable j; every term must have exponent 0 there.
  LaurentPoly remove_variable(std::size_t j) const;
  /// Inserts a new variable at position j with exponent 0.
  LaurentPoly insert_variable(std::size_t j) const;
  /// Multiplies exponents of variable j by k (substitution x_j -> x_j^k).
  LaurentPoly scale_variable(std::size_t j, int k) const;
  /// Multiplies every exponent of variable j by factors[j].
  LaurentPoly rescale(const std::vector<int>& factors) const;

  /// Removes the monomial content x^{min_exponents}.
  LaurentPoly without_monomial_content() const { return shifted(negated(min_exponents())); }
  /// Monomial-free with graded-lex leading coefficient 1; zero stays zero.
  LaurentPoly normalized() const;

  static Exponent negated(Exponent e);

 private:
  std::size_t arity_;
  Terms terms_;
};

/// Exact division failed; carries the nonzero remainder as witness.
class NotDivisible : public Error {
 public:
  explicit NotDivisible(LaurentPoly remainder)
      : Error("exact division failed: nonzero remainder"), remainder_(std::move(remainder)) {}
  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

/// q with q*g = f; throws NotDivisible (carrying the remainder) otherwise.
LaurentPoly laurent_divexact(const LaurentPoly& f, const LaurentPoly& g);
std::optional<LaurentPoly> try_divexact(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace expnev

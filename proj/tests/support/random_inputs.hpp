#pragma once

#include <random>
#include <vector>

#include "expnev/laurent.hpp"
#include "expnev/unit_basis.hpp"

namespace expnev::testkit {

/// Small random inputs for property tests; every generator is driven by the
/// caller's engine so each test fixes its own seed.
class RandomInputs {
 public:
  explicit RandomInputs(unsigned seed) : rng_(seed) {}

  std::mt19937& engine() { return rng_; }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  GR gaussian(int bound = 5, bool allow_fraction = true) {
    const long re = integer(-bound, bound), im = integer(-bound, bound);
    const long den = allow_fraction ? integer(1, 3) : 1;
    return GR(mpq_class(re, den), mpq_class(im, den));
  }

  GR nonzero_gaussian(int bound = 5) {
    GR g;
    do g = gaussian(bound); while (g.is_zero());
    return g;
  }

  ZPoly zpoly(int max_degree, int bound = 4) {
    std::vector<GR> c;
    for (int k = 0, d = integer(0, max_degree); k <= d; ++k) c.push_back(gaussian(bound, false));
    return ZPoly(c);
  }

  ZPoly nonzero_zpoly(int max_degree, int bound = 4) {
    ZPoly p;
    do p = zpoly(max_degree, bound); while (p.is_zero());
    return p;
  }

  /// Coefficient: polynomial, or with probability 1/4 a quotient by a monic linear factor.
  RatFunc ratfunc(int max_degree = 2) {
    const ZPoly num = zpoly(max_degree);
    if (integer(0, 3) == 0) return RatFunc(num, ZPoly{GR(integer(-2, 2)), GR(1)});
    return RatFunc(num);
  }

  LaurentPoly laurent(std::size_t arity, int max_terms, int lo, int hi, int coeff_degree = 1) {
    LaurentPoly f(arity);
    for (int t = 0, n = integer(1, max_terms); t < n; ++t) {
      Exponent e(arity);
      for (auto& v : e) v = integer(lo, hi);
      f.add_term(e, ratfunc(coeff_degree));
    }
    return f;
  }

  /// Polynomial (exponents >= 0) that is not a monomial.
  LaurentPoly nonmonomial_polynomial(std::size_t arity, int max_terms, int hi, int coeff_degree = 1) {
    LaurentPoly f(arity);
    do f = laurent(arity, max_terms, 0, hi, coeff_degree); while (f.size() < 2 || f.without_monomial_content().is_constant());
    return f;
  }

  /// Independent basis of the given size with frequencies of degree <= 2.
  UnitBasis independent_basis(std::size_t n) {
    while (true) {
      std::vector<ZPoly> qs;
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<GR> c = {GR(0)};
        for (int k = 1, d = integer(1, 2); k <= d; ++k) c.push_back(gaussian(3, false));
        ZPoly q(c);
        if (q.is_zero()) q = zpoly::z();
        qs.push_back(q);
      }
      UnitBasis b(qs);
      if (b.certified()) return b;
    }
  }

 private:
  std::mt19937 rng_;
};

}  // namespace expnev::testkit

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expnev/zpoly.hpp"

namespace expnev {

/// Outcome of the Q-linear independence test on frequency polynomials.
struct IndependenceResult {
  bool independent = true;
  /// Primitive integer vector m with sum m_j Q_j = 0 (first nonzero entry
  /// positive); empty when independent.
  std::vector<mpz_class> dependence;
};

/// Units u_j = exp(Q_j(z)) given by their frequency polynomials.
///
/// Each Q_j is nonzero with zero constant term.  Bases produced by lowering
/// are sorted by descending degree; bases built from user lists keep the
/// given order so that variable j always means u_j.
class UnitBasis {
 public:
  UnitBasis() = default;
  /// Validates each frequency and records the independence test.
  explicit UnitBasis(std::vector<ZPoly> frequencies);

  std::size_t size() const { return freqs_.size(); }
  bool empty() const { return freqs_.empty(); }
  const std::vector<ZPoly>& frequencies() const { return freqs_; }
  const ZPoly& frequency(std::size_t j) const { return freqs_.at(j); }
  int order(std::size_t j) const { return freqs_.at(j).degree(); }
  /// max_j deg Q_j, 0 for the empty basis.
  int max_order() const;

  const IndependenceResult& independence() const { return indep_; }
  bool certified() const { return indep_.independent; }

  /// Q_j -> Q_j / k.
  UnitBasis refined(std::size_t j, int k) const;
  /// Q_j -> Q_j / factors[j] for every j.
  UnitBasis refined(const std::vector<int>& factors) const;
  UnitBasis without(std::size_t j) const;
  UnitBasis with_inserted(std::size_t j, ZPoly q) const;

  /// Variable indices ordered by descending degree, ties by index.
  std::vector<std::size_t> peeling_order() const;

  friend bool operator==(const UnitBasis& a, const UnitBasis& b) { return a.freqs_ == b.freqs_; }

 private:
  std::vector<ZPoly> freqs_;
  IndependenceResult indep_;
};

/// Exact Q-linear (equivalently multiplicative modulo C) independence test
/// for the units exp(Q_j): rational nullspace of the coefficient matrix.
IndependenceResult frequency_independence(const std::vector<ZPoly>& frequencies);

}  // namespace expnev

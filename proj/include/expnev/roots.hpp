#pragma once

#include <string>
#include <vector>

#include "expnev/separation.hpp"

namespace expnev {

/// Distinct roots of F in Q(i)(z); F must have arity 0.  Sorted by ratfunc_less.
std::vector<RatFunc> ratfunc_roots(const MonicYPoly& f);

/// A root g of F together with the basis it is written over.
struct ExtractedRoot {
  LaurentPoly root;
  UnitBasis basis;
  /// refinement[j] = k means the j-th basis unit is u_j^{1/k}.
  std::vector<int> refinement;
  bool verified = false;
};

class ExtractionError : public Error {
 public:
  enum class Kind { HypothesisFailure, NoPeelableVariable };
  ExtractionError(Kind kind, std::string message) : Error(std::move(message)), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Every root of F in Q(i)(z)[v^{+-1}] for a refinement v of the basis,
/// peeling one unit at a time.  F is assumed irreducible (not checked); each
/// returned root is verified by exact substitution, and a failed verification
/// throws std::logic_error.
std::vector<ExtractedRoot> extract_exp_poly_roots(const MonicYPoly& f, const UnitBasis& basis);

}  // namespace expnev

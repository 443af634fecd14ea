#pragma once

#include <utility>
#include <vector>

#include "expnev/laurent.hpp"
#include "expnev/mpoly.hpp"
#include "expnev/unit_basis.hpp"

namespace expnev {

/// f = unit * prod_k factor_k^k, with unit a single monomial term a*x^m,
/// each factor square-free, monomial-free and normalized, factors pairwise
/// coprime.  Sorted by multiplicity.
struct SquarefreeDecomposition {
  LaurentPoly unit;
  std::vector<std::pair<LaurentPoly, int>> factors;

  LaurentPoly reassemble() const;
};

/// Greatest common divisor in K[x_1..x_n] of the monomial-free parts,
/// normalized (no monomial factor, graded-lex leading coefficient 1).
/// Coprime inputs give 1.
LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g);

SquarefreeDecomposition squarefree_decompose(const LaurentPoly& f);
bool is_squarefree(const LaurentPoly& f);

/// Derivation with F(u)' = D_u(F)(u): coefficient rule a' + a * sum_j i_j Q_j'.
LaurentPoly derivation_Du(const LaurentPoly& f, const UnitBasis& basis);

struct CriticalPair {
  LaurentPoly radical;     ///< prod of the square-free blocks
  LaurentPoly companion;   ///< sum_k k * D_u(S_k) * prod_{j != k} S_j
  LaurentPoly gcd;         ///< gcd(radical, companion); 1 when coprime
};

/// The coprime pair built from the square-free decomposition of F.
/// Throws PreconditionError for monomial (or zero) input.
CriticalPair critical_pair(const LaurentPoly& f, const UnitBasis& basis);

namespace detail {
/// Clears monomial content and denominators: variable 0 is z, variable j+1 is x_j.
MPoly to_mpoly(const LaurentPoly& f);
LaurentPoly from_mpoly(const MPoly& p);
/// Divides out the gcd of the Q(i)[z] coefficients (a unit of K).
MPoly remove_z_content(const MPoly& p);
}  // namespace detail

}  // namespace expnev

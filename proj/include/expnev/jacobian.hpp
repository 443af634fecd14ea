#pragma once

#include <vector>

#include "expnev/laurent.hpp"

namespace expnev {

/// Total degree of a homogeneous polynomial in x_0..x_n (nonnegative
/// exponents, all terms of one degree); throws PreconditionError otherwise.
int homogeneous_degree(const LaurentPoly& f);

/// det(dF_i/dx_j) for n+1 homogeneous polynomials in n+1 variables.
LaurentPoly jacobian_det(const std::vector<LaurentPoly>& fs);

/// sum_j x_j dF/dx_j == deg(F) F, checked exactly.
bool euler_identity_holds(const LaurentPoly& f);

/// Determinant by cofactor expansion; matrix entries share one arity.
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m);

}  // namespace expnev

#pragma once

#include <vector>

#include "expnev/laurent.hpp"
#include "expnev/numeric/report.hpp"
#include "expnev/unit_basis.hpp"

namespace expnev::numeric {

struct CheckOptions {
  double eps = 0.05;
  double oscillation_bound = 1.0;
  double min_simple_ratio = 0.9;
  /// Additive constant in the lemma on the logarithmic derivative.
  double logderiv_constant = 1.0;
  /// C in T <= sum N^(n) + C log+ T.
  double borel_constant = 1.0;
  /// Number of largest radii the smt verdict looks at.
  std::size_t tail = 2;
  double zero_tol = 1e-9;
  /// Relative size below which a Jacobian minor counts as singular.
  double minor_threshold = 1e-8;
};

/// m_f(a, r) + N_f(a, r) - T_f(r) has oscillation <= bound over the grid.
CheckReport first_main_check(const LaurentPoly& f, const UnitBasis& basis, const GR& a, const std::vector<double>& grid,
                             const CheckOptions& opts = {});

/// m_{f'/f} <= log+ T + (1 + eps) log+ log+ T + C on the top half of the grid.
CheckReport logderiv_check(const LaurentPoly& f, const UnitBasis& basis, const std::vector<double>& grid,
                           const CheckOptions& opts = {});

/// f_0 + ... + f_{n+1} = 0 with no vanishing proper subsum:
/// T of [f_0 : ... : f_n] <= sum_i N^(n)_{f_i} + C log+ T on the top half.
CheckReport trunborel_check(const std::vector<LaurentPoly>& fs, const UnitBasis& basis,
                            const std::vector<double>& grid, const CheckOptions& opts = {});

/// G(u) for G in K[x_0..x_{n-1}] without repeated factors: (N - N^(1)) / T_u
/// small and N^(1) / (deg G * T_u) near 1 at the largest radii.
CheckReport smt_moving_check(const LaurentPoly& G, const UnitBasis& basis, const std::vector<double>& grid,
                             const CheckOptions& opts = {});

/// N_gcd(F(u), G(u)) / max_j T_{u_j} tends to be small for coprime F, G.
CheckReport gcd_smallness_check(const LaurentPoly& F, const LaurentPoly& G, const UnitBasis& basis,
                                const std::vector<double>& grid, const CheckOptions& opts = {});

/// N_gcd(F(u), D_u F(u)) / T_{F(u)} for square-free F; a d-th power
/// F(u) = alpha g^d would force N_gcd >= (d - 1) N_g.
CheckReport dpower_obstruction_check(const LaurentPoly& F, const UnitBasis& basis, const std::vector<double>& grid,
                                     int d = 2, const CheckOptions& opts = {});

/// Homogeneous forms in x_0..x_n with coefficients in Q(i)(z): Euler identity
/// exactly, and at z0 the Jacobian of the forms has full rank at each
/// intersection point (n forms, n = 1 or 2).
CheckReport transversality_check(const std::vector<LaurentPoly>& forms, std::complex<double> z0,
                                 const CheckOptions& opts = {});

/// Zero searches for several functions ending on one common clean radius.
std::vector<ZeroSearch> common_zero_searches(const std::vector<ExpPolyFunction>& fs, double r, double tol);

}  // namespace expnev::numeric

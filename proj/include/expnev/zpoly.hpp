#pragma once

#include <complex>
#include <string>
#include <vector>

#include "expnev/gaussian.hpp"
#include "expnev/upoly.hpp"

namespace expnev {

/// Polynomial in z over Q(i).
using ZPoly = UPoly<GaussianRational>;

namespace zpoly {

inline ZPoly z() { return ZPoly{GR(0), GR(1)}; }

/// Renders in expression syntax, e.g. "(1+2i)/3*z^2 - i*z + 1".
std::string render(const ZPoly& p, const std::string& var = "z");

std::complex<double> eval(const ZPoly& p, std::complex<double> x);

/// p(x + c).
ZPoly taylor_shift(const ZPoly& p, const GR& c);

/// Total order used for sorting frequency lists deterministically.
bool less(const ZPoly& a, const ZPoly& b);

/// All complex roots with multiplicity (Aberth iteration, long double,
/// Newton polishing).  Requires degree >= 1.
std::vector<std::complex<long double>> numeric_roots(const ZPoly& p);
/// Same for a numeric coefficient list (ascending); trailing zeros are dropped.
std::vector<std::complex<long double>> numeric_roots(std::vector<std::complex<long double>> coeffs);

/// Roots of p lying in Q(i) (without multiplicity), found by scaling to a
/// monic Z[i] polynomial, rounding numeric roots and confirming exactly.
std::vector<GR> gaussian_rational_roots(const ZPoly& p);

}  // namespace zpoly
}  // namespace expnev

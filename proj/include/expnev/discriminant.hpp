#pragma once

#include "expnev/ypoly.hpp"

namespace expnev {

/// Res_Y(a, b) (Sylvester convention) by the subresultant remainder
/// sequence; all divisions are exact in the Laurent ring.
LaurentPoly resultant(const YPoly& a, const YPoly& b);

/// (-1)^{d(d-1)/2} Res_Y(F, dF/dY).  Zero means F has a repeated root.
LaurentPoly discriminant(const MonicYPoly& f);

}  // namespace expnev

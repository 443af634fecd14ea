#pragma once

#include <vector>

#include "expnev/numeric/function.hpp"

namespace expnev::numeric {

struct ZeroRecord {
  cd location;
  int multiplicity = 1;
  /// The circle of this radius about location winds `multiplicity` times.
  double enclosure_radius = 0;
  /// |f(location)|, or |f(location)| / (scale) when f overflows; see ZeroSearch.
  double residual = 0;
};

struct ZeroOptions {
  double tol = 1e-9;
  /// Verify each enclosure by its own winding integral.
  bool verify_enclosures = true;
};

struct ZeroSearch {
  std::vector<ZeroRecord> zeros;  ///< zeros of f in |z| <= radius, sorted by (|z|, arg z)
  std::vector<ZeroRecord> poles;  ///< coefficient poles of f in the disk (punctures)
  double requested_radius = 0;
  double radius = 0;  ///< radius actually used after boundary nudging
  int nudge = -1;     ///< k of the accepted nudge factor (1 + 2^-k * 1e-3); -1 when none
  int outer_winding = 0;  ///< winding of den*f about |z| = radius
};

/// Argument-principle zero search on the disk |z| <= r: quadtree of square
/// cells with winding integrals of f'/f (exact derivative), Newton polishing,
/// clusters reported with their total multiplicity.  Throws NumericError when
/// windings cannot be made integral or the boundary cannot be cleared.
ZeroSearch find_zeros(const ExpPolyFunction& f, double r, const ZeroOptions& opts = {});

std::vector<ZeroRecord> zeros_in_disk(const ExpPolyFunction& f, double r, double tol = 1e-9);

/// (1/2 pi i) * integral of f'/f over the circle |z - center| = radius.
cd winding_integral(const ExpPolyFunction& f, cd center, double radius);

/// Sorting key used for all zero lists.
bool zero_order(const ZeroRecord& a, const ZeroRecord& b);

}  // namespace expnev::numeric

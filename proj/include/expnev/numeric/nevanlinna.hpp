#pragma once

#include <limits>
#include <map>
#include <vector>

#include "expnev/numeric/zeros.hpp"

namespace expnev::numeric {

/// Truncation level meaning "no truncation".
inline constexpr int kNoTruncation = std::numeric_limits<int>::max();

/// sum over 0 < |z| <= r of min(Q, mult) log(r/|z|), plus min(Q, mult at 0) log r.
double counting_function(const std::vector<ZeroRecord>& zeros, double r, int Q = kNoTruncation);

/// Unintegrated count n(r) with multiplicity.
int raw_count(const std::vector<ZeroRecord>& zeros, double r);

/// Mean of log+|f| over |z| = r.  abs_tol <= 0 selects 1e-6 * max(1, crude estimate).
double proximity_function(const ExpPolyFunction& f, double r, double abs_tol = 0);

/// Mean of log+ 1/|f - a| over |z| = r.
double proximity_to_value(const ExpPolyFunction& f, const GR& a, double r, double abs_tol = 0);

/// Net poles of f (coefficient denominator roots not cancelled by den*f).
std::vector<ZeroRecord> poles_in_disk(const ExpPolyFunction& f, double r);

/// T_f(r) = m_f(inf, r) + N_f(inf, r).
double characteristic_value(const ExpPolyFunction& f, double r);

/// Cartan characteristic: mean of log max_i |f_i| over |z| = r.
double characteristic_map(const std::vector<ExpPolyFunction>& fs, double r, double abs_tol = 0);

struct NevanlinnaSample {
  double r = 0;
  double r_used = 0;
  double T = 0;
  double m = 0;
  double N = 0;                 ///< N_f(0, r_used)
  double N_poles = 0;           ///< N_f(inf, r_used)
  std::map<int, double> N_trunc;  ///< Q -> N^(Q)_f(0, r_used)
  int n_count = 0;
};

struct SampleOptions {
  double tol = 1e-9;
  std::vector<int> levels = {1, 2};
};

NevanlinnaSample characteristic_sample(const ExpPolyFunction& f, double r, const SampleOptions& opts = {});
std::vector<NevanlinnaSample> characteristic(const ExpPolyFunction& f, const std::vector<double>& grid,
                                             const SampleOptions& opts = {});

struct GcdCount {
  double r_used = 0;
  double value = 0;
  std::vector<ZeroRecord> common;  ///< location from f, multiplicity = min of both
};

/// Discrete N_gcd(f, g, r): common zeros weighted by min multiplicity.
GcdCount gcd_counting(const ExpPolyFunction& f, const ExpPolyFunction& g, double r, double tol = 1e-9);

/// Least-squares slope of log T against log r on the top half of the grid.
double order_estimate(const std::vector<double>& radii, const std::vector<double>& T);
double order_estimate(const ExpPolyFunction& f, const std::vector<double>& grid);

struct JensenResult {
  double r_used = 0;
  double circle_mean = 0;  ///< mean of log|f| over |z| = r_used
  double predicted = 0;    ///< log|c_k| + N_f(0, r_used)
  double difference() const { return circle_mean - predicted; }
};

/// Jensen's formula cross-check for entire f; c_k is the leading Taylor
/// coefficient at 0, obtained from repeated exact derivatives.
JensenResult jensen_check(const ExpPolyFunction& f, double r, double tol = 1e-9);

/// Grid of `count` points from a to b, linear or geometric.
std::vector<double> make_grid(double a, double b, int count, bool geometric);

}  // namespace expnev::numeric

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "expnev/numeric/nevanlinna.hpp"

namespace expnev::numeric {

/// Result of one inequality check over an r-grid.  The verdict is a pure
/// function of the stored arrays, rule and metadata (see evaluate_verdict).
struct CheckReport {
  std::string name;
  /// One of: oscillation, upper_bound_top_half, small_trend, smt, transversal.
  std::string rule;
  std::vector<double> r, r_used, lhs, rhs, margin;
  /// Extra per-radius columns, in output order.
  std::vector<std::pair<std::string, std::vector<double>>> columns;
  nlohmann::json metadata = nlohmann::json::object();
  std::vector<std::string> diagnostics;
  bool preconditions_ok = true;
  bool pass = false;

  const std::vector<double>& column(const std::string& key) const;
};

bool evaluate_verdict(const CheckReport& report);

/// x rounded to 12 significant digits (so that JSON output carries at most 12).
double round12(double x);
/// printf("%.12g"), with "nan"/"inf" spelled as in C.
std::string format12(double x);

nlohmann::json report_to_json(const CheckReport& report);
std::string report_to_csv(const CheckReport& report);

nlohmann::json samples_to_json(const std::vector<NevanlinnaSample>& samples);
/// Columns r, r_used, T, m, N, N<Q> for each level, n_count, N_poles.
std::string samples_to_csv(const std::vector<NevanlinnaSample>& samples);

nlohmann::json zeros_to_json(const ZeroSearch& search);
std::string zeros_to_csv(const ZeroSearch& search);

}  // namespace expnev::numeric

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace expnev::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitDiagnostic = 2;
inline constexpr int kExitUsage = 3;

struct Grid {
  double start = 0;
  double stop = 0;
  int count = 0;
  bool geometric = false;
};

/// Parses "A:B:N"; throws std::invalid_argument on malformed text or a grid
/// violating start < stop, count >= 2.
Grid parse_grid(const std::string& text, bool geometric);

struct RunConfig {
  /// "indep", "disc", ..., or "check <name>" for the check family.
  std::string command;
  std::vector<std::string> inputs;
  std::optional<Grid> grid;
  double r = 0;
  double tol = 1e-9;
  std::vector<int> trunc = {1, 2};
  double eps = 0.05;
  std::string out;
  /// "", "text", "json" or "csv"; empty picks text for symbolic commands and
  /// csv for tabular ones.
  std::string format;
  int var = -1;
  std::string a = "1";
  int d = 2;
  std::string z0 = "1/2 + i/3";
};

/// Executes one command; artifact on `out` (or written atomically to
/// config.out together with a manifest), JSON-lines diagnostics on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: parses with CLI11 (including --config INI files) and
/// calls run().  Usage errors return kExitUsage.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace expnev::cli

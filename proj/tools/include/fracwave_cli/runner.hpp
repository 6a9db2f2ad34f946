#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracwave_cli/scenario.hpp"

namespace fracwave::cli {

/// Discrepancy between the convolution solution and the finite-difference
/// oracle at one output time, over the scenario grid.
struct OracleStats {
  double t = 0.0;
  double linf = 0.0;
  /// sqrt(sum diff^2 dx)
  double l2 = 0.0;
};

struct RunReport {
  std::filesystem::path directory;
  std::vector<std::filesystem::path> files;
  std::vector<OracleStats> oracle;
};

/// Runs a validated scenario and writes into output_dir/name:
///  - cauchy: u_t<T>.csv (x,u) and u_t<T>.svg per time; with oracle also
///    oracle_t<T>.csv (x,u_analytic,u_fd,abs_diff) and oracle_t<T>.svg;
///  - mwright: mwright.csv (x, one column per nu) and mwright.svg;
///  - summary.txt in both cases.
/// Every CSV starts with '#' metadata lines that embed the scenario, so the
/// CSV itself can be passed back to `fracwave run`.
/// Throws ScenarioError / DomainError (validation), NonConvergent, or
/// std::ios_base::failure / std::filesystem::filesystem_error (I/O).
/// Progress lines go to `log` when given.
RunReport run_scenario(const Scenario& s, std::ostream* log = nullptr);

}  // namespace fracwave::cli

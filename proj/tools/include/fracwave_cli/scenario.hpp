#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <fracwave/green.hpp>
#include <fracwave/signal.hpp>

namespace fracwave::cli {

/// Parse or validation failure in a scenario description.
class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ScenarioKind {
  /// u(x, t) of the Cauchy problem for given f and g.
  Cauchy,
  /// Profiles M_nu(|x|) at t = 1 for a list of nu.
  MWright,
};

/// A reproducible run: order, initial signals, output grid and times.
///
/// Text form (`#` starts a comment, later keys override earlier ones):
///
///   [scenario]
///   name = fig10-box-nu075
///   kind = cauchy            # or mwright (then: nus = 0, 0.25, ...)
///   nu = 0.75                # or alpha = 1.5
///   times = 0.5, 1
///   tol = 1e-10
///   oracle = false
///   output_dir = out
///   [grid]
///   x_min = 0
///   x_max = 3.5
///   dx = 0.01
///   [signal.f]
///   kind = box               # zero | delta | box | sampled
///   left = -1
///   right = 1
///   height = 1
///   [signal.g]
///   kind = zero
///   [oracle]
///   dx = 0.02
///   dt = 0.001
struct Scenario {
  std::string name = "scenario";
  std::string description;
  ScenarioKind kind = ScenarioKind::Cauchy;
  FracOrder order = FracOrder::from_nu(0.5);
  std::vector<double> nus;
  Signal f;
  Signal g;
  double x_min = -5.0;
  double x_max = 5.0;
  double dx = 0.01;
  std::vector<double> times{1.0};
  double tol = 1e-10;
  bool oracle = false;
  double oracle_dx = 0.02;
  double oracle_dt = 1e-3;
  std::filesystem::path output_dir = "out";

  /// Throws ScenarioError ("invalid grid: ...", "invalid times: ...", ...).
  void validate() const;
};

/// Parses the text form. Lines starting with "#|" are treated as an
/// embedded scenario: when present only they are read, so the metadata
/// header of any CSV written by run_scenario is itself a valid input.
Scenario parse_scenario(std::string_view text);

Scenario load_scenario(const std::filesystem::path& path);

/// Canonical text form; numbers are printed with 17 significant digits so
/// parse_scenario(to_text(s)) reproduces s exactly.
std::string to_text(const Scenario& s);

struct BuiltinInfo {
  std::string name;
  std::string description;
};

std::vector<BuiltinInfo> list_scenarios();

/// Builtin by name, or nullopt.
std::optional<Scenario> builtin_scenario(std::string_view name);

}  // namespace fracwave::cli

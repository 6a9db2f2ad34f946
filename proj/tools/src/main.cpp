// fracwave command-line front end.
//
//   fracwave run <scenario-file|builtin> [--out DIR] [--tol X] [--oracle]
//   fracwave list
//   fracwave show <builtin>
//   fracwave eval mwright --nu N --z Z
//   fracwave eval green --nu N --x X --t T [--kind cauchy|second|signaling]
//
// Exit codes: 0 success, 1 validation error, 2 non-convergence, 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

#include <fracwave/errors.hpp>
#include <fracwave/green.hpp>
#include <fracwave/specfun.hpp>
#include <fracwave/version.hpp>

#include "fracwave_cli/format.hpp"
#include "fracwave_cli/runner.hpp"
#include "fracwave_cli/scenario.hpp"

namespace fs = std::filesystem;
using namespace fracwave;

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kNonConvergent = 2, kIo = 3 };

int fail(ExitCode code, const char* kind, const std::string& msg) {
  std::cerr << "error[" << kind << "]: " << msg << "\n";
  return code;
}

cli::Scenario resolve(const std::string& arg) {
  if (fs::exists(arg)) return cli::load_scenario(arg);
  if (auto s = cli::builtin_scenario(arg)) return *s;
  throw cli::ScenarioError("no scenario file or builtin named '" + arg + "' (see `fracwave list`)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional diffusion-wave toolkit: M-Wright functions, Green functions and Cauchy problems"};
  app.set_version_flag("--version", std::string("fracwave ") + kVersion);
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a scenario file or builtin and write CSV and SVG output");
  std::string target;
  std::string out_dir;
  double tol = 0.0;
  bool oracle = false;
  bool quiet = false;
  run->add_option("scenario", target, "Scenario file (or CSV written by a previous run) or builtin name")
      ->required();
  run->add_option("--out", out_dir, "Output directory (overrides output_dir)");
  run->add_option("--tol", tol, "Per-point quadrature tolerance (overrides tol)");
  run->add_flag("--oracle", oracle, "Also run the finite-difference solver and report the discrepancy");
  run->add_flag("-q,--quiet", quiet, "Only print errors");

  auto* list = app.add_subcommand("list", "List builtin scenarios");

  auto* show = app.add_subcommand("show", "Print a builtin scenario in scenario-file form");
  std::string show_name;
  show->add_option("name", show_name, "Builtin name")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a single special-function value");
  eval->require_subcommand(1);
  double nu = 0.0, z = 0.0, x = 0.0, t = 1.0, eval_tol = kDefaultTol;
  std::string kind = "cauchy";
  auto* ev_m = eval->add_subcommand("mwright", "M_nu(z)");
  ev_m->add_option("--nu", nu, "Order nu in [0, 1)")->required();
  ev_m->add_option("--z", z, "Argument z >= 0")->required();
  ev_m->add_option("--tol", eval_tol, "Absolute tolerance");
  auto* ev_g = eval->add_subcommand("green", "Green function G(x, t)");
  ev_g->add_option("--nu", nu, "Order nu = alpha/2")->required();
  ev_g->add_option("--x", x, "Position")->required();
  ev_g->add_option("--t", t, "Time > 0")->required();
  ev_g->add_option("--kind", kind, "cauchy, second (time primitive) or signaling")
      ->check(CLI::IsMember({"cauchy", "second", "signaling"}));
  ev_g->add_option("--tol", eval_tol, "Absolute tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kValidation, "usage", e.what());
  }

  try {
    if (*list) {
      for (const auto& b : cli::list_scenarios()) std::cout << b.name << "  " << b.description << "\n";
      return kOk;
    }
    if (*show) {
      const auto s = cli::builtin_scenario(show_name);
      if (!s) throw cli::ScenarioError("unknown builtin '" + show_name + "'");
      std::cout << cli::to_text(*s);
      return kOk;
    }
    if (*ev_m) {
      std::cout << cli::format_exact(m_wright(MWrightOrder(nu), z, eval_tol).value) << "\n";
      return kOk;
    }
    if (*ev_g) {
      const FracOrder order = FracOrder::from_nu(nu);
      double v = 0.0;
      if (kind == "cauchy") {
        v = green_cauchy(order, x, t, eval_tol);
      } else if (kind == "second") {
        v = green_cauchy_second(order, x, t, eval_tol);
      } else {
        v = green_signaling(order, x, t, eval_tol);
      }
      std::cout << cli::format_exact(v) << "\n";
      return kOk;
    }
    if (*run) {
      cli::Scenario s = resolve(target);
      if (!out_dir.empty()) s.output_dir = out_dir;
      if (run->count("--tol")) s.tol = tol;
      if (oracle) s.oracle = true;
      cli::run_scenario(s, quiet ? nullptr : &std::cout);
      return kOk;
    }
  } catch (const NonConvergent& e) {
    return fail(kNonConvergent, "nonconvergent", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kValidation, "validation", e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(kIo, "io", e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(kIo, "io", e.what());
  } catch (const std::exception& e) {
    return fail(kNonConvergent, "runtime", e.what());
  }
  return kOk;
}

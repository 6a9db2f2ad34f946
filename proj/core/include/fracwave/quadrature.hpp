#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace fracwave {

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 0.0;
  std::size_t max_intervals = 500;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = true;
};

/// Adaptive 21-point Gauss-Kronrod integration of f over [a, b] (QUADPACK QAG).
/// Never throws on non-convergence; check `converged`.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts = {});

/// Integrates over consecutive panels [p0,p1], [p1,p2], ... splitting the
/// absolute tolerance evenly. Breakpoints must be non-decreasing; empty
/// panels are skipped.
QuadResult integrate_panels(const std::function<double(double)>& f,
                            std::span<const double> breakpoints, const QuadOptions& opts = {});

}  // namespace fracwave

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "fracwave/green.hpp"
#include "fracwave/signal.hpp"

namespace fracwave {

enum class Provenance { AnalyticConvolution, FiniteDifference, Characteristics };

std::string_view to_string(Provenance p) noexcept;

/// u(x, t; nu) sampled on a space grid at a list of output times.
struct SolutionField {
  double nu = 0.0;
  std::vector<double> x_grid;
  std::vector<double> times;
  /// Row-major, one row of x_grid.size() values per output time.
  std::vector<double> values;
  Provenance provenance = Provenance::AnalyticConvolution;

  double at(std::size_t time_index, std::size_t x_index) const {
    return values[time_index * x_grid.size() + x_index];
  }
  std::span<const double> row(std::size_t time_index) const {
    return {values.data() + time_index * x_grid.size(), x_grid.size()};
  }
  /// Linear interpolation in x at output time `time_index`; zero outside the grid.
  double interpolate(std::size_t time_index, double x) const;

  /// Throws DomainError if dimensions disagree or any value is non-finite.
  void validate() const;
};

/// x_min, x_min + dx, ..., up to x_max (inclusive when it lands on the grid
/// within 1e-9 dx).
std::vector<double> uniform_grid(double x_min, double x_max, double dx);

enum class GreenKernel { First, Second };

inline constexpr double kDefaultConvolutionTol = 1e-10;

/// One point of the space convolution int G(xi, t) f(x - xi) dxi with the
/// first (G_C) or second (time primitive of G_C) Cauchy kernel.
/// Delta signals are evaluated directly; box and sampled signals are
/// integrated over their support with the kernel split at xi = 0 and at its
/// similarity peak, and truncated where the kernel drops below tol/100.
double convolve_green(const FracOrder& order, GreenKernel kernel, const Signal& f, double x,
                      double t, double tol = kDefaultConvolutionTol);

/// Cauchy problem D_t^alpha u = u_xx, u(x, 0) = f, u_t(x, 0) = g (only for nu > 1/2).
///  - nu <= 1/2: u = G_C * f
///  - 1/2 < nu < 1: u = G_C * f + G_C^(2) * g
///  - nu = 1: d'Alembert, u = [f(x-t) + f(x+t)]/2 + (1/2) int_{x-t}^{x+t} g
/// Points are evaluated independently and in parallel.
SolutionField solve_cauchy(const FracOrder& order, const Signal& f, const Signal& g,
                           std::span<const double> x_grid, std::span<const double> times,
                           double tol = kDefaultConvolutionTol);

}  // namespace fracwave

#pragma once

#include <cstddef>
#include <span>

#include "fracwave/green.hpp"
#include "fracwave/signal.hpp"
#include "fracwave/solver.hpp"

namespace fracwave {

/// Second derivative in x: the 3-point central difference (second order) or
/// its compact fourth-order variant (I + dx^2/12 delta_x^2)^{-1} delta_x^2,
/// which keeps the tridiagonal structure.
enum class SpaceScheme { Central, Compact };

/// Space-time grid for the finite-difference solver of D_t^alpha u = u_xx.
/// Nodes x_min + i dx, i = 0..N, with u = 0 at both ends.
struct FDGrid {
  double dx = 0.02;
  double dt = 1e-3;
  double x_min = -10.0;
  double x_max = 10.0;
  std::size_t n_steps = 1000;
  FracOrder alpha = FracOrder::from_alpha(1.0);
  /// Time weight of the space operator for alpha > 1: u_xx is taken at
  /// theta u^n + (1 - theta) u^{n-1}. 1/2 is the centred (Sun-Wu) choice.
  double theta = 0.5;
  SpaceScheme space = SpaceScheme::Compact;

  std::size_t intervals() const;
  double final_time() const noexcept { return dt * static_cast<double>(n_steps); }

  /// Throws UnstableGrid unless dx, dt > 0, x_max > x_min, n_steps >= 1,
  /// at least 3 interior nodes, and theta in [1/2, 1] (the implicit family
  /// is unconditionally stable only there).
  void validate() const;

  /// Symmetric grid covering |x| <= x_half plus a far-field margin
  /// far_field_width(nu, 1e-8) * t_final^nu, snapped so that x = 0 is a node.
  static FDGrid covering(const FracOrder& order, double x_half, double t_final, double dx,
                         double dt);
};

/// Finite-difference solution of the Cauchy problem on a truncated domain:
/// L1 Caputo time discretization (order alpha for alpha <= 1, order alpha-1
/// on the velocity for alpha > 1), a three-point space operator (see
/// SpaceScheme), one constant tridiagonal solve per step and the full
/// memory sum.
/// Deltas become weight/dx at their node; other signals enter as cell
/// averages. `output_times` must be multiples of dt within the run
/// (empty means the final time only).
SolutionField fd_solve(const FDGrid& grid, const Signal& f0, const Signal& g0,
                       std::span<const double> output_times = {});

}  // namespace fracwave

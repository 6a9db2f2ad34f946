#include "fracwave/fd_solve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "fracwave/errors.hpp"

namespace fracwave {

std::size_t FDGrid::intervals() const {
  return static_cast<std::size_t>(std::llround((x_max - x_min) / dx));
}

void FDGrid::validate() const {
  auto fail = [](const std::string& why) { throw UnstableGrid("invalid finite-difference grid: " + why); };
  if (!(dx > 0.0) || !std::isfinite(dx)) fail("dx must be positive");
  if (!(dt > 0.0) || !std::isfinite(dt)) fail("dt must be positive");
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) fail("x_min must be < x_max");
  if (n_steps < 1) fail("n_steps must be >= 1");
  if (intervals() < 4) fail("fewer than 3 interior nodes");
  const double span = static_cast<double>(intervals()) * dx;
  if (std::abs(span - (x_max - x_min)) > 1e-6 * dx) fail("x range is not a multiple of dx");
  if (!(theta >= 0.5 && theta <= 1.0)) fail("theta outside [1/2, 1]");
}

FDGrid FDGrid::covering(const FracOrder& order, double x_half, double t_final, double dx, double dt) {
  if (!(t_final > 0.0)) throw DomainError("covering grid: final time must be positive");
  if (!(dx > 0.0) || !(dt > 0.0)) throw UnstableGrid("invalid finite-difference grid: steps must be positive");
  const double nu = order.nu();
  // beyond the wave cone nothing propagates at nu = 1
  const double width = nu < 1.0 ? far_field_width(nu, 1e-8) : 1.5;
  const double half = std::abs(x_half) + width * std::pow(t_final, nu);
  const double nodes = std::ceil(half / dx);

  FDGrid g;
  g.dx = dx;
  g.dt = dt;
  g.x_min = -nodes * dx;
  g.x_max = nodes * dx;
  g.n_steps = static_cast<std::size_t>(std::llround(t_final / dt));
  if (std::abs(static_cast<double>(g.n_steps) * dt - t_final) > 1e-9 * std::max(1.0, t_final)) {
    throw UnstableGrid("invalid finite-difference grid: final time is not a multiple of dt");
  }
  g.alpha = order;
  return g;
}

namespace {

double forward_power_difference(double p, std::size_t j) {
  if (j == 0) return 1.0;
  const double x = static_cast<double>(j);
  return std::pow(x, p) * std::expm1(p * std::log1p(1.0 / x));
}

// Constant symmetric tridiagonal system: diag on the diagonal, off on both neighbours.
class TridiagonalSolver {
 public:
  TridiagonalSolver(std::size_t n, double diag, double off) : off_(off), cprime_(n), inv_denom_(n) {
    double c_prev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double denom = diag - off * c_prev;
      inv_denom_[i] = 1.0 / denom;
      cprime_[i] = off * inv_denom_[i];
      c_prev = cprime_[i];
    }
  }

  void solve(std::vector<double>& rhs) const {
    const std::size_t n = rhs.size();
    rhs[0] *= inv_denom_[0];
    for (std::size_t i = 1; i < n; ++i) rhs[i] = (rhs[i] - off_ * rhs[i - 1]) * inv_denom_[i];
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= cprime_[i] * rhs[i + 1];
  }

 private:
  double off_;
  std::vector<double> cprime_;
  std::vector<double> inv_denom_;
};

// Interior-node representation (nodes 1..N-1) of an initial signal.
std::vector<double> discretize(const Signal& s, const FDGrid& grid, const char* name) {
  const std::size_t n = grid.intervals();
  std::vector<double> u(n - 1, 0.0);
  if (s.is_zero()) return u;
  if (const auto* d = std::get_if<DeltaSignal>(&s.variant())) {
    const double pos = (d->x0 - grid.x_min) / grid.dx;
    const double k = std::round(pos);
    if (std::abs(pos - k) > 1e-6) {
      std::ostringstream os;
      os << name << ": delta at x=" << d->x0 << " is not on a grid node";
      throw DeltaNotRepresentable(os.str());
    }
    if (k < 1.0 || k > static_cast<double>(n - 1)) {
      throw DeltaNotRepresentable(std::string(name) + ": delta lies outside the interior nodes");
    }
    u[static_cast<std::size_t>(k) - 1] = d->weight / grid.dx;
    return u;
  }
  for (std::size_t i = 1; i < n; ++i) {
    const double x = grid.x_min + grid.dx * static_cast<double>(i);
    u[i - 1] = s.integral(x - 0.5 * grid.dx, x + 0.5 * grid.dx) / grid.dx;
  }
  return u;
}

std::vector<std::size_t> output_steps(const FDGrid& grid, std::span<const double> times) {
  std::vector<std::size_t> steps;
  if (times.empty()) {
    steps.push_back(grid.n_steps);
    return steps;
  }
  for (double t : times) {
    const double k = std::round(t / grid.dt);
    if (!(t > 0.0) || std::abs(k * grid.dt - t) > 1e-9 * std::max(1.0, t) || k < 1.0 ||
        k > static_cast<double>(grid.n_steps)) {
      std::ostringstream os;
      os << "fd_solve: output time " << t << " is not a step of the run";
      throw DomainError(os.str());
    }
    steps.push_back(static_cast<std::size_t>(k));
  }
  return steps;
}

// out = a (u_{i-1} + u_{i+1}) + b u_i with zero Dirichlet ends
void three_point(const std::vector<double>& u, double a, double b, std::vector<double>& out) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? u[i - 1] : 0.0;
    const double right = i + 1 < n ? u[i + 1] : 0.0;
    out[i] = a * (left + right) + b * u[i];
  }
}

}  // namespace

SolutionField fd_solve(const FDGrid& grid, const Signal& f0, const Signal& g0,
                       std::span<const double> output_times) {
  grid.validate();
  const double alpha = grid.alpha.alpha();
  if (!g0.is_zero() && alpha <= 1.0) {
    throw DomainError("fd_solve: a nonzero initial velocity needs alpha > 1");
  }
  const auto steps = output_steps(grid, output_times);

  const std::size_t n_int = grid.intervals() - 1;
  const double h = grid.dt;
  const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
  const std::size_t n_steps = *std::max_element(steps.begin(), steps.end());

  std::vector<double> u = discretize(f0, grid, "f0");
  std::vector<double> v = discretize(g0, grid, "g0");  // velocity, used for alpha > 1

  SolutionField out;
  out.nu = grid.alpha.nu();
  out.provenance = Provenance::FiniteDifference;
  out.x_grid.resize(n_int + 2);
  for (std::size_t i = 0; i < out.x_grid.size(); ++i) {
    out.x_grid[i] = grid.x_min + grid.dx * static_cast<double>(i);
  }
  for (std::size_t s : steps) out.times.push_back(h * static_cast<double>(s));
  out.values.assign(out.times.size() * out.x_grid.size(), 0.0);
  auto record = [&](std::size_t step) {
    for (std::size_t k = 0; k < steps.size(); ++k) {
      if (steps[k] != step) continue;
      std::copy(u.begin(), u.end(), out.values.begin() + k * out.x_grid.size() + 1);
    }
  };

  const bool velocity_form = alpha > 1.0;
  const double beta = velocity_form ? alpha - 1.0 : alpha;
  const double theta = velocity_form ? grid.theta : 1.0;
  // B D_t^alpha u = delta_x^2 u with B = I (central) or I + dx^2/12 delta_x^2 (compact)
  const double b_off = grid.space == SpaceScheme::Compact ? 1.0 / 12.0 : 0.0;
  const double b_diag = 1.0 - 2.0 * b_off;

  // L1 weights w_j = (j+1)^{1-beta} - j^{1-beta}
  std::vector<double> w(n_steps + 1);
  for (std::size_t j = 0; j <= n_steps; ++j) w[j] = forward_power_difference(1.0 - beta, j);
  const double c = std::pow(h, -beta) / std::tgamma(2.0 - beta);
  // velocity form: c acts on v^n = (u^n - u^{n-1})/h
  const double lead = velocity_form ? c / h : c;
  const TridiagonalSolver solver(n_int, lead * b_diag + 2.0 * theta * inv_dx2,
                                lead * b_off - theta * inv_dx2);

  // history[k-1] = increment of u (alpha <= 1) or of v (alpha > 1) at step k
  std::vector<double> history(n_steps * n_int);
  std::vector<double> memory(n_int);
  std::vector<double> rhs(n_int);
  std::vector<double> lap(n_int);
  std::vector<double> tmp(n_int);
  std::vector<double> u_prev(n_int);

  for (std::size_t n = 1; n <= n_steps; ++n) {
    std::fill(memory.begin(), memory.end(), 0.0);
    for (std::size_t k = 1; k < n; ++k) {
      const double wk = w[n - k];
      const double* inc = &history[(k - 1) * n_int];
      for (std::size_t i = 0; i < n_int; ++i) memory[i] += wk * inc[i];
    }

    if (velocity_form) {
      for (std::size_t i = 0; i < n_int; ++i) tmp[i] = lead * u[i] + c * v[i] - c * memory[i];
      three_point(tmp, b_off, b_diag, rhs);
      if (theta < 1.0) {
        three_point(u, inv_dx2, -2.0 * inv_dx2, lap);
        for (std::size_t i = 0; i < n_int; ++i) rhs[i] += (1.0 - theta) * lap[i];
      }
    } else {
      for (std::size_t i = 0; i < n_int; ++i) tmp[i] = c * u[i] - c * memory[i];
      three_point(tmp, b_off, b_diag, rhs);
    }
    solver.solve(rhs);

    u_prev = u;
    u = rhs;
    double* inc = &history[(n - 1) * n_int];
    if (velocity_form) {
      for (std::size_t i = 0; i < n_int; ++i) {
        const double v_new = (u[i] - u_prev[i]) / h;
        inc[i] = v_new - v[i];
        v[i] = v_new;
      }
    } else {
      for (std::size_t i = 0; i < n_int; ++i) inc[i] = u[i] - u_prev[i];
    }
    record(n);
  }
  return out;
}

}  // namespace fracwave

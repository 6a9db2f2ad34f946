#include "fracwave/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracwave/errors.hpp"
#include "fracwave/quadrature.hpp"
#include "fracwave/specfun.hpp"
#include "parallel.hpp"

namespace fracwave {

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::AnalyticConvolution:
      return "analytic-convolution";
    case Provenance::FiniteDifference:
      return "finite-difference";
    case Provenance::Characteristics:
      return "characteristics";
  }
  return "unknown";
}

double SolutionField::interpolate(std::size_t time_index, double x) const {
  const auto r = row(time_index);
  if (x_grid.empty() || x < x_grid.front() || x > x_grid.back()) return 0.0;
  const auto it = std::upper_bound(x_grid.begin(), x_grid.end(), x);
  if (it == x_grid.end()) return r.back();
  const auto hi = static_cast<std::size_t>(it - x_grid.begin());
  if (hi == 0) return r.front();
  const std::size_t lo = hi - 1;
  const double w = (x - x_grid[lo]) / (x_grid[hi] - x_grid[lo]);
  return (1.0 - w) * r[lo] + w * r[hi];
}

void SolutionField::validate() const {
  if (values.size() != x_grid.size() * times.size()) {
    throw DomainError("solution field: values do not match grid dimensions");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("solution field: non-finite value");
  }
}

std::vector<double> uniform_grid(double x_min, double x_max, double dx) {
  if (!(dx > 0.0) || !std::isfinite(dx)) throw DomainError("invalid grid: dx must be positive");
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw DomainError("invalid grid: x_min must be < x_max");
  }
  const double span = (x_max - x_min) / dx;
  const auto n = static_cast<std::size_t>(std::floor(span + 1e-9));
  std::vector<double> grid(n + 1);
  for (std::size_t i = 0; i <= n; ++i) grid[i] = x_min + dx * static_cast<double>(i);
  return grid;
}

namespace {

double signal_sup_norm(const Signal& f) {
  return std::visit(
      [](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BoxSignal>) {
          return std::abs(s.height);
        } else if constexpr (std::is_same_v<T, SampledSignal>) {
          double m = 0.0;
          for (double v : s.values) m = std::max(m, std::abs(v));
          return m;
        } else if constexpr (std::is_same_v<T, DeltaSignal>) {
          return std::abs(s.weight);
        } else {
          return 0.0;
        }
      },
      f.variant());
}

// Smallest z >= start with profile(z) <= eps, assuming decay past `start`.
template <class Profile>
double decay_radius(Profile&& profile, double start, double eps) {
  double lo = start;
  if (profile(lo) <= eps) return lo;
  double hi = 2.0 * lo + 1.0;
  while (profile(hi) > eps) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw NonConvergent("kernel does not decay below the truncation threshold");
  }
  for (int i = 0; i < 50 && hi - lo > 1e-4 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (profile(mid) > eps ? lo : hi) = mid;
  }
  return hi;
}

// A Cauchy kernel frozen at one time level.
class Kernel {
 public:
  Kernel(const FracOrder& order, GreenKernel kind, double t, double f_sup, double tol)
      : mw_(order.nu()), kind_(kind), nu_(order.nu()), tn_(std::pow(t, order.nu())) {
    if (kind == GreenKernel::First) {
      if (!(nu_ < 1.0)) throw DomainError("convolve_green: first kernel needs nu in (0, 1)");
      scale_ = 1.0 / (2.0 * tn_);
    } else {
      if (!(nu_ > 0.5 && nu_ < 1.0)) {
        throw DomainError("convolve_green: second kernel needs nu in (1/2, 1)");
      }
      scale_ = 0.5 * std::pow(t, 1.0 - nu_);
    }
    peak_ = m_wright_peak(nu_);
    // neglected tail <= f_sup * (length scale) * int_Z^inf profile, kept below tol/100
    const double length = kind == GreenKernel::First ? 1.0 : std::max(t, 1.0);
    const double eps = tol / (100.0 * std::max(f_sup, 1.0) * length);
    auto profile = [this](double z) { return this->profile(z); };
    radius_ = decay_radius(profile, std::max(peak_, 1.0), eps) * tn_;
  }

  double profile(double z) const {
    return kind_ == GreenKernel::First ? m_wright(mw_, z).value
                                       : m_wright_primitive(mw_, z).value;
  }

  double operator()(double xi) const { return scale_ * profile(std::abs(xi) / tn_); }

  double radius() const noexcept { return radius_; }

  // kernel features in xi: the cusp at 0 and the similarity peaks for nu > 1/2
  std::vector<double> features() const {
    std::vector<double> pts{0.0};
    if (nu_ > 0.5) {
      for (double z : {1.0, peak_}) {
        pts.push_back(z * tn_);
        pts.push_back(-z * tn_);
      }
    }
    return pts;
  }

 private:
  MWrightOrder mw_;
  GreenKernel kind_;
  double nu_;
  double tn_;
  double scale_ = 1.0;
  double peak_ = 0.0;
  double radius_ = 0.0;
};

double convolve_with(const Kernel& kernel, const Signal& f, double x, double tol) {
  if (f.is_zero()) return 0.0;
  if (const auto* d = std::get_if<DeltaSignal>(&f.variant())) {
    return d->weight * kernel(x - d->x0);
  }

  const auto [s_lo, s_hi] = f.support();
  const double lo = std::max(s_lo, x - kernel.radius());
  const double hi = std::min(s_hi, x + kernel.radius());
  if (!(hi > lo)) return 0.0;

  std::vector<double> pts{lo, hi};
  for (double xi : kernel.features()) pts.push_back(x - xi);
  // every kink of the signal becomes a panel edge, so each panel is smooth
  const auto sig = f.breakpoints();
  pts.insert(pts.end(), sig.begin(), sig.end());
  std::erase_if(pts, [lo, hi](double p) { return p < lo || p > hi; });
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto integrand = [&](double y) { return kernel(x - y) * f.value_at(y); };
  QuadOptions q;
  q.abs_tol = 0.9 * tol;
  q.max_intervals = 200;
  const QuadResult r = integrate_panels(integrand, pts, q);
  if (!r.converged) {
    std::ostringstream os;
    os.precision(17);
    os << "convolution at x=" << x << " did not reach tol " << tol << " (estimate "
       << r.abs_error << ")";
    throw NonConvergent(os.str());
  }
  return r.value;
}

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("output times must be finite and > 0");
}

void check_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive");
}

}  // namespace

double convolve_green(const FracOrder& order, GreenKernel kernel, const Signal& f, double x,
                      double t, double tol) {
  check_time(t);
  check_tol(tol);
  if (!std::isfinite(x)) throw DomainError("x must be finite");
  const Kernel k(order, kernel, t, signal_sup_norm(f), tol);
  return convolve_with(k, f, x, tol);
}

namespace {

SolutionField solve_wave(const Signal& f, const Signal& g, std::span<const double> x_grid,
                         std::span<const double> times) {
  if (f.is_delta() && !f.is_zero()) {
    throw DomainError("nu = 1 with a delta initial value gives travelling deltas, not point values");
  }
  SolutionField out;
  out.nu = 1.0;
  out.x_grid.assign(x_grid.begin(), x_grid.end());
  out.times.assign(times.begin(), times.end());
  out.values.resize(x_grid.size() * times.size());
  out.provenance = Provenance::Characteristics;
  for (std::size_t ti = 0; ti < times.size(); ++ti) {
    const double t = times[ti];
    for (std::size_t xi = 0; xi < x_grid.size(); ++xi) {
      const double x = x_grid[xi];
      double u = 0.5 * (f.value_at(x - t) + f.value_at(x + t));
      u += 0.5 * g.integral(x - t, x + t);
      out.values[ti * x_grid.size() + xi] = u;
    }
  }
  return out;
}

}  // namespace

SolutionField solve_cauchy(const FracOrder& order, const Signal& f, const Signal& g,
                           std::span<const double> x_grid, std::span<const double> times,
                           double tol) {
  check_tol(tol);
  for (double t : times) check_time(t);
  for (double x : x_grid) {
    if (!std::isfinite(x)) throw DomainError("x grid must be finite");
  }
  const double nu = order.nu();
  if (!g.is_zero() && nu <= 0.5) {
    throw DomainError("a nonzero initial velocity g needs nu > 1/2 (alpha > 1)");
  }
  if (nu == 1.0) return solve_wave(f, g, x_grid, times);

  SolutionField out;
  out.nu = nu;
  out.x_grid.assign(x_grid.begin(), x_grid.end());
  out.times.assign(times.begin(), times.end());
  out.values.resize(x_grid.size() * times.size());
  out.provenance = Provenance::AnalyticConvolution;

  const bool use_g = !g.is_zero();
  const double f_sup = signal_sup_norm(f);
  const double g_sup = signal_sup_norm(g);
  std::vector<Kernel> first;
  std::vector<Kernel> second;
  for (double t : times) {
    first.emplace_back(order, GreenKernel::First, t, f_sup, tol);
    if (use_g) second.emplace_back(order, GreenKernel::Second, t, g_sup, tol);
  }

  const double term_tol = use_g ? 0.5 * tol : tol;
  const std::size_t nx = x_grid.size();
  detail::parallel_for(out.values.size(), [&](std::size_t k) {
    const std::size_t ti = k / nx;
    const double x = x_grid[k % nx];
    double u = 0.0;
    if (f.is_delta()) {
      const auto& d = std::get<DeltaSignal>(f.variant());
      u = d.weight * green_cauchy(order, x - d.x0, times[ti]);
    } else {
      u = convolve_with(first[ti], f, x, term_tol);
    }
    if (use_g) u += convolve_with(second[ti], g, x, term_tol);
    out.values[k] = u;
  });
  return out;
}

}  // namespace fracwave

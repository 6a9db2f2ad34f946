#pragma once

#include <cstddef>
#include <vector>

namespace fracwave {

/// Uniform samples f(t0 + k dt), k = 0..n-1.
class SampledFunction {
 public:
  SampledFunction(double t0, double dt, std::vector<double> values);

  /// Samples fn on [t0, t0 + (n-1) dt].
  template <class Fn>
  static SampledFunction sample(Fn&& fn, double t0, double dt, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = fn(t0 + dt * static_cast<double>(k));
    return SampledFunction(t0, dt, std::move(v));
  }

  double t0() const noexcept { return t0_; }
  double dt() const noexcept { return dt_; }
  std::size_t size() const noexcept { return values_.size(); }
  double time(std::size_t k) const noexcept { return t0_ + dt_ * static_cast<double>(k); }
  double operator[](std::size_t k) const { return values_[k]; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  double t0_;
  double dt_;
  std::vector<double> values_;
};

/// Riemann-Liouville fractional integral I^alpha f, alpha > 0, by product
/// integration of the piecewise-linear interpolant against (t - tau)^{alpha-1}
/// (exact kernel moments). Exact for piecewise-linear f; first sample is 0.
SampledFunction fractional_integral(const SampledFunction& f, double alpha);

/// Caputo derivative I^{n-alpha} f^{(n)}, 0 < alpha <= 2.
///  - alpha in (0, 1): L1 scheme.
///  - alpha in (1, 2): L1 scheme of order alpha-1 applied to second-order
///    derivative estimates (central inside, one-sided at the ends).
///  - alpha = 1, 2: ordinary second-order finite differences.
SampledFunction caputo_derivative(const SampledFunction& f, double alpha);

struct RlDerivative {
  SampledFunction samples;
  /// True when the t = 0 sample is singular (f(0) != 0, or f'(0) != 0 for
  /// alpha > 1); samples[0] is then NaN.
  bool singular_origin = false;
};

/// Riemann-Liouville derivative d^n/dt^n I^{n-alpha} f, alpha in (0, 2].
/// First-order Grunwald-Letnikov weights applied to f - f(0) - f'(0) t,
/// plus the exact derivative of the subtracted linear part
///   f(0) t^{-alpha} / Gamma(1-alpha) + f'(0) t^{1-alpha} / Gamma(2-alpha),
/// with f'(0) from a second-order one-sided difference. alpha = 1, 2 fall
/// back to finite differences.
RlDerivative rl_derivative(const SampledFunction& f, double alpha);

}  // namespace fracwave

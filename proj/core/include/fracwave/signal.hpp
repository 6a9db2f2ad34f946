#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fracwave {

/// Identically zero initial condition.
struct ZeroSignal {};

/// weight * delta(x - x0).
struct DeltaSignal {
  double x0 = 0.0;
  double weight = 1.0;
};

/// height on the closed interval [left, right], zero elsewhere.
struct BoxSignal {
  double left = -1.0;
  double right = 1.0;
  double height = 1.0;
};

/// Samples values[i] at x0 + i*dx, piecewise-linear in between and zero
/// outside [x0, x0 + (n-1) dx].
struct SampledSignal {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<double> values;
};

/// Initial condition f(x) or g(x) of the Cauchy problem.
class Signal {
 public:
  using Variant = std::variant<ZeroSignal, DeltaSignal, BoxSignal, SampledSignal>;

  Signal() = default;
  Signal(ZeroSignal s) : v_(s) {}
  Signal(DeltaSignal s);
  Signal(BoxSignal s);
  Signal(SampledSignal s);

  static Signal zero() { return Signal(); }
  static Signal delta(double x0 = 0.0, double weight = 1.0) { return DeltaSignal{x0, weight}; }
  static Signal box(double left = -1.0, double right = 1.0, double height = 1.0) {
    return BoxSignal{left, right, height};
  }
  static Signal sampled(double x0, double dx, std::vector<double> values) {
    return SampledSignal{x0, dx, std::move(values)};
  }

  const Variant& variant() const noexcept { return v_; }
  bool is_delta() const noexcept { return std::holds_alternative<DeltaSignal>(v_); }

  /// True when the signal is zero everywhere (including zero-height boxes).
  bool is_zero() const noexcept;

  /// Point value; box is closed, sampled is interpolated. Throws DomainError for deltas.
  double value_at(double x) const;

  /// Closed support [lo, hi]; {0, 0} for the zero signal.
  std::pair<double, double> support() const noexcept;

  /// Integral over the real line.
  double mass() const noexcept;

  /// Integral over [a, b], exact for every kind (delta counts if a <= x0 <= b).
  double integral(double a, double b) const noexcept;

  /// Interior points where the signal has kinks or jumps.
  std::vector<double> breakpoints() const;

  /// Even about x = 0.
  bool is_even(double tol = 0.0) const;

  /// One-line description, e.g. "box left=-1 right=1 height=1".
  std::string describe() const;

 private:
  Variant v_;
};

}  // namespace fracwave

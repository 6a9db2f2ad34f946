#pragma once

#include <cstddef>

namespace fracwave {

/// Default absolute tolerance used by the special-function evaluators.
inline constexpr double kDefaultTol = 1e-12;

/// Parameters (lambda, mu) of the Wright function
///   W_{lambda,mu}(z) = sum_n z^n / (n! Gamma(lambda n + mu)).
/// The series defines an entire function for lambda > -1.
class WrightParams {
 public:
  WrightParams(double lambda, double mu);

  double lambda() const noexcept { return lambda_; }
  double mu() const noexcept { return mu_; }

  /// First kind for lambda >= 0, second kind for -1 < lambda < 0.
  bool first_kind() const noexcept { return lambda_ >= 0.0; }

 private:
  double lambda_;
  double mu_;
};

/// Order nu in [0, 1) of the M-Wright function M_nu(z) = W_{-nu,1-nu}(-z).
class MWrightOrder {
 public:
  explicit MWrightOrder(double nu);

  double nu() const noexcept { return nu_; }
  WrightParams wright_params() const { return WrightParams(-nu_, 1.0 - nu_); }

 private:
  double nu_;
};

struct EvalResult {
  double value = 0.0;
  /// Bound on truncation plus accumulated rounding error actually achieved.
  double abs_error_bound = 0.0;
  /// Series terms summed, or integrand evaluations for the integral route.
  int terms_used = 1;
};

struct SeriesOptions {
  int max_terms = 250;
  /// Reject results whose magnitude falls below this fraction of the
  /// largest partial sum seen (catastrophic cancellation).
  double cancellation_ratio = 1e-8;
};

/// 1/Gamma(x), an entire function. Exactly zero at x = 0, -1, -2, ...
double reciprocal_gamma(double x) noexcept;

/// Wright function by compensated series summation.
/// Throws NonConvergent when the truncation bound plus rounding estimate
/// cannot be brought under `tol` within `opts.max_terms` terms, or when the
/// cancellation guard trips.
EvalResult wright(const WrightParams& params, double z, double tol = kDefaultTol,
                  const SeriesOptions& opts = {});

/// M_nu(z) via the alternating series only; NonConvergent outside the
/// series envelope (roughly z > 2.5 for nu = 0.75, z > 1.5 for nu = 0.85
/// at tol = 1e-12).
EvalResult m_wright_series(const MWrightOrder& order, double z, double tol = kDefaultTol,
                           const SeriesOptions& opts = {});

/// M_nu(z) for z > 0, nu in (0, 1) through the real integral
///   M_nu(z) = z^{nu/(1-nu)} / (pi (1-nu)) * int_0^pi K(phi) exp(-z^{1/(1-nu)} K(phi)) dphi,
///   K(phi) = (sin(nu phi)/sin phi)^{nu/(1-nu)} sin((1-nu) phi) / sin phi.
/// The integrand is positive, so the route is free of cancellation; it is
/// poorly conditioned only as z -> 0, where the series is used instead.
/// Throws NonConvergent when the quadrature error bound exceeds `tol`.
EvalResult m_wright_integral(const MWrightOrder& order, double z, double tol = kDefaultTol);

/// M_nu(z). Sums the series and switches to the integral representation
/// when the series cannot certify `tol` (large z, nu near 1).
EvalResult m_wright(const MWrightOrder& order, double z, double tol = kDefaultTol);

/// W_{-nu,2-nu}(-z): the similarity profile of the time primitive of the
/// Cauchy Green function. Series first, then for nu in (1/2, 1) the integral
///   (z^{(1-nu)/nu} / (nu pi)) int_0^pi K^{(1-nu)/nu} Gamma(a, z^{1/(1-nu)} K) dphi,
/// with a = (2 nu - 1)/nu and Gamma(a, x) the upper incomplete gamma function.
EvalResult m_wright_primitive(const MWrightOrder& order, double z, double tol = kDefaultTol);

/// Integral route of m_wright_primitive alone; requires nu in (1/2, 1), z > 0.
EvalResult m_wright_primitive_integral(const MWrightOrder& order, double z,
                                       double tol = kDefaultTol);

}  // namespace fracwave

#include "fracwave/fracops.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fracwave/errors.hpp"
#include "fracwave/specfun.hpp"

namespace fracwave {

SampledFunction::SampledFunction(double t0, double dt, std::vector<double> values)
    : t0_(t0), dt_(dt), values_(std::move(values)) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("sampled function: dt must be > 0");
  if (!std::isfinite(t0)) throw DomainError("sampled function: t0 must be finite");
  if (values_.size() < 2) throw DomainError("sampled function: needs at least 2 samples");
}

namespace {

// (j+1)^p - j^p without cancellation, j >= 0
double forward_power_difference(double p, std::size_t j) {
  if (j == 0) return 1.0;
  const double x = static_cast<double>(j);
  return std::pow(x, p) * std::expm1(p * std::log1p(1.0 / x));
}

void check_order(double alpha, double max_alpha, const char* what) {
  if (!(alpha > 0.0 && alpha <= max_alpha) || !std::isfinite(alpha)) {
    std::ostringstream os;
    os << what << ": order " << alpha << " outside (0, " << max_alpha << "]";
    throw DomainError(os.str());
  }
}

// L1 weights applied to backward differences of v: h^{-beta}/Gamma(2-beta) sum_j b_j (v_{n-j} - v_{n-j-1}).
std::vector<double> l1_caputo(const std::vector<double>& v, double h, double beta) {
  const std::size_t n = v.size();
  std::vector<double> b(n);
  for (std::size_t j = 0; j < n; ++j) b[j] = forward_power_difference(1.0 - beta, j);
  std::vector<double> diff(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) diff[k] = v[k] - v[k - 1];

  const double c = std::pow(h, -beta) / std::tgamma(2.0 - beta);
  std::vector<double> out(n, 0.0);
  for (std::size_t m = 1; m < n; ++m) {
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) s += b[j] * diff[m - j];
    out[m] = c * s;
  }
  return out;
}

// second-order first derivative: central inside, one-sided at the ends
std::vector<double> first_derivative(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  if (n == 2) {
    d[0] = d[1] = (f[1] - f[0]) / h;
    return d;
  }
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (std::size_t k = 1; k + 1 < n; ++k) d[k] = (f[k + 1] - f[k - 1]) / (2.0 * h);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  return d;
}

std::vector<double> second_derivative(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  if (n < 3) throw DomainError("second derivative needs at least 3 samples");
  const double h2 = h * h;
  std::vector<double> d(n);
  for (std::size_t k = 1; k + 1 < n; ++k) d[k] = (f[k + 1] - 2.0 * f[k] + f[k - 1]) / h2;
  if (n >= 4) {
    d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
    d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
  } else {
    d[0] = d[n - 1] = d[1];
  }
  return d;
}

}  // namespace

SampledFunction fractional_integral(const SampledFunction& f, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("fractional_integral: order must be > 0");
  }
  const std::size_t n = f.size();
  const double h = f.dt();
  const double p = alpha + 1.0;

  // d[j] = (j+1)^{alpha+1} - j^{alpha+1}; interior weights are d[m] - d[m-1]
  std::vector<double> d(n);
  for (std::size_t j = 0; j < n; ++j) d[j] = forward_power_difference(p, j);

  const double c = std::pow(h, alpha) / std::tgamma(alpha + 2.0);
  std::vector<double> out(n, 0.0);
  for (std::size_t m = 1; m < n; ++m) {
    const double mm = static_cast<double>(m);
    // (m-1)^{alpha+1} - (m-1-alpha) m^alpha, rearranged to avoid cancellation
    const double m_alpha = std::pow(mm, alpha);
    const double w0 = (mm - 1.0) * m_alpha * std::expm1(alpha * std::log1p(-1.0 / mm)) + alpha * m_alpha;
    double s = w0 * f[0] + f[m];
    for (std::size_t k = 1; k < m; ++k) s += (d[m - k] - d[m - k - 1]) * f[k];
    out[m] = c * s;
  }
  return SampledFunction(f.t0(), h, std::move(out));
}

SampledFunction caputo_derivative(const SampledFunction& f, double alpha) {
  check_order(alpha, 2.0, "caputo_derivative");
  const double h = f.dt();
  std::vector<double> out;
  if (alpha < 1.0) {
    out = l1_caputo(f.values(), h, alpha);
  } else if (alpha == 1.0) {
    out = first_derivative(f.values(), h);
  } else if (alpha < 2.0) {
    out = l1_caputo(first_derivative(f.values(), h), h, alpha - 1.0);
  } else {
    out = second_derivative(f.values(), h);
  }
  return SampledFunction(f.t0(), h, std::move(out));
}

RlDerivative rl_derivative(const SampledFunction& f, double alpha) {
  check_order(alpha, 2.0, "rl_derivative");
  const double h = f.dt();
  const auto& v = f.values();
  const std::size_t n = v.size();

  if (alpha == 1.0) return {SampledFunction(f.t0(), h, first_derivative(v, h)), false};
  if (alpha == 2.0) return {SampledFunction(f.t0(), h, second_derivative(v, h)), false};

  // Grunwald-Letnikov on r = f - f(0) - f'(0) t, plus the exact RL derivative
  // of the linear part; r vanishes to second order at 0, which keeps the
  // first-order rate down to t = dt
  const double f0 = v[0];
  const double f1 = first_derivative(v, h)[0];
  std::vector<double> r(n);
  for (std::size_t k = 0; k < n; ++k) r[k] = v[k] - f0 - f1 * h * static_cast<double>(k);

  std::vector<double> w(n);
  w[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) w[k] = w[k - 1] * (1.0 - (alpha + 1.0) / static_cast<double>(k));

  const double c = std::pow(h, -alpha);
  const double g0 = reciprocal_gamma(1.0 - alpha);
  const double g1 = reciprocal_gamma(2.0 - alpha);
  std::vector<double> out(n, 0.0);
  for (std::size_t m = 1; m < n; ++m) {
    double s = 0.0;
    for (std::size_t k = 0; k <= m; ++k) s += w[k] * r[m - k];
    const double t = h * static_cast<double>(m);
    out[m] = c * s + f0 * std::pow(t, -alpha) * g0 + f1 * std::pow(t, 1.0 - alpha) * g1;
  }

  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  const double zero_tol = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  bool singular = std::abs(f0) > zero_tol;
  if (alpha > 1.0 && !singular) singular = std::abs(f1) * h > zero_tol;
  out[0] = singular ? std::numeric_limits<double>::quiet_NaN() : 0.0;
  return {SampledFunction(f.t0(), h, std::move(out)), singular};
}

}  // namespace fracwave

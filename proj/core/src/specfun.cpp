#include "fracwave/specfun.hpp"

#include <gsl/gsl_errno.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "detail.hpp"
#include "fracwave/errors.hpp"
#include "series.hpp"

#if defined(__GLIBC__)
#include <math.h>
#endif

namespace fracwave {

namespace detail {

void silence_gsl() noexcept {
  static const bool done = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)done;
}

double log_gamma_positive(double x) noexcept {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double sin_pi(double x) noexcept {
  // reduce to r in [-1, 1], then to [-1/2, 1/2] by reflection
  double r = std::remainder(x, 2.0);
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(std::numbers::pi * r);
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kGammaOverflow = 171.0;

bool is_nonpositive_integer(double x) noexcept { return x <= 0.0 && x == std::floor(x); }

// log of the smooth majorant E(x) >= |1/Gamma(x)|:
//   Gamma(1-x)/pi for x <= 1/2 (reflection with |sin| <= 1), 1/Gamma(x) above.
double log_envelope(double x) noexcept {
  if (x <= 0.5) return log_gamma_positive(1.0 - x) - std::log(std::numbers::pi);
  return -log_gamma_positive(x);
}

// log|1/Gamma(x)| and its sign; x must not be a pole.
double log_abs_rgamma(double x, int& sign) noexcept {
  if (x > 0.0) {
    sign = 1;
    return -log_gamma_positive(x);
  }
  const double s = sin_pi(x);
  sign = s < 0.0 ? -1 : 1;
  return std::log(std::abs(s)) + log_gamma_positive(1.0 - x) - std::log(std::numbers::pi);
}

}  // namespace

SeriesOutcome sum_wright_series(double lambda, double mu, double z, double tol, int max_terms,
                                double cancellation_ratio) {
  SeriesOutcome out;
  if (z == 0.0) {
    out.value = reciprocal_gamma(mu);
    out.abs_error_bound = kEps * std::abs(out.value);
    out.terms_used = 1;
    return out;
  }

  const double log_abs_z = std::log(std::abs(z));
  CompensatedSum sum;
  double power = 1.0;      // z^n / n!
  double log_power = 0.0;  // log|z^n / n!|
  double rounding = 0.0;
  double max_partial = 0.0;
  double prev_log_env = 0.0;
  double prev_ratio = std::numeric_limits<double>::infinity();

  for (int n = 0; n < max_terms; ++n) {
    if (n > 0) {
      power *= z / n;
      log_power += log_abs_z - std::log(static_cast<double>(n));
    }
    const double arg = lambda * n + mu;

    double term = 0.0;
    double term_rel_err = 0.0;
    if (!is_nonpositive_integer(arg)) {
      const bool direct = std::abs(arg) < kGammaOverflow && std::abs(power) > 1e-280 &&
                          std::abs(power) < 1e280;
      if (direct) {
        term = power * reciprocal_gamma(arg);
        term_rel_err = (n + 5) * kEps;
      } else {
        int rg_sign = 1;
        const double log_rg = log_abs_rgamma(arg, rg_sign);
        const double log_term = log_power + log_rg;
        const int z_sign = (z < 0.0 && (n % 2) == 1) ? -1 : 1;
        term = z_sign * rg_sign * std::exp(log_term);
        term_rel_err = (n + 5 + std::abs(log_power) + std::abs(log_rg)) * kEps;
      }
    }
    if (!std::isfinite(term)) {
      out.status = SeriesStatus::Rounding;
      out.terms_used = n + 1;
      return out;
    }

    sum.add(term);
    rounding += term_rel_err * std::abs(term);
    const double partial = sum.value();
    max_partial = std::max(max_partial, std::abs(partial));
    out.terms_used = n + 1;

    const double round_bound = rounding + 2.0 * kEps * std::abs(partial);
    if (round_bound > tol) {
      // rounding only grows from here on
      out.status = SeriesStatus::Rounding;
      out.value = partial;
      out.abs_error_bound = round_bound;
      return out;
    }

    const double log_env = log_power + log_envelope(arg);
    if (n > 0) {
      const double ratio = std::exp(log_env - prev_log_env);
      if (ratio < 1.0 && ratio <= prev_ratio) {
        // later ratios are no larger, so the tail is dominated by a geometric series
        const double tail = std::exp(log_env) * ratio / (1.0 - ratio);
        if (tail + round_bound <= tol) {
          out.value = partial;
          out.abs_error_bound = tail + round_bound;
          if (std::abs(partial) < cancellation_ratio * max_partial) {
            out.status = SeriesStatus::Cancellation;
          } else {
            out.status = SeriesStatus::Converged;
          }
          return out;
        }
      }
      prev_ratio = ratio;
    }
    prev_log_env = log_env;
  }
  out.status = SeriesStatus::TermCap;
  out.value = sum.value();
  return out;
}

std::string describe(const SeriesOutcome& o, double lambda, double mu, double z, double tol) {
  std::ostringstream os;
  os.precision(17);
  os << "Wright series W_{" << lambda << "," << mu << "}(" << z << ") did not reach tol " << tol
     << ": ";
  switch (o.status) {
    case SeriesStatus::Converged:
      os << "converged";
      break;
    case SeriesStatus::TermCap:
      os << "term cap of " << o.terms_used << " reached";
      break;
    case SeriesStatus::Rounding:
      os << "rounding error exceeds tolerance after " << o.terms_used << " terms";
      break;
    case SeriesStatus::Cancellation:
      os << "catastrophic cancellation";
      break;
  }
  return os.str();
}

}  // namespace detail

WrightParams::WrightParams(double lambda, double mu) : lambda_(lambda), mu_(mu) {
  if (!std::isfinite(lambda) || !std::isfinite(mu)) {
    throw DomainError("WrightParams: lambda and mu must be finite");
  }
  if (!(lambda > -1.0)) throw DomainError("WrightParams: lambda must exceed -1");
}

MWrightOrder::MWrightOrder(double nu) : nu_(nu) {
  if (!(nu >= 0.0 && nu < 1.0)) throw DomainError("MWrightOrder: nu must lie in [0, 1)");
}

double reciprocal_gamma(double x) noexcept {
  if (std::isnan(x)) return x;
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  if (x > 0.0) {
    if (x < 170.0) return 1.0 / std::tgamma(x);
    return std::exp(-detail::log_gamma_positive(x));
  }
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
  const double s = detail::sin_pi(x);
  if (1.0 - x < 170.0) return s * std::tgamma(1.0 - x) / std::numbers::pi;
  return s * std::exp(detail::log_gamma_positive(1.0 - x) - std::log(std::numbers::pi));
}

namespace {

void check_args(double z, double tol) {
  if (!std::isfinite(z)) throw DomainError("argument z must be finite");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive");
}

EvalResult to_result(const detail::SeriesOutcome& o) {
  return EvalResult{o.value, o.abs_error_bound, o.terms_used};
}

}  // namespace

EvalResult wright(const WrightParams& params, double z, double tol, const SeriesOptions& opts) {
  check_args(z, tol);
  const auto o = detail::sum_wright_series(params.lambda(), params.mu(), z, tol, opts.max_terms,
                                           opts.cancellation_ratio);
  if (o.status != detail::SeriesStatus::Converged) {
    throw NonConvergent(detail::describe(o, params.lambda(), params.mu(), z, tol));
  }
  return to_result(o);
}

EvalResult m_wright_series(const MWrightOrder& order, double z, double tol,
                           const SeriesOptions& opts) {
  return wright(order.wright_params(), -z, tol, opts);
}

EvalResult m_wright(const MWrightOrder& order, double z, double tol) {
  check_args(z, tol);
  const SeriesOptions opts;
  const double nu = order.nu();
  const auto o =
      detail::sum_wright_series(-nu, 1.0 - nu, -z, tol, opts.max_terms, opts.cancellation_ratio);
  if (o.status == detail::SeriesStatus::Converged) return to_result(o);
  if (nu == 0.0 || z <= 0.0) {
    throw NonConvergent(detail::describe(o, -nu, 1.0 - nu, -z, tol));
  }
  return m_wright_integral(order, z, tol);
}

EvalResult m_wright_primitive(const MWrightOrder& order, double z, double tol) {
  check_args(z, tol);
  const SeriesOptions opts;
  const double nu = order.nu();
  const auto o =
      detail::sum_wright_series(-nu, 2.0 - nu, -z, tol, opts.max_terms, opts.cancellation_ratio);
  if (o.status == detail::SeriesStatus::Converged) return to_result(o);
  if (!(nu > 0.5) || z <= 0.0) {
    throw NonConvergent(detail::describe(o, -nu, 2.0 - nu, -z, tol));
  }
  return m_wright_primitive_integral(order, z, tol);
}

}  // namespace fracwave

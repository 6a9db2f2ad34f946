// Real-line integral representations of M_nu and of W_{-nu,2-nu}(-z).
//
// Both come from the one-sided stable density of index nu written in
// Zolotarev/Kanter form and mapped through the similarity variable; the
// integrands are positive on (0, pi), so there is no cancellation.

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "detail.hpp"
#include "fracwave/errors.hpp"
#include "fracwave/quadrature.hpp"
#include "fracwave/specfun.hpp"

namespace fracwave {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnderflowLog = -745.0;

/// K(phi) = (sin(nu phi)/sin phi)^{nu/(1-nu)} * sin((1-nu) phi)/sin phi, increasing on [0, pi).
double zolotarev_k(double nu, double phi) noexcept {
  if (phi < 1e-12) return std::pow(nu, nu / (1.0 - nu)) * (1.0 - nu);
  const double sp = std::sin(phi);
  const double a = std::sin(nu * phi) / sp;
  const double b = std::sin((1.0 - nu) * phi) / sp;
  return std::pow(a, nu / (1.0 - nu)) * b;
}

void check_route(const MWrightOrder& order, double z, double tol, double nu_min, const char* what) {
  if (!(order.nu() > nu_min)) {
    std::ostringstream os;
    os << what << ": integral route needs nu in (" << nu_min << ", 1)";
    throw DomainError(os.str());
  }
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError(std::string(what) + ": needs finite z > 0");
  if (!(tol > 0.0)) throw DomainError(std::string(what) + ": tolerance must be positive");
}

// Panel split close to phi = 0, where the integrand concentrates for large s.
double split_point(double s_k0) { return std::min(kPi / 2.0, 4.0 / std::sqrt(1.0 + s_k0)); }

}  // namespace

EvalResult m_wright_integral(const MWrightOrder& order, double z, double tol) {
  check_route(order, z, tol, 0.0, "m_wright_integral");
  const double nu = order.nu();
  const double log_z = std::log(z);
  const double log_s = log_z / (1.0 - nu);
  const double k0 = zolotarev_k(nu, 0.0);

  // value = exp(log_scale) * I,  I = int_0^pi K exp(-s (K - K0)) dphi
  if (log_s + std::log(k0) > std::log(-kUnderflowLog + 100.0 + std::abs(nu / (1.0 - nu) * log_z))) {
    return EvalResult{0.0, 0.0, 1};
  }
  const double s = std::exp(log_s);
  const double log_scale = nu / (1.0 - nu) * log_z - std::log(kPi * (1.0 - nu)) - s * k0;
  // I <= pi max(K0, 1/s)
  const double log_i_bound = std::log(kPi * std::max(k0, 1.0 / s));
  if (log_scale + log_i_bound < kUnderflowLog) return EvalResult{0.0, 0.0, 1};

  const double scale = std::exp(log_scale);
  auto integrand = [nu, s, k0](double phi) {
    const double k = zolotarev_k(nu, phi);
    const double e = s * (k - k0);
    if (!(e < 745.0)) return 0.0;
    return k * std::exp(-e);
  };

  detail::silence_gsl();
  QuadOptions q;
  q.abs_tol = tol / scale;
  q.rel_tol = 1e-13;
  q.max_intervals = 400;
  const double split = split_point(s * k0);
  const double panels[] = {0.0, split, kPi};
  const QuadResult r = integrate_panels(integrand, panels, q);
  const double bound = scale * r.abs_error;
  if (bound > tol) {
    std::ostringstream os;
    os.precision(17);
    os << "m_wright_integral: quadrature for nu=" << nu << " z=" << z
       << " did not reach tol " << tol << " (estimate " << bound << ")";
    throw NonConvergent(os.str());
  }
  return EvalResult{scale * r.value, bound, std::max(1, r.evaluations)};
}

EvalResult m_wright_primitive_integral(const MWrightOrder& order, double z, double tol) {
  check_route(order, z, tol, 0.5, "m_wright_primitive_integral");
  const double nu = order.nu();
  const double p = (1.0 - nu) / nu;
  const double a = (2.0 * nu - 1.0) / nu;
  const double log_z = std::log(z);
  const double log_s = log_z / (1.0 - nu);
  const double k0 = zolotarev_k(nu, 0.0);

  // Gamma(a, x) <= x^{a-1} e^{-x} for a <= 1, so a large s*K0 means underflow.
  if (log_s + std::log(k0) > std::log(800.0)) return EvalResult{0.0, 0.0, 1};
  const double s = std::exp(log_s);
  const double scale = std::exp(p * log_z) / (nu * kPi);

  detail::silence_gsl();
  auto integrand = [p, a, s, nu](double phi) {
    const double k = zolotarev_k(nu, phi);
    const double x = s * k;
    if (!(x < 740.0)) return 0.0;
    gsl_sf_result g;
    const int status = gsl_sf_gamma_inc_e(a, x, &g);
    if (status != GSL_SUCCESS && status != GSL_EUNDRFLW) return 0.0;
    return std::pow(k, p) * g.val;
  };

  QuadOptions q;
  q.abs_tol = tol / scale;
  q.rel_tol = 1e-13;
  q.max_intervals = 400;
  const double split = split_point(s * k0);
  const double panels[] = {0.0, split, kPi};
  const QuadResult r = integrate_panels(integrand, panels, q);
  const double bound = scale * r.abs_error;
  if (bound > tol) {
    std::ostringstream os;
    os.precision(17);
    os << "m_wright_primitive_integral: quadrature for nu=" << nu << " z=" << z
       << " did not reach tol " << tol << " (estimate " << bound << ")";
    throw NonConvergent(os.str());
  }
  return EvalResult{scale * r.value, bound, std::max(1, r.evaluations)};
}

}  // namespace fracwave

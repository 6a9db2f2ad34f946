#include "fracwave/green.hpp"

#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <sstream>

#include "fracwave/errors.hpp"

namespace fracwave {

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::SubDiffusion:
      return "sub-diffusion";
    case Regime::Diffusion:
      return "diffusion";
    case Regime::DiffusionWave:
      return "diffusion-wave";
    case Regime::Wave:
      return "wave";
  }
  return "unknown";
}

FracOrder FracOrder::from_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    std::ostringstream os;
    os << "fractional order alpha=" << alpha << " outside (0, 2]";
    throw DomainError(os.str());
  }
  return FracOrder(alpha);
}

FracOrder FracOrder::from_nu(double nu) {
  if (!(nu > 0.0 && nu <= 1.0)) {
    std::ostringstream os;
    os << "similarity exponent nu=" << nu << " outside (0, 1]";
    throw DomainError(os.str());
  }
  return FracOrder(2.0 * nu);
}

Regime FracOrder::regime() const noexcept {
  if (alpha_ < 1.0) return Regime::SubDiffusion;
  if (alpha_ == 1.0) return Regime::Diffusion;
  if (alpha_ < 2.0) return Regime::DiffusionWave;
  return Regime::Wave;
}

SimilarityPoint SimilarityPoint::make(const FracOrder& order, double x, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and positive");
  if (!std::isfinite(x)) throw DomainError("x must be finite");
  return SimilarityPoint{x, t, x / std::pow(t, order.nu())};
}

namespace {

void require_open_unit_nu(const FracOrder& order, const char* what) {
  if (order.nu() >= 1.0) {
    throw DomainError(std::string(what) +
                      ": nu = 1 has a distributional Green function; use the wave solver");
  }
}

}  // namespace

double green_cauchy(const FracOrder& order, double x, double t, double tol) {
  require_open_unit_nu(order, "green_cauchy");
  const auto p = SimilarityPoint::make(order, std::abs(x), t);
  const double tn = std::pow(t, order.nu());
  return m_wright(MWrightOrder(order.nu()), p.z, tol).value / (2.0 * tn);
}

double green_cauchy_second(const FracOrder& order, double x, double t, double tol) {
  if (!(order.nu() > 0.5)) {
    throw DomainError("green_cauchy_second: needs nu in (1/2, 1]");
  }
  const auto p = SimilarityPoint::make(order, std::abs(x), t);
  if (order.nu() == 1.0) return std::abs(x) <= t ? 0.5 : 0.0;
  const double w = m_wright_primitive(MWrightOrder(order.nu()), p.z, tol).value;
  return 0.5 * std::pow(t, 1.0 - order.nu()) * w;
}

double green_signaling(const FracOrder& order, double x, double t, double tol) {
  require_open_unit_nu(order, "green_signaling");
  if (!(x > 0.0)) throw DomainError("green_signaling: the signaling domain is x > 0");
  const auto p = SimilarityPoint::make(order, x, t);
  const double nu = order.nu();
  return nu * p.z * m_wright(MWrightOrder(nu), p.z, tol).value / t;
}

double m_wright_peak(double nu) {
  if (!(nu >= 0.0 && nu < 1.0)) throw DomainError("m_wright_peak: nu must lie in [0, 1)");
  if (nu <= 0.5) return 0.0;
  const MWrightOrder order(nu);
  auto neg = [&](double z) { return -m_wright(order, z).value; };
  return boost::math::tools::brent_find_minima(neg, 0.0, 2.0, 40).first;
}

double far_field_width(double nu, double eps) {
  if (!(eps > 0.0)) throw DomainError("far_field_width: eps must be positive");
  const MWrightOrder order(nu);
  const double tol = std::min(kDefaultTol, 1e-3 * eps);
  auto m = [&](double z) {
    try {
      return m_wright(order, z, tol).value;
    } catch (const NonConvergent&) {
      // tol is below rounding only where M is many orders above eps
      return m_wright(order, z).value;
    }
  };

  double lo = std::max(m_wright_peak(nu), 1e-3);
  if (m(lo) <= eps) return lo;
  double hi = 2.0 * lo + 1.0;
  while (m(hi) > eps) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw NonConvergent("far_field_width: M_nu does not fall below eps");
  }
  for (int i = 0; i < 60 && hi - lo > 1e-6 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (m(mid) > eps ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace fracwave

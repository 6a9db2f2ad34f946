#pragma once

#include <string_view>

#include "fracwave/specfun.hpp"

namespace fracwave {

enum class Regime { SubDiffusion, Diffusion, DiffusionWave, Wave };

std::string_view to_string(Regime r) noexcept;

/// Time-derivative order alpha in (0, 2] of the diffusion-wave equation,
/// with the similarity exponent nu = alpha / 2.
class FracOrder {
 public:
  static FracOrder from_alpha(double alpha);
  static FracOrder from_nu(double nu);

  double alpha() const noexcept { return alpha_; }
  double nu() const noexcept { return nu_; }
  Regime regime() const noexcept;

  friend bool operator==(const FracOrder&, const FracOrder&) = default;

 private:
  explicit FracOrder(double alpha) : alpha_(alpha), nu_(alpha / 2.0) {}

  double alpha_;
  double nu_;
};

/// A space-time point together with its similarity variable z = x / t^nu.
struct SimilarityPoint {
  double x;
  double t;
  double z;

  static SimilarityPoint make(const FracOrder& order, double x, double t);
};

/// Cauchy Green function G_C(x, t) = M_nu(|x| / t^nu) / (2 t^nu), nu in (0, 1).
double green_cauchy(const FracOrder& order, double x, double t, double tol = kDefaultTol);

/// Time primitive of G_C, the kernel for the initial velocity g(x):
///   int_0^t G_C(x, tau) dtau = (t^{1-nu} / 2) W_{-nu,2-nu}(-|x| / t^nu),  nu in (1/2, 1).
/// At nu = 1 this is the d'Alembert kernel 1/2 on |x| <= t and 0 outside.
double green_cauchy_second(const FracOrder& order, double x, double t, double tol = kDefaultTol);

/// Signaling Green function at x > 0 from the reciprocity relation
///   t G_S(x, t) = 2 nu x G_C(x, t) = nu z M_nu(z).
double green_signaling(const FracOrder& order, double x, double t, double tol = kDefaultTol);

/// Location of the maximum of M_nu on z >= 0 (0 for nu <= 1/2).
double m_wright_peak(double nu);

/// Smallest z past the peak of M_nu with M_nu(z) <= eps; the Green kernel
/// is negligible beyond |x| = far_field_width * t^nu.
double far_field_width(double nu, double eps);

}  // namespace fracwave

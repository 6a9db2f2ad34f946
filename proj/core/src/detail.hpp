#pragma once

#include <cmath>

namespace fracwave::detail {

/// Neumaier (improved Kahan-Babuska) running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// GSL's default error handler aborts; every GSL entry point goes through
/// this first so failures surface as status codes.
void silence_gsl() noexcept;

/// log|Gamma(x)| for x > 0 without touching the global signgam.
double log_gamma_positive(double x) noexcept;

/// sin(pi x) with exact argument reduction.
double sin_pi(double x) noexcept;

}  // namespace fracwave::detail

#pragma once

#include <string>

namespace fracwave::detail {

enum class SeriesStatus { Converged, TermCap, Rounding, Cancellation };

struct SeriesOutcome {
  SeriesStatus status = SeriesStatus::Converged;
  double value = 0.0;
  double abs_error_bound = 0.0;
  int terms_used = 0;
};

/// Non-throwing Wright series kernel shared by the public evaluators.
SeriesOutcome sum_wright_series(double lambda, double mu, double z, double tol, int max_terms,
                                double cancellation_ratio);

std::string describe(const SeriesOutcome& o, double lambda, double mu, double z, double tol);

}  // namespace fracwave::detail

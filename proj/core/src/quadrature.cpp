#include "fracwave/quadrature.hpp"

#include "detail.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>

namespace fracwave {
namespace {

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const noexcept { gsl_integration_workspace_free(w); }
};

struct Trampoline {
  const std::function<double(double)>* f;
  int calls = 0;
};

double call_trampoline(double x, void* params) {
  auto* t = static_cast<Trampoline*>(params);
  ++t->calls;
  return (*t->f)(x);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts) {
  detail::silence_gsl();
  if (a == b) return {};
  std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
      gsl_integration_workspace_alloc(opts.max_intervals));

  Trampoline t{&f};
  gsl_function fn{&call_trampoline, &t};
  double value = 0.0;
  double err = 0.0;
  // qag refuses abs_tol <= 0 together with rel_tol below 50 eps
  const double rel_tol = opts.abs_tol > 0.0 ? opts.rel_tol : std::max(opts.rel_tol, 1.2e-14);
  const int status = gsl_integration_qag(&fn, a, b, opts.abs_tol, rel_tol, opts.max_intervals,
                                         GSL_INTEG_GAUSS21, ws.get(), &value, &err);
  QuadResult r;
  r.value = value;
  r.abs_error = err;
  r.evaluations = t.calls;
  r.converged = status == GSL_SUCCESS ||
                err <= std::max(opts.abs_tol, rel_tol * std::abs(value));
  return r;
}

QuadResult integrate_panels(const std::function<double(double)>& f,
                            std::span<const double> breakpoints, const QuadOptions& opts) {
  QuadResult total;
  if (breakpoints.size() < 2) return total;
  std::size_t panels = 0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] > breakpoints[i]) ++panels;
  }
  if (panels == 0) return total;

  QuadOptions sub = opts;
  sub.abs_tol = opts.abs_tol / static_cast<double>(panels);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i + 1] > breakpoints[i])) continue;
    const QuadResult r = integrate(f, breakpoints[i], breakpoints[i + 1], sub);
    total.value += r.value;
    total.abs_error += r.abs_error;
    total.evaluations += r.evaluations;
    total.converged = total.converged && r.converged;
  }
  return total;
}

}  // namespace fracwave

#include "fracwave/signal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracwave/errors.hpp"

namespace fracwave {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Signal::Signal(DeltaSignal s) : v_(s) {
  if (!std::isfinite(s.x0) || !std::isfinite(s.weight)) {
    throw DomainError("delta signal: location and weight must be finite");
  }
}

Signal::Signal(BoxSignal s) : v_(s) {
  if (!(s.left < s.right)) throw DomainError("box signal: left must be < right");
  if (!std::isfinite(s.left) || !std::isfinite(s.right) || !std::isfinite(s.height)) {
    throw DomainError("box signal: bounds and height must be finite");
  }
}

Signal::Signal(SampledSignal s) : v_(std::move(s)) {
  const auto& sm = std::get<SampledSignal>(v_);
  if (!(sm.dx > 0.0) || !std::isfinite(sm.dx)) throw DomainError("sampled signal: dx must be > 0");
  if (!std::isfinite(sm.x0)) throw DomainError("sampled signal: x0 must be finite");
  if (sm.values.size() < 2) throw DomainError("sampled signal: needs at least 2 samples");
  for (double v : sm.values) {
    if (!std::isfinite(v)) throw DomainError("sampled signal: values must be finite");
  }
}

bool Signal::is_zero() const noexcept {
  return std::visit(Overloaded{
                        [](const ZeroSignal&) { return true; },
                        [](const DeltaSignal& d) { return d.weight == 0.0; },
                        [](const BoxSignal& b) { return b.height == 0.0; },
                        [](const SampledSignal& s) {
                          return std::all_of(s.values.begin(), s.values.end(),
                                             [](double v) { return v == 0.0; });
                        },
                    },
                    v_);
}

namespace {

double sampled_value(const SampledSignal& s, double x) {
  const double u = (x - s.x0) / s.dx;
  const auto last = static_cast<double>(s.values.size() - 1);
  if (u < 0.0 || u > last) return 0.0;
  const auto i = std::min(static_cast<std::size_t>(u), s.values.size() - 2);
  const double w = u - static_cast<double>(i);
  return (1.0 - w) * s.values[i] + w * s.values[i + 1];
}

// exact integral of the piecewise-linear interpolant over [a, b]
double sampled_integral(const SampledSignal& s, double a, double b) {
  const double lo = std::max(a, s.x0);
  const double hi = std::min(b, s.x0 + s.dx * static_cast<double>(s.values.size() - 1));
  if (!(hi > lo)) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < s.values.size(); ++i) {
    const double xl = s.x0 + s.dx * static_cast<double>(i);
    const double xr = xl + s.dx;
    const double l = std::max(lo, xl);
    const double r = std::min(hi, xr);
    if (!(r > l)) continue;
    // trapezoid on a linear piece is exact
    total += 0.5 * (r - l) * (sampled_value(s, l) + sampled_value(s, r));
  }
  return total;
}

}  // namespace

double Signal::value_at(double x) const {
  return std::visit(Overloaded{
                        [](const ZeroSignal&) { return 0.0; },
                        [](const DeltaSignal&) -> double {
                          throw DomainError("a delta signal has no point values");
                        },
                        [x](const BoxSignal& b) { return (x >= b.left && x <= b.right) ? b.height : 0.0; },
                        [x](const SampledSignal& s) { return sampled_value(s, x); },
                    },
                    v_);
}

std::pair<double, double> Signal::support() const noexcept {
  return std::visit(
      Overloaded{
          [](const ZeroSignal&) { return std::pair{0.0, 0.0}; },
          [](const DeltaSignal& d) { return std::pair{d.x0, d.x0}; },
          [](const BoxSignal& b) { return std::pair{b.left, b.right}; },
          [](const SampledSignal& s) {
            return std::pair{s.x0, s.x0 + s.dx * static_cast<double>(s.values.size() - 1)};
          },
      },
      v_);
}

double Signal::mass() const noexcept {
  const auto [lo, hi] = support();
  return integral(lo, hi);
}

double Signal::integral(double a, double b) const noexcept {
  if (b < a) return -integral(b, a);
  return std::visit(Overloaded{
                        [](const ZeroSignal&) { return 0.0; },
                        [a, b](const DeltaSignal& d) { return (d.x0 >= a && d.x0 <= b) ? d.weight : 0.0; },
                        [a, b](const BoxSignal& bx) {
                          const double len = std::min(b, bx.right) - std::max(a, bx.left);
                          return len > 0.0 ? len * bx.height : 0.0;
                        },
                        [a, b](const SampledSignal& s) { return sampled_integral(s, a, b); },
                    },
                    v_);
}

std::vector<double> Signal::breakpoints() const {
  return std::visit(Overloaded{
                        [](const ZeroSignal&) { return std::vector<double>{}; },
                        [](const DeltaSignal& d) { return std::vector<double>{d.x0}; },
                        [](const BoxSignal& b) { return std::vector<double>{b.left, b.right}; },
                        [](const SampledSignal& s) {
                          std::vector<double> pts(s.values.size());
                          for (std::size_t i = 0; i < pts.size(); ++i) {
                            pts[i] = s.x0 + s.dx * static_cast<double>(i);
                          }
                          return pts;
                        },
                    },
                    v_);
}

bool Signal::is_even(double tol) const {
  return std::visit(Overloaded{
                        [](const ZeroSignal&) { return true; },
                        [tol](const DeltaSignal& d) { return std::abs(d.x0) <= tol || d.weight == 0.0; },
                        [tol](const BoxSignal& b) { return std::abs(b.left + b.right) <= tol; },
                        [this, tol](const SampledSignal& s) {
                          for (std::size_t i = 0; i < s.values.size(); ++i) {
                            const double x = s.x0 + s.dx * static_cast<double>(i);
                            if (std::abs(value_at(-x) - s.values[i]) > tol) return false;
                          }
                          return true;
                        },
                    },
                    v_);
}

std::string Signal::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const ZeroSignal&) { os << "zero"; },
                 [&](const DeltaSignal& d) { os << "delta x0=" << d.x0 << " weight=" << d.weight; },
                 [&](const BoxSignal& b) {
                   os << "box left=" << b.left << " right=" << b.right << " height=" << b.height;
                 },
                 [&](const SampledSignal& s) {
                   os << "sampled x0=" << s.x0 << " dx=" << s.dx << " n=" << s.values.size();
                 },
             },
             v_);
  return os.str();
}

}  // namespace fracwave

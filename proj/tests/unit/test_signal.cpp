#include <doctest.h>

#include <cmath>

#include <fracwave/errors.hpp>
#include <fracwave/signal.hpp>

using namespace fracwave;

TEST_CASE("zero signal") {
  const Signal z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.is_delta());
  CHECK(z.value_at(3.0) == 0.0);
  CHECK(z.mass() == 0.0);
  CHECK(z.support() == std::pair{0.0, 0.0});
  CHECK(z.is_even());
  CHECK(z.describe() == "zero");
}

TEST_CASE("delta signal") {
  const auto d = Signal::delta(0.5, 2.0);
  CHECK(d.is_delta());
  CHECK_FALSE(d.is_zero());
  CHECK(d.mass() == 2.0);
  CHECK(d.integral(0.0, 1.0) == 2.0);
  CHECK(d.integral(0.5, 1.0) == 2.0);
  CHECK(d.integral(0.6, 1.0) == 0.0);
  CHECK(d.support() == std::pair{0.5, 0.5});
  CHECK_FALSE(d.is_even());
  CHECK(Signal::delta().is_even());
  CHECK(Signal::delta(0.0, 0.0).is_zero());
  CHECK_THROWS_AS(d.value_at(0.5), DomainError);
  CHECK_THROWS_AS(Signal::delta(NAN, 1.0), DomainError);
  CHECK(d.describe() == "delta x0=0.5 weight=2");
}

TEST_CASE("box signal") {
  const auto b = Signal::box(-1.0, 2.0, 0.5);
  CHECK(b.value_at(-1.0) == 0.5);
  CHECK(b.value_at(2.0) == 0.5);
  CHECK(b.value_at(2.0001) == 0.0);
  CHECK(b.value_at(0.0) == 0.5);
  CHECK(b.mass() == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(b.integral(0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(b.integral(-5.0, -1.0) == 0.0);
  CHECK(b.integral(1.5, 9.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(b.support() == std::pair{-1.0, 2.0});
  CHECK(b.breakpoints() == std::vector<double>{-1.0, 2.0});
  CHECK_FALSE(b.is_even());
  CHECK(Signal::box().is_even());
  CHECK(Signal::box(-1.0, 1.0, 0.0).is_zero());
  CHECK_THROWS_AS(Signal::box(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(Signal::box(2.0, 1.0), DomainError);
  CHECK_THROWS_AS(Signal::box(0.0, INFINITY), DomainError);
}

TEST_CASE("sampled signal") {
  // hat function on [-1, 1]
  const auto s = Signal::sampled(-1.0, 0.5, {0.0, 0.5, 1.0, 0.5, 0.0});
  CHECK(s.value_at(0.0) == 1.0);
  CHECK(s.value_at(0.25) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(s.value_at(-1.5) == 0.0);
  CHECK(s.value_at(1.5) == 0.0);
  CHECK(s.mass() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.integral(0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s.integral(0.0, 0.5) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(s.support() == std::pair{-1.0, 1.0});
  CHECK(s.is_even(1e-15));
  CHECK_FALSE(Signal::sampled(0.0, 0.5, {1.0, 2.0}).is_even());

  CHECK_THROWS_AS(Signal::sampled(0.0, 0.0, {1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(Signal::sampled(0.0, 0.1, {1.0}), DomainError);
  CHECK_THROWS_AS(Signal::sampled(0.0, 0.1, {1.0, NAN}), DomainError);
}

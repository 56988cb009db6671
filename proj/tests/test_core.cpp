#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/analytics.hpp"
#include "core/state.hpp"

using namespace biphoton;

TEST_CASE("from_correlation_time inverts the 2*tau1 convention") {
  const auto paper = from_correlation_time(63.3, 7.0);
  CHECK(paper.tau1 == doctest::Approx(31.65).epsilon(1e-12));
  CHECK(paper.tau2 == doctest::Approx(221.55).epsilon(1e-12));

  const auto unit = from_correlation_time(2.0, 1.0);
  CHECK(unit.tau1 == 1.0);
  CHECK(unit.tau2 == 1.0);

  const auto s = from_correlation_time(20.0, 5.0);
  CHECK(s.tau1 == 10.0);
  CHECK(s.tau2 == 50.0);
}

TEST_CASE("from_correlation_time rejects non-positive input") {
  CHECK_THROWS_AS(from_correlation_time(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(from_correlation_time(10.0, -2.0), DomainError);
  CHECK_THROWS_AS(GaussianBiphoton(1.0, 0.0), DomainError);
}

TEST_CASE("initial_widths") {
  const auto w = initial_widths(from_correlation_time(63.3, 7.0));
  CHECK(w.correlation_time == doctest::Approx(63.3).epsilon(1e-12));
  CHECK(w.mean_time_width == doctest::Approx(443.1).epsilon(1e-12));
  CHECK(w.conditional_t1_width == doctest::Approx(44.76).epsilon(1e-3));

  const auto sym = initial_widths(GaussianBiphoton(1.0, 1.0));
  CHECK(sym.correlation_time == 2.0);
  CHECK(sym.mean_time_width == 2.0);

  const auto asym = initial_widths(GaussianBiphoton(10.0, 50.0));
  CHECK(asym.correlation_time == 20.0);
  CHECK(asym.mean_time_width == 100.0);
}

TEST_CASE("rotated coordinates round-trip to machine precision") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < 100; ++k) {
    const double ts = u(rng), ti = u(rng);
    const double t1 = (ts - ti) * inv_sqrt2;
    const double t2 = (ts + ti) * inv_sqrt2;
    CHECK((t2 + t1) * inv_sqrt2 == doctest::Approx(ts).epsilon(1e-14));
    CHECK((t2 - t1) * inv_sqrt2 == doctest::Approx(ti).epsilon(1e-14));
  }
}

TEST_CASE("phase-only maps never change the analytic widths") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const GaussianBiphoton state(0.2 + 5.0 * std::abs(u(rng)),
                                 0.2 + 5.0 * std::abs(u(rng)));
    const ChirpPair chirp{u(rng), u(rng)};
    const auto before = form_widths(state_to_form(state));
    const auto after = form_widths(apply_chirp(state_to_form(state), chirp));
    CHECK(after.correlation_time ==
          doctest::Approx(before.correlation_time).epsilon(1e-12));
    CHECK(after.mean_time_width ==
          doctest::Approx(before.mean_time_width).epsilon(1e-12));
    CHECK(after.conditional_t1_width ==
          doctest::Approx(before.conditional_t1_width).epsilon(1e-12));
  }
}

TEST_CASE("R controls frequency correlation vs anti-correlation") {
  // Frequency-domain quadratic form is M^(-1); its covariance gives the
  // spectral variances directly.
  auto spectral_vars = [](double tau1, double tau2) {
    const auto f = state_to_form(GaussianBiphoton(tau1, tau2));
    const Mat2c w = inverse(f.m);
    const ComplexQuadraticForm freq{w, Domain::Frequency};
    const Cov2 s = covariance(freq);
    return std::pair{s.s00 + s.s11 - 2.0 * s.s01,   // Var(w_s - w_i)
                     s.s00 + s.s11 + 2.0 * s.s01};  // Var(w_s + w_i)
  };
  // R -> 0: difference variance dominates (anti-correlated sum suppressed).
  const auto [d_small, s_small] = spectral_vars(1.0, 1e-3);
  CHECK(s_small / d_small > 1e4);
  // R -> inf: the reverse.
  const auto [d_big, s_big] = spectral_vars(1e-3, 1.0);
  CHECK(d_big / s_big > 1e4);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "core/analytics.hpp"
#include "core/hom.hpp"

using namespace biphoton;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = a + (b - a) * k / (n - 1);
  return v;
}

// Delays on exact grid nodes: the overlap shift needs no interpolation there.
std::vector<double> node_delays(const AmplitudeGrid& g, double half_range) {
  const int kmax = int(half_range / g.step);
  std::vector<double> v;
  for (int k = -kmax; k <= kmax; ++k) v.push_back(k * g.step);
  return v;
}

AmplitudeGrid chirped(const AmplitudeGrid& g, const ChirpPair& c) {
  return apply_phase(g, PhaseProfile(QuadraticPhase{c.mu_s, 0.0}),
                     PhaseProfile(QuadraticPhase{c.mu_i, 0.0}));
}

}  // namespace

TEST_CASE("unchirped dip is the Gaussian exp(-tau^2 / (2 tau1^2))") {
  const GaussianBiphoton state(1.0, 3.0);
  const auto g = sample_state(state, {});
  const auto delays = node_delays(g, 5.0);
  const auto curve = hom_curve(g, delays);

  CHECK(curve.max_abs_imag < 1e-9);
  for (size_t k = 0; k < delays.size(); ++k) {
    const double tau = delays[k];
    const double expected = 1.0 - std::exp(-0.5 * tau * tau);
    CHECK(curve.rates[k] == doctest::Approx(expected).epsilon(1e-3).scale(1.0));
  }
  // Off-node delays go through bilinear interpolation; the smoothing bias
  // stays at the percent level.
  const auto frac = hom_curve(g, linspace(-3.01, 3.01, 101));
  for (size_t k = 0; k < frac.delays.size(); ++k) {
    const double tau = frac.delays[k];
    CHECK(frac.rates[k] == doctest::Approx(1.0 - std::exp(-0.5 * tau * tau))
                               .epsilon(0.02)
                               .scale(1.0));
  }
  // Landmarks: full suppression at zero delay, 1 - e^{-1/2} at tau = tau1.
  const auto mid = hom_curve(g, {0.0, 1.0});
  CHECK(mid.rates[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
  CHECK(mid.rates[1] ==
        doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-3));
}

TEST_CASE("dip symmetry under delay reversal") {
  const GaussianBiphoton state(1.0, 4.0);
  auto g = chirped(sample_state(state, {}, 0.6), {0.6, -0.6});
  for (int k : {1, 3, 5, 8}) {
    const double tau = k * g.step;
    const auto c = hom_curve(g, {tau, -tau});
    CHECK(c.rates[0] == doctest::Approx(c.rates[1]).epsilon(1e-6).scale(1.0));
  }
  // Off-node delays keep the symmetry to interpolation accuracy.
  const auto c = hom_curve(g, {1.23, -1.23});
  CHECK(c.rates[0] == doctest::Approx(c.rates[1]).epsilon(5e-3).scale(1.0));
}

TEST_CASE("coherence time of the unchirped dip is 2 tau1") {
  for (double tau1 : {0.7, 1.0, 2.5}) {
    const GaussianBiphoton state(tau1, 4.0 * tau1);
    const auto g = sample_state(state, {});
    const auto delays = node_delays(g, 8.0 * tau1);
    CHECK(coherence_time(hom_curve(g, delays)) ==
          doctest::Approx(2.0 * tau1).epsilon(2e-3));
  }
}

TEST_CASE("dip narrows by the compression ratio after the full pipeline") {
  const GaussianBiphoton state(1.0, 4.0);
  const double mu = 0.8;
  const auto best = optimal_dispersion(state, {mu, -mu});

  const auto g0 = sample_state(state, {}, mu);
  const double before = coherence_time(hom_curve(g0, node_delays(g0, 6.0)));

  auto g = chirped(g0, {mu, -mu});
  g = apply_dispersion_grid(g, best.beta_used);
  const double after = coherence_time(hom_curve(g, node_delays(g, 2.5)));

  CHECK(before / after ==
        doctest::Approx(best.compression_ratio).epsilon(0.02));
}

TEST_CASE("xi normalization") {
  const auto g = sample_state(GaussianBiphoton(1.0, 2.0), {});
  const auto a = hom_curve(g, {0.0, 0.5, 1.0});
  CHECK(a.xi_used == doctest::Approx(1.0 / g.total_probability()));

  // Halving xi halves the dip depth everywhere.
  const auto b = hom_curve(g, {0.0, 0.5, 1.0}, 0.5 * a.xi_used);
  for (size_t k = 0; k < a.rates.size(); ++k)
    CHECK(1.0 - b.rates[k] ==
          doctest::Approx(0.5 * (1.0 - a.rates[k])).epsilon(1e-9).scale(1.0));

  // The rate floor never goes negative even for an inflated xi.
  const auto c = hom_curve(g, {0.0}, 3.0 * a.xi_used);
  CHECK(c.rates[0] >= 0.0);
}

TEST_CASE("error paths") {
  const auto g = sample_state(GaussianBiphoton(1.0, 2.0), {});
  CHECK_THROWS_AS(hom_curve(g, {}), UsageError);
  CHECK_THROWS_AS(hom_curve(g, {1e9}), DomainError);
  CHECK_THROWS_AS(hom_curve(to_frequency(g), {0.0}), UsageError);

  HomCurve flat;
  flat.delays = linspace(-1.0, 1.0, 21);
  flat.rates.assign(21, 1.0);  // no dip anywhere
  CHECK_THROWS_AS(coherence_time(flat), NoDipError);

  HomCurve two;
  two.delays = {0.0, 1.0};
  two.rates = {0.0, 1.0};
  CHECK_THROWS_AS(coherence_time(two), UsageError);
}

TEST_CASE("export_hom_csv") {
  const auto g = sample_state(GaussianBiphoton(1.0, 2.0), {});
  const auto curve = hom_curve(g, linspace(-3.0, 3.0, 31));
  const std::string path = "/tmp/bp_test_hom.csv";
  export_hom_csv(curve, path);
  std::ifstream in(path);
  REQUIRE(bool(in));
  std::string header;
  std::getline(in, header);
  CHECK(header == "tau_fs, Rn");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 31);
  std::remove(path.c_str());
}

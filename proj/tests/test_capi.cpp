#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include <biphoton/biphoton.h>

TEST_CASE("state and width helpers") {
  bp_state s{};
  REQUIRE(bp_state_from_correlation_time(63.3, 7.0, &s) == BP_OK);
  CHECK(s.tau1_fs == doctest::Approx(31.65));
  CHECK(s.tau2_fs == doctest::Approx(221.55));

  bp_widths w{};
  REQUIRE(bp_initial_widths(s, &w) == BP_OK);
  CHECK(w.correlation_time_fs == doctest::Approx(63.3));
  CHECK(w.mean_time_width_fs == doctest::Approx(443.1));

  CHECK(bp_state_from_correlation_time(-1.0, 7.0, &s) == BP_ERR_DOMAIN);
  CHECK(std::strlen(bp_last_error()) > 0);
  CHECK(bp_state_from_correlation_time(1.0, 1.0, nullptr) == BP_ERR_USAGE);
}

TEST_CASE("analytic compression round trip") {
  bp_state s{31.65, 221.55};
  const double mu = 2.9538e-4;
  bp_chirp chirp{mu, -mu};

  double oracle = 0, printed = 0;
  REQUIRE(bp_final_correlation_time(s, chirp, {2400.0, -2400.0}, &oracle) ==
          BP_OK);
  REQUIRE(bp_eq5_correlation_time(s, chirp, {2400.0, -2400.0}, &printed) ==
          BP_OK);
  CHECK(printed == doctest::Approx(oracle).epsilon(1e-9));
  CHECK(63.3 / oracle == doctest::Approx(2.2256).epsilon(1e-3));

  bp_compression best{};
  REQUIRE(bp_optimal_dispersion(s, chirp, &best) == BP_OK);
  CHECK(best.compression_ratio == doctest::Approx(2.3).epsilon(1e-3));
  CHECK(best.beta_used.beta_s == doctest::Approx(2745.481).epsilon(1e-3));
  CHECK(best.beta_used.beta_i == doctest::Approx(-2745.481).epsilon(1e-3));

  double rc = 0;
  REQUIRE(bp_eq6_compression_ratio(7.0, 0.5, -0.5, &rc) == BP_OK);
  CHECK(rc == doctest::Approx(std::sqrt(1.0 + 49.0 * 0.25)).epsilon(1e-12));
  CHECK(bp_eq6_compression_ratio(0.0, 0.5, -0.5, &rc) == BP_ERR_DOMAIN);

  double cl = 0;
  REQUIRE(bp_classical_limit_ratio(2.0, 0.125, &cl) == BP_OK);
  CHECK(cl == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("profile handles") {
  bp_profile* p = nullptr;
  REQUIRE(bp_profile_quadratic(0.4, 0.0, &p) == BP_OK);
  double v = 0;
  REQUIRE(bp_profile_eval(p, 3.0, &v) == BP_OK);
  CHECK(v == doctest::Approx(0.5 * 0.4 * 9.0));
  REQUIRE(bp_profile_local_chirp(p, 100.0, &v) == BP_OK);
  CHECK(v == doctest::Approx(0.4));
  double window = 0, min_width = 0;
  REQUIRE(bp_profile_compressible_limit(p, 0.0, 0.0, &window, &min_width) ==
          BP_OK);
  CHECK(std::isinf(window));
  bp_profile_free(p);

  bp_profile* sin_p = nullptr;
  REQUIRE(bp_profile_sinusoidal(200.0, 0.01, 0.0, &sin_p) == BP_OK);
  bp_audit audit{};
  REQUIRE(bp_profile_truncation_audit(sin_p, 0.0, 40.0, 0.0, &audit) == BP_OK);
  CHECK(audit.passes == 1);
  CHECK(audit.mu_local == doctest::Approx(-0.02).epsilon(0.02));
  REQUIRE(bp_profile_compressible_limit(sin_p, 0.0, 0.0, &window, &min_width) ==
          BP_OK);
  CHECK(std::isfinite(window));
  CHECK(min_width == doctest::Approx(8.0 / (0.02 * window)).epsilon(1e-6));
  bp_profile_free(sin_p);

  const double amp[] = {1.5};
  const double center[] = {0.0};
  const double width[] = {100.0};
  bp_profile* toy = nullptr;
  REQUIRE(bp_profile_revival_toy(amp, center, width, 1, &toy) == BP_OK);
  REQUIRE(bp_profile_local_chirp(toy, 0.0, &v) == BP_OK);
  CHECK(v == doctest::Approx(-1.5 / 1e4));
  bp_profile_free(toy);

  const double bad_width[] = {0.0};
  CHECK(bp_profile_revival_toy(amp, center, bad_width, 1, &toy) ==
        BP_ERR_DOMAIN);

  std::vector<double> ts, phis;
  for (int k = 0; k <= 100; ++k) {
    ts.push_back(-25.0 + 0.5 * k);
    phis.push_back(0.5 * 0.2 * ts.back() * ts.back());
  }
  bp_profile* tab = nullptr;
  REQUIRE(bp_profile_tabulated(ts.data(), phis.data(), int(ts.size()), &tab) ==
          BP_OK);
  REQUIRE(bp_profile_local_chirp(tab, 0.0, &v) == BP_OK);
  CHECK(v == doctest::Approx(0.2).epsilon(1e-9));
  CHECK(bp_profile_eval(tab, 1e6, &v) == BP_ERR_DOMAIN);
  bp_profile_free(tab);

  CHECK(bp_profile_tabulated_csv("/tmp/bp_no_such.csv", &tab) == BP_ERR_IO);
}

TEST_CASE("grid pipeline through the C API") {
  bp_state s{1.0, 4.0};
  const double mu = 0.8;
  bp_grid* g = nullptr;
  REQUIRE(bp_grid_sample(s, 0, 8.0, 2.0, mu, &g) == BP_OK);
  CHECK(bp_grid_n(g) >= 64);
  CHECK(bp_grid_t0(g) == doctest::Approx(-(bp_grid_n(g) / 2) * bp_grid_dt(g)));
  double prob = 0;
  REQUIRE(bp_grid_total_probability(g, &prob) == BP_OK);
  CHECK(prob == doctest::Approx(1.0).epsilon(1e-12));

  REQUIRE(bp_grid_apply_chirp(g, {mu, -mu}) == BP_OK);

  bp_compression best{};
  REQUIRE(bp_optimal_dispersion(s, {mu, -mu}, &best) == BP_OK);
  REQUIRE(bp_grid_apply_dispersion(g, best.beta_used) == BP_OK);

  bp_widths w{};
  REQUIRE(bp_grid_measure(g, &w) == BP_OK);
  CHECK(w.correlation_time_fs ==
        doctest::Approx(best.final_correlation_time_fs).epsilon(2e-3));

  int count = 0;
  REQUIRE(bp_grid_conditional_slice(g, nullptr, nullptr, &count) == BP_OK);
  REQUIRE(count > 0);
  std::vector<double> t1(count), density(count);
  REQUIRE(bp_grid_conditional_slice(g, t1.data(), density.data(), &count) ==
          BP_OK);
  CHECK(t1.front() < 0.0);
  CHECK(t1.back() > 0.0);

  const int m = 64;
  std::vector<double> wig(size_t(m) * m);
  double t0 = 0, dt = 0, w0 = 0, dw = 0;
  REQUIRE(bp_grid_reduced_wigner(g, 0, m, wig.data(), &t0, &dt, &w0, &dw) ==
          BP_OK);
  double total = 0;
  for (double v : wig) total += v;
  CHECK(total * dt * dw == doctest::Approx(1.0).epsilon(1e-6));

  const char* path = "/tmp/bp_capi_intensity.csv";
  REQUIRE(bp_grid_export_intensity(g, path) == BP_OK);
  std::remove(path);
  CHECK(bp_grid_export_intensity(g, "/nonexistent-dir/x.csv") == BP_ERR_IO);

  bp_grid_free(g);

  // Resolution refusal surfaces through the status code.
  bp_state paper{31.65, 221.55};
  bp_grid* small = nullptr;
  CHECK(bp_grid_sample(paper, 64, 8.0, 2.0, 0.0, &small) == BP_ERR_RESOLUTION);
  CHECK(std::string(bp_last_error()).find("n") != std::string::npos);
}

TEST_CASE("HOM through the C API") {
  bp_state s{1.0, 3.0};
  bp_grid* g = nullptr;
  REQUIRE(bp_grid_sample(s, 0, 8.0, 2.0, 0.0, &g) == BP_OK);

  const double dt = bp_grid_dt(g);
  std::vector<double> delays;
  for (int k = -12; k <= 12; ++k) delays.push_back(k * dt);
  std::vector<double> rates(delays.size());
  double xi = 0;
  REQUIRE(bp_hom_curve(g, delays.data(), int(delays.size()), 0.0, rates.data(),
                       &xi) == BP_OK);
  CHECK(xi == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rates[delays.size() / 2] == doctest::Approx(0.0).epsilon(1e-9));

  double tc = 0;
  REQUIRE(bp_hom_coherence_time(delays.data(), rates.data(), int(delays.size()),
                                &tc) == BP_OK);
  CHECK(tc == doctest::Approx(2.0).epsilon(0.01));

  std::vector<double> flat(delays.size(), 1.0);
  CHECK(bp_hom_coherence_time(delays.data(), flat.data(), int(delays.size()),
                              &tc) == BP_ERR_NODIP);

  bp_grid_free(g);
}

TEST_CASE("sweeps through the C API") {
  const int n = 16;
  std::vector<double> vals(size_t(n) * n);
  int degenerate = -1;
  REQUIRE(bp_rc_surface(4.0, -1.0, 1.0, -1.0, 1.0, n, 0, vals.data(),
                        &degenerate) == BP_OK);
  CHECK(degenerate == 0);
  double rc = 0;
  REQUIRE(bp_eq6_compression_ratio(4.0, -1.0, -1.0, &rc) == BP_OK);
  CHECK(vals[0] == doctest::Approx(1.0 / rc).epsilon(1e-12));

  double angle = 0;
  REQUIRE(bp_steepest_drop_direction(4.0, 1.0, 180, &angle) == BP_OK);
  CHECK(angle == doctest::Approx(0.75 * 3.14159265358979323846).epsilon(1e-6));

  const double tau1s[] = {30.0, 40.0, 50.0};
  double tcf[3] = {0, 0, 0};
  double spread = -1;
  REQUIRE(bp_width_independence_scan(200.0, 1e-3, tau1s, 3, tcf, &spread) ==
          BP_OK);
  CHECK(spread < 0.01);
  CHECK(tcf[0] == doctest::Approx(10.0).epsilon(0.02));
}

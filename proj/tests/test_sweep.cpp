#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "core/sweep.hpp"

using namespace biphoton;

TEST_CASE("rc_surface layout and values") {
  const int n = 16;
  const auto s = rc_surface(4.0, -2.0, 2.0, -2.0, 2.0, n, SurfaceMethod::Eq6);
  REQUIRE(int(s.values.size()) == n * n);
  REQUIRE(s.axes.size() == 2);
  CHECK(s.axes[0].name == "x");
  CHECK(s.axes[0].value(0) == doctest::Approx(-2.0));
  CHECK(s.axes[0].value(n - 1) == doctest::Approx(2.0));
  CHECK(s.metadata.at("method") == "eq6");
  CHECK(s.metadata.at("degenerate_cells") == "0");

  // Spot check: cell (i, j) holds 1 / Rc at (x_i, y_j).
  const int i = 3, j = 11;
  const double x = s.axes[0].value(i), y = s.axes[1].value(j);
  CHECK(s.values[size_t(i) * n + j] ==
        doctest::Approx(1.0 / eq6_compression_ratio(4.0, x, y)).epsilon(1e-12));

  // Even under (x, y) -> (-x, -y).
  for (int k = 0; k < n; ++k)
    CHECK(s.values[size_t(k) * n + k] ==
          doctest::Approx(s.values[size_t(n - 1 - k) * n + (n - 1 - k)])
              .epsilon(1e-12));

  CHECK_THROWS_AS(rc_surface(4.0, -1, 1, -1, 1, 8, SurfaceMethod::Eq6),
                  DomainError);
}

TEST_CASE("eq6 and oracle surfaces agree") {
  const int n = 16;
  const auto a = rc_surface(2.5, -1.5, 1.5, -1.5, 1.5, n, SurfaceMethod::Eq6);
  const auto b =
      rc_surface(2.5, -1.5, 1.5, -1.5, 1.5, n, SurfaceMethod::Oracle);
  CHECK(b.metadata.at("method") == "oracle");
  for (size_t k = 0; k < a.values.size(); ++k)
    CHECK(a.values[k] == doctest::Approx(b.values[k]).epsilon(1e-9));
}

TEST_CASE("steepest drop is the antisymmetric diagonal") {
  for (double ratio : {2.0, 4.0, 7.0}) {
    const double angle = steepest_drop_direction(ratio, 1.0, 180);
    CHECK(angle == doctest::Approx(0.75 * std::numbers::pi).epsilon(1e-9));
  }
  CHECK_THROWS_AS(steepest_drop_direction(4.0, -1.0, 180), DomainError);
  CHECK_THROWS_AS(steepest_drop_direction(4.0, 1.0, 4), DomainError);
}

TEST_CASE("width independence in the deep-chirp regime") {
  const double tau2 = 200.0, mu = 1e-3;
  std::vector<double> tau1s;
  for (double t = 50.0; t <= 100.0; t += 10.0) tau1s.push_back(t);
  const auto r = width_independence_scan(tau2, mu, tau1s);
  REQUIRE(r.values.size() == tau1s.size());
  CHECK(std::stod(r.metadata.at("spread")) < 0.01);
  CHECK(r.metadata.find("warning") == r.metadata.end());
  // Compressed width pinned by the modulator: 2 / (mu tau2).
  for (double v : r.values)
    CHECK(v == doctest::Approx(2.0 / (mu * tau2)).epsilon(0.02));

  // Shallow chirp points trip the regime warning.
  const auto w = width_independence_scan(tau2, mu, {1.0, 40.0});
  CHECK(w.metadata.count("warning") == 1);

  CHECK_THROWS_AS(width_independence_scan(tau2, mu, {}), UsageError);
}

TEST_CASE("export_sweep_csv") {
  const auto s = rc_surface(4.0, -1.0, 1.0, -1.0, 1.0, 16, SurfaceMethod::Eq6);
  const std::string path = "/tmp/bp_test_sweep.csv";
  export_sweep_csv(s, path);
  std::ifstream in(path);
  REQUIRE(bool(in));
  std::string l1, l2, l3;
  std::getline(in, l1);
  std::getline(in, l2);
  std::getline(in, l3);
  CHECK(l1.substr(0, 1) == "#");
  CHECK(l1.find("axis x") != std::string::npos);
  CHECK(l2.find("method=eq6") != std::string::npos);
  CHECK(l3 == "x, y, value");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 16 * 16);
  std::remove(path.c_str());

  const auto scan = width_independence_scan(200.0, 1e-3, {30.0, 40.0, 50.0});
  export_sweep_csv(scan, path);
  std::ifstream in2(path);
  std::getline(in2, l1);
  std::getline(in2, l2);
  std::getline(in2, l3);
  CHECK(l3 == "tau1, value");
  std::remove(path.c_str());
}

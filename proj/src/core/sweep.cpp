#include "sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>

namespace biphoton {

namespace {

double inv_rc_oracle(double ratio, double x, double y) {
  // tau1 = 1 makes (x, y) the chirp rates directly.
  const GaussianBiphoton state(1.0, ratio);
  return 1.0 / optimal_dispersion(state, {x, y}).compression_ratio;
}

}  // namespace

SweepResult rc_surface(double ratio, double x_min, double x_max, double y_min,
                       double y_max, int n_per_axis, SurfaceMethod method) {
  if (n_per_axis < 16)
    throw DomainError("rc_surface: n_per_axis must be >= 16");
  SweepResult r;
  r.axes = {{"x", x_min, x_max, n_per_axis}, {"y", y_min, y_max, n_per_axis}};
  r.values.resize(size_t(n_per_axis) * n_per_axis);
  int degenerate = 0;
  for (int i = 0; i < n_per_axis; ++i) {
    const double x = r.axes[0].value(i);
    for (int j = 0; j < n_per_axis; ++j) {
      const double y = r.axes[1].value(j);
      double v;
      try {
        v = method == SurfaceMethod::Eq6
                ? 1.0 / eq6_compression_ratio(ratio, x, y)
                : inv_rc_oracle(ratio, x, y);
      } catch (const DegeneracyError&) {
        v = std::numeric_limits<double>::quiet_NaN();
        ++degenerate;
      }
      r.values[size_t(i) * n_per_axis + j] = v;
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", ratio);
  r.metadata["R"] = buf;
  r.metadata["method"] = method == SurfaceMethod::Eq6 ? "eq6" : "oracle";
  r.metadata["degenerate_cells"] = std::to_string(degenerate);
  return r;
}

double steepest_drop_direction(double ratio, double radius, int n_angles) {
  if (!(radius > 0.0))
    throw DomainError("steepest_drop_direction: radius must be > 0");
  if (n_angles < 8)
    throw DomainError("steepest_drop_direction: n_angles must be >= 8");
  // The surface is even under (x, y) -> (-x, -y); scanning [0, pi) covers it.
  double best_angle = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n_angles; ++k) {
    const double angle = std::numbers::pi * k / n_angles;
    const double v =
        inv_rc_oracle(ratio, radius * std::cos(angle), radius * std::sin(angle));
    if (v < best) {
      best = v;
      best_angle = angle;
    }
  }
  return best_angle;
}

SweepResult width_independence_scan(double tau2, double mu,
                                    const std::vector<double>& tau1_values) {
  if (tau1_values.empty())
    throw UsageError("width_independence_scan: empty tau1 list");
  SweepResult r;
  r.axes = {{"tau1", tau1_values.front(), tau1_values.back(),
             int(tau1_values.size())}};
  bool regime_ok = true;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0, sum = 0.0;
  for (double tau1 : tau1_values) {
    if (mu * tau1 * tau2 < 5.0) regime_ok = false;
    const GaussianBiphoton state(tau1, tau2);
    const double tcf =
        optimal_dispersion(state, {mu, -mu}).final_correlation_time;
    r.values.push_back(tcf);
    lo = std::min(lo, tcf);
    hi = std::max(hi, tcf);
    sum += tcf;
  }
  const double mean = sum / double(tau1_values.size());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", (hi - lo) / mean);
  r.metadata["spread"] = buf;
  std::snprintf(buf, sizeof buf, "%.9g", tau2);
  r.metadata["tau2"] = buf;
  std::snprintf(buf, sizeof buf, "%.9g", mu);
  r.metadata["mu"] = buf;
  if (!regime_ok)
    r.metadata["warning"] = "mu*tau1*tau2 < 5 for some points; spread claim "
                            "only holds in the deep-chirp regime";
  return r;
}

void export_sweep_csv(const SweepResult& sweep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  char buf[128];
  out << "#";
  for (const auto& ax : sweep.axes) {
    std::snprintf(buf, sizeof buf, " axis %s %.9g %.9g %d ;", ax.name.c_str(),
                  ax.min, ax.max, ax.count);
    out << buf;
  }
  out << "\n#";
  for (const auto& [k, v] : sweep.metadata) out << " " << k << "=" << v << " ;";
  out << "\n";
  if (sweep.axes.size() == 2) {
    out << sweep.axes[0].name << ", " << sweep.axes[1].name << ", value\n";
    const int nx = sweep.axes[0].count, ny = sweep.axes[1].count;
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        std::snprintf(buf, sizeof buf, "%.9g, %.9g, %.9g\n",
                      sweep.axes[0].value(i), sweep.axes[1].value(j),
                      sweep.values[size_t(i) * ny + j]);
        out << buf;
      }
  } else {
    out << sweep.axes[0].name << ", value\n";
    for (int i = 0; i < sweep.axes[0].count; ++i) {
      std::snprintf(buf, sizeof buf, "%.9g, %.9g\n", sweep.axes[0].value(i),
                    sweep.values[i]);
      out << buf;
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace biphoton

#include "hom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace biphoton {

namespace {

using cd = std::complex<double>;

// Overlap(tau) = integral dt1 dt2 A(t1,t2) A*(sqrt(2) tau - t1, t2) in
// rotated coordinates; in grid coordinates the second factor is the
// photon-swapped amplitude A*(t_i + tau, t_s - tau). The shift is a constant
// fractional offset, so one bilinear stencil serves the whole grid.
cd overlap(const AmplitudeGrid& g, double tau) {
  const int n = g.n;
  const double s = tau / g.step;
  const double fs = std::floor(s);
  const int w = int(fs);
  const double f = s - fs;

  auto at = [&](int a, int b) -> cd {
    if (a < 0 || a >= n || b < 0 || b >= n) return 0.0;
    return g.values[size_t(a) * n + b];
  };

  cd acc = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // A(t_b + tau, t_a - tau), linear along both shifted axes.
      const int p = b + w, q = a - w;
      const cd shifted = (1.0 - f) * ((1.0 - f) * at(p, q) + f * at(p, q - 1)) +
                         f * ((1.0 - f) * at(p + 1, q) + f * at(p + 1, q - 1));
      acc += g.values[size_t(a) * n + b] * std::conj(shifted);
    }
  return acc * g.cell_area();
}

}  // namespace

HomCurve hom_curve(const AmplitudeGrid& grid, const std::vector<double>& delays,
                   double xi_override) {
  if (grid.domain != Domain::Time)
    throw UsageError("hom_curve: grid must be in the time domain");
  if (delays.empty()) throw UsageError("hom_curve: empty delay list");
  const double support = 0.5 * grid.n * grid.step;
  for (double tau : delays)
    if (std::abs(tau) >= support)
      throw DomainError("hom_curve: delay outside grid support");

  HomCurve curve;
  curve.delays = delays;
  curve.xi_used =
      xi_override > 0.0 ? xi_override : 1.0 / grid.total_probability();
  curve.rates.reserve(delays.size());
  for (double tau : delays) {
    const cd o = overlap(grid, tau);
    curve.max_abs_imag =
        std::max(curve.max_abs_imag, std::abs(o.imag()) * curve.xi_used);
    curve.rates.push_back(std::max(0.0, 1.0 - curve.xi_used * o.real()));
  }
  return curve;
}

double coherence_time(const HomCurve& curve) {
  const size_t n = curve.delays.size();
  if (n < 3) throw UsageError("coherence_time: need >= 3 delay samples");
  // Trapezoid moments of D(tau) = 1 - R_n(tau).
  double m0 = 0, m1 = 0, m2 = 0;
  for (size_t k = 0; k + 1 < n; ++k) {
    const double h = curve.delays[k + 1] - curve.delays[k];
    const double da = 1.0 - curve.rates[k], db = 1.0 - curve.rates[k + 1];
    const double ta = curve.delays[k], tb = curve.delays[k + 1];
    m0 += 0.5 * h * (da + db);
    m1 += 0.5 * h * (da * ta + db * tb);
    m2 += 0.5 * h * (da * ta * ta + db * tb * tb);
  }
  if (!(m0 > 1e-12 * (std::abs(curve.delays.back() - curve.delays.front()))))
    throw NoDipError("coherence_time: no resolved dip");
  const double mean = m1 / m0;
  const double var = m2 / m0 - mean * mean;
  if (!(var > 0.0)) throw NoDipError("coherence_time: degenerate dip profile");
  return 2.0 * std::sqrt(var);
}

void export_hom_csv(const HomCurve& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "tau_fs, Rn\n";
  char buf[64];
  for (size_t k = 0; k < curve.delays.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.9g, %.9g\n", curve.delays[k],
                  curve.rates[k]);
    out << buf;
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace biphoton

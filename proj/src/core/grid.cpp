#include "grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

namespace biphoton {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kEdgeLeakageLimit = 1e-6;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

int next_pow2(int n) {
  int p = 64;
  while (p < n) p *= 2;
  return p;
}

void validate(const AmplitudeGrid& g) {
  if (g.n < 64 || !is_pow2(g.n))
    throw UsageError("AmplitudeGrid: n must be a power of two >= 64");
  if (int(g.values.size()) != g.n * g.n)
    throw UsageError("AmplitudeGrid: value count mismatch");
}

// Centered 2D transform. sign = +1 maps time -> frequency (kernel
// e^{+i w t}), sign = -1 the reverse. Unitary scaling keeps the total
// probability equal across domains. n is a power of two >= 64, so n % 4 == 0
// and the center-shift phase factors reduce to (-1)^index.
AmplitudeGrid centered_fft(const AmplitudeGrid& g, int sign) {
  validate(g);
  const int n = g.n;
  AmplitudeGrid out;
  out.n = n;
  out.step = 2.0 * kPi / (n * g.step);
  out.origin = -(n / 2) * out.step;
  out.domain = (sign > 0) ? Domain::Frequency : Domain::Time;
  out.values.resize(size_t(n) * n);

  std::vector<cd> buf(g.values);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i + j) & 1) buf[size_t(i) * n + j] = -buf[size_t(i) * n + j];

  fftw_plan plan = fftw_plan_dft_2d(
      n, n, reinterpret_cast<fftw_complex*>(buf.data()),
      reinterpret_cast<fftw_complex*>(out.values.data()),
      sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  const double scale = g.step * g.step / (2.0 * kPi);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cd& v = out.values[size_t(i) * n + j];
      v *= ((i + j) & 1) ? -scale : scale;
    }
  return out;
}

void check_leakage(const AmplitudeGrid& g, const char* where) {
  if (edge_leakage(g) > kEdgeLeakageLimit)
    throw ResolutionError(
        std::string(where) +
        ": probability leaks into the grid edge; increase GridSpec n, "
        "extent_sigmas or oversample (or pass the true mu_max)");
}

}  // namespace

double AmplitudeGrid::total_probability() const {
  double s = 0.0;
  for (const cd& v : values) s += std::norm(v);
  return s * cell_area();
}

double edge_leakage(const AmplitudeGrid& grid) {
  const int n = grid.n;
  double edge = 0.0, total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double w = std::norm(grid.values[size_t(i) * n + j]);
      total += w;
      const int d = std::min(std::min(i, n - 1 - i), std::min(j, n - 1 - j));
      if (d < 2) edge += w;
    }
  if (!(total > 0.0)) throw NumericError("edge_leakage: vanishing norm");
  return edge / total;
}

AmplitudeGrid sample_state(const GaussianBiphoton& state, const GridSpec& spec,
                           double mu_max) {
  if (spec.extent_sigmas < 6.0)
    throw DomainError("GridSpec: extent_sigmas must be >= 6");
  if (spec.oversample < 2.0)
    throw DomainError("GridSpec: oversample must be >= 2");
  mu_max = std::abs(mu_max);

  const double tau1 = state.tau1, tau2 = state.tau2;
  const double half_extent = spec.extent_sigmas * std::max(tau1, tau2);
  const double span = 2.0 * half_extent;
  // Anticipated post-chirp angular bandwidth, plus a floor that keeps the
  // narrow Gaussian feature resolved to spectral accuracy.
  const double omega_max =
      spec.oversample * (1.0 / tau1 + mu_max * (tau1 + tau2));
  const double dt_req = std::min(kPi / omega_max, 0.5 * std::min(tau1, tau2));
  const int n_needed = next_pow2(int(std::ceil(span / dt_req)));

  int n = spec.n;
  if (n == 0) {
    n = n_needed;
  } else {
    if (!is_pow2(n) || n < 64)
      throw DomainError("GridSpec: n must be a power of two >= 64");
    if (n < n_needed)
      throw ResolutionError("sample_state: n too small for the requested "
                            "extent/oversample; suggest n = " +
                            std::to_string(n_needed));
  }

  AmplitudeGrid g;
  g.n = n;
  g.step = span / n;
  g.origin = -(n / 2) * g.step;
  g.domain = Domain::Time;
  g.values.resize(size_t(n) * n);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    const double ts = g.coord(i);
    for (int j = 0; j < n; ++j) {
      const double ti = g.coord(j);
      const double t1 = (ts - ti) * inv_sqrt2;
      const double t2 = (ts + ti) * inv_sqrt2;
      g.values[size_t(i) * n + j] =
          std::exp(-0.5 * t1 * t1 / (tau1 * tau1) -
                   0.5 * t2 * t2 / (tau2 * tau2));
    }
  }
  const double norm = g.total_probability();
  const double rescale = 1.0 / std::sqrt(norm);
  for (cd& v : g.values) v *= rescale;

  check_leakage(g, "sample_state");
  return g;
}

AmplitudeGrid apply_phase(const AmplitudeGrid& grid, const PhaseProfile& phi_s,
                          const PhaseProfile& phi_i) {
  validate(grid);
  if (grid.domain != Domain::Time)
    throw UsageError("apply_phase: grid must be in the time domain");
  const int n = grid.n;
  std::vector<cd> es(n), ei(n);
  for (int k = 0; k < n; ++k) {
    const double t = grid.coord(k);
    es[k] = std::polar(1.0, phi_s.eval(t));
    ei[k] = std::polar(1.0, phi_i.eval(t));
  }
  AmplitudeGrid out = grid;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.values[size_t(i) * n + j] *= es[i] * ei[j];
  return out;
}

AmplitudeGrid to_frequency(const AmplitudeGrid& grid) {
  if (grid.domain != Domain::Time)
    throw UsageError("to_frequency: grid already in the frequency domain");
  return centered_fft(grid, +1);
}

AmplitudeGrid to_time(const AmplitudeGrid& grid) {
  if (grid.domain != Domain::Frequency)
    throw UsageError("to_time: grid already in the time domain");
  return centered_fft(grid, -1);
}

AmplitudeGrid apply_dispersion_grid(const AmplitudeGrid& grid,
                                    const DispersionPair& disp) {
  validate(grid);
  if (grid.domain != Domain::Time)
    throw UsageError("apply_dispersion_grid: grid must be in the time domain");
  AmplitudeGrid f = to_frequency(grid);
  check_leakage(f, "apply_dispersion_grid (spectrum)");
  const int n = f.n;
  std::vector<cd> es(n), ei(n);
  for (int k = 0; k < n; ++k) {
    const double w = f.coord(k);
    es[k] = std::polar(1.0, 0.5 * disp.beta_s * w * w);
    ei[k] = std::polar(1.0, 0.5 * disp.beta_i * w * w);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f.values[size_t(i) * n + j] *= es[i] * ei[j];
  AmplitudeGrid out = to_time(f);
  check_leakage(out, "apply_dispersion_grid");
  return out;
}

WidthReport measure_widths(const AmplitudeGrid& grid) {
  validate(grid);
  if (grid.domain != Domain::Time)
    throw UsageError("measure_widths: grid must be in the time domain");
  const int n = grid.n;
  double w0 = 0, md = 0, ms = 0, qd = 0, qs = 0;
  for (int i = 0; i < n; ++i) {
    const double ts = grid.coord(i);
    for (int j = 0; j < n; ++j) {
      const double ti = grid.coord(j);
      const double w = std::norm(grid.values[size_t(i) * n + j]);
      const double diff = ts - ti, sum = ts + ti;
      w0 += w;
      md += w * diff;
      ms += w * sum;
      qd += w * diff * diff;
      qs += w * sum * sum;
    }
  }
  if (!(w0 > 0.0)) throw NumericError("measure_widths: vanishing norm");
  const double var_diff = qd / w0 - (md / w0) * (md / w0);
  const double var_sum = qs / w0 - (ms / w0) * (ms / w0);

  const ConditionalSlice slice = conditional_slice(grid);
  double c0 = 0, c1 = 0, c2 = 0;
  for (size_t k = 0; k < slice.t1.size(); ++k) {
    c0 += slice.density[k];
    c1 += slice.density[k] * slice.t1[k];
    c2 += slice.density[k] * slice.t1[k] * slice.t1[k];
  }
  if (!(c0 > 0.0)) throw NumericError("measure_widths: empty conditional slice");
  const double var_cond = c2 / c0 - (c1 / c0) * (c1 / c0);

  return {2.0 * std::sqrt(var_diff), 2.0 * std::sqrt(var_sum),
          2.0 * std::sqrt(var_cond)};
}

ConditionalSlice conditional_slice(const AmplitudeGrid& grid) {
  validate(grid);
  if (grid.domain != Domain::Time)
    throw UsageError("conditional_slice: grid must be in the time domain");
  const int n = grid.n, c = grid.n / 2;
  ConditionalSlice s;
  // Antidiagonal through the center row: (c+m, c-m) are exact grid nodes,
  // t2 = 0, t1 = sqrt(2) m dt.
  for (int m = -c + 1; m <= c - 1; ++m) {
    s.t1.push_back(std::sqrt(2.0) * m * grid.step);
    s.density.push_back(
        std::norm(grid.values[size_t(c + m) * n + (c - m)]));
  }
  return s;
}

WignerMap reduced_wigner(const AmplitudeGrid& grid, Mode mode, int m) {
  validate(grid);
  if (grid.domain != Domain::Time)
    throw UsageError("reduced_wigner: grid must be in the time domain");
  if (m < 2 || m > grid.n)
    throw ResolutionError("reduced_wigner: need 2 <= m <= n");
  const int n = grid.n;
  const double dt = grid.step;

  // rho(a, b) summed over the partner coordinate, evaluated lazily for the
  // (t + j dt, t - j dt) pairs the Wigner transform needs.
  auto rho = [&](int a, int b) -> cd {
    cd s = 0.0;
    if (mode == Mode::Signal) {
      const cd* ra = &grid.values[size_t(a) * n];
      const cd* rb = &grid.values[size_t(b) * n];
      for (int k = 0; k < n; ++k) s += ra[k] * std::conj(rb[k]);
    } else {
      for (int k = 0; k < n; ++k)
        s += grid.values[size_t(k) * n + a] *
             std::conj(grid.values[size_t(k) * n + b]);
    }
    return s * dt;
  };

  WignerMap w;
  w.m = m;
  w.t_step = double(n) / m * dt;
  w.t_start = -(m / 2) * w.t_step;
  w.omega_step = kPi / (m * dt);
  w.omega_start = -(m / 2) * w.omega_step;
  w.values.assign(size_t(m) * m, 0.0);

  for (int k = 0; k < m; ++k) {
    const int idx = int(std::lround((w.t_start + k * w.t_step - grid.origin) / dt));
    if (idx < 0 || idx >= n) continue;
    const int jmax =
        std::min(std::min(idx, n - 1 - idx), m - 1);  // j >= m wraps the
                                                      // omega comb; truncate
    std::vector<cd> g(jmax + 1);
    for (int j = 0; j <= jmax; ++j) g[j] = rho(idx + j, idx - j);
    for (int l = 0; l < m; ++l) {
      const double omega = w.omega_start + l * w.omega_step;
      double s = g[0].real();
      for (int j = 1; j <= jmax; ++j) {
        const double ph = 2.0 * omega * j * dt;
        s += 2.0 * (g[j].real() * std::cos(ph) - g[j].imag() * std::sin(ph));
      }
      w.values[size_t(k) * m + l] = dt / kPi * s;
    }
  }

  double total = 0.0;
  for (double v : w.values) total += v;
  total *= w.t_step * w.omega_step;
  if (!(std::abs(total) > 0.0))
    throw NumericError("reduced_wigner: vanishing integral");
  for (double& v : w.values) v /= total;
  return w;
}

void export_intensity(const AmplitudeGrid& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  char buf[64];
  std::snprintf(buf, sizeof buf, "# %d %.9g %.9g %s\n", grid.n, grid.step,
                grid.origin,
                grid.domain == Domain::Time ? "time" : "frequency");
  out << buf;
  const int n = grid.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, "%.9g",
                    std::norm(grid.values[size_t(i) * n + j]));
      out << buf << (j + 1 < n ? "," : "\n");
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace biphoton

#include "phase_profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace biphoton {

PhaseProfile::PhaseProfile(RevivalToyPhase p) : model_(std::move(p)) {
  for (const auto& b : std::get<RevivalToyPhase>(model_).bumps)
    if (!(b.width > 0.0))
      throw DomainError("revival_toy: bump widths must be positive");
}

PhaseProfile::PhaseProfile(TabulatedPhase p) : model_(std::move(p)) {
  const auto& t = std::get<TabulatedPhase>(model_);
  if (t.phi.size() < 3 || !(t.dt > 0.0))
    throw DomainError("tabulated: need >= 3 uniformly spaced samples");
}

PhaseProfile PhaseProfile::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open profile CSV: " + path);
  std::vector<double> ts, phis;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double t, phi;
    if (!(row >> t >> phi))
      throw IoError("malformed profile CSV line: " + line);
    ts.push_back(t);
    phis.push_back(phi);
  }
  if (ts.size() < 3)
    throw DomainError("tabulated profile: need >= 3 samples");
  const double dt = ts[1] - ts[0];
  if (!(dt > 0.0))
    throw DomainError("tabulated profile: time samples must increase");
  for (size_t k = 1; k < ts.size(); ++k) {
    const double step = ts[k] - ts[k - 1];
    if (std::abs(step - dt) > 1e-6 * std::abs(dt))
      throw DomainError("tabulated profile: non-uniform time spacing");
  }
  return PhaseProfile(TabulatedPhase{ts.front(), dt, std::move(phis)});
}

double PhaseProfile::eval(double t) const {
  return std::visit(
      [t](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, QuadraticPhase>) {
          const double u = t - m.t_center;
          return 0.5 * m.mu * u * u;
        } else if constexpr (std::is_same_v<T, SinusoidalPhase>) {
          return m.phi0 * std::cos(m.omega_m * t + m.theta);
        } else if constexpr (std::is_same_v<T, RevivalToyPhase>) {
          double s = 0.0;
          for (const auto& b : m.bumps) {
            const double u = (t - b.center) / b.width;
            s += b.amplitude * std::exp(-0.5 * u * u);
          }
          return s;
        } else {
          const double x = (t - m.t_start) / m.dt;
          if (x < 0.0 || x > double(m.phi.size() - 1))
            throw DomainError("tabulated profile: t outside sample range");
          const size_t k = std::min(size_t(x), m.phi.size() - 2);
          const double f = x - double(k);
          return (1.0 - f) * m.phi[k] + f * m.phi[k + 1];
        }
      },
      model_);
}

double PhaseProfile::local_chirp(double t_ref) const {
  return std::visit(
      [t_ref](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, QuadraticPhase>) {
          return m.mu;
        } else if constexpr (std::is_same_v<T, SinusoidalPhase>) {
          return -m.phi0 * m.omega_m * m.omega_m *
                 std::cos(m.omega_m * t_ref + m.theta);
        } else if constexpr (std::is_same_v<T, RevivalToyPhase>) {
          double s = 0.0;
          for (const auto& b : m.bumps) {
            const double u = (t_ref - b.center) / b.width;
            s += b.amplitude / (b.width * b.width) * (u * u - 1.0) *
                 std::exp(-0.5 * u * u);
          }
          return s;
        } else {
          const double x = (t_ref - m.t_start) / m.dt;
          const long k = std::lround(x);
          if (k < 1 || k + 1 >= long(m.phi.size()))
            throw DomainError(
                "tabulated profile: t_ref too close to the sample edge");
          return (m.phi[k - 1] - 2.0 * m.phi[k] + m.phi[k + 1]) /
                 (m.dt * m.dt);
        }
      },
      model_);
}

TruncationAudit truncation_audit(const PhaseProfile& profile, double t_ref,
                                 double window, double threshold_rad) {
  if (!(window > 0.0)) throw DomainError("truncation_audit: window must be > 0");
  constexpr int kSamples = 401;
  std::vector<double> u(kSamples), phi(kSamples);
  for (int k = 0; k < kSamples; ++k) {
    u[k] = -1.0 + 2.0 * k / (kSamples - 1);
    phi[k] = profile.eval(t_ref + 0.5 * window * u[k]);  // may throw DomainError
  }
  // Least squares c0 + c1 u + c2 u^2 on the symmetric sample set: odd
  // moments vanish, so c1 decouples from (c0, c2).
  double s2 = 0, s4 = 0, sp = 0, spu = 0, spu2 = 0;
  for (int k = 0; k < kSamples; ++k) {
    s2 += u[k] * u[k];
    s4 += u[k] * u[k] * u[k] * u[k];
    sp += phi[k];
    spu += phi[k] * u[k];
    spu2 += phi[k] * u[k] * u[k];
  }
  const double n = kSamples;
  const double det = n * s4 - s2 * s2;
  const double c0 = (s4 * sp - s2 * spu2) / det;
  const double c2 = (n * spu2 - s2 * sp) / det;
  const double c1 = spu / s2;

  double max_res = 0.0;
  for (int k = 0; k < kSamples; ++k) {
    const double fit = c0 + c1 * u[k] + c2 * u[k] * u[k];
    max_res = std::max(max_res, std::abs(phi[k] - fit));
  }
  // c2 u^2 = (mu/2) (t - t_ref)^2 with t - t_ref = u w/2.
  const double mu_local = 8.0 * c2 / (window * window);
  return {mu_local, window, max_res, max_res < threshold_rad};
}

CompressibleLimit compressible_limit(const PhaseProfile& profile, double t_ref,
                                     double threshold_rad) {
  const double inf = std::numeric_limits<double>::infinity();
  if (profile.is_quadratic()) return {inf, 0.0};

  auto passes = [&](double w) {
    try {
      return truncation_audit(profile, t_ref, w, threshold_rad).passes;
    } catch (const DomainError&) {
      return false;  // outside tabulated coverage: cannot certify
    }
  };

  double lo = 1e-6;
  if (!passes(lo)) return {0.0, inf};  // zero-window result, flagged by width

  double hi = lo;
  bool failed = false;
  for (int it = 0; it < 80; ++it) {
    hi *= 2.0;
    if (!passes(hi)) {
      failed = true;
      break;
    }
    lo = hi;
  }
  double window;
  if (!failed) {
    window = inf;  // never failed within 2^80 fs: effectively quadratic
  } else {
    while (hi - lo > 1e-3 * lo) {
      const double mid = 0.5 * (lo + hi);
      (passes(mid) ? lo : hi) = mid;
    }
    window = lo;
  }
  const double mu = std::abs(profile.local_chirp(t_ref));
  const double min_width =
      (mu > 0.0 && std::isfinite(window)) ? 8.0 / (mu * window)
                                          : (std::isfinite(window) ? inf : 0.0);
  return {window, min_width};
}

}  // namespace biphoton

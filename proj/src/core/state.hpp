#ifndef BIPHOTON_STATE_HPP
#define BIPHOTON_STATE_HPP

#include <cmath>

#include "errors.hpp"

// Units, library-wide: time fs, angular frequency rad/fs, chirp rate
// rad/fs^2, dispersion fs^2.
//
// Width convention: every reported width is 2 x (standard deviation of the
// corresponding probability marginal). The unmodulated state then has
// correlation time 2*tau1 and mean-time width 2*tau2.
//
// Rotated coordinates: the difference variable carries index 1 everywhere,
//   t1 = (t_s - t_i)/sqrt(2),  t2 = (t_s + t_i)/sqrt(2),
// and identically for omega, mu and beta. See docs/conventions.md.

namespace biphoton {

// Gaussian two-photon state: time-domain amplitude
//   A(t_s, t_i) ~ exp(-t1^2/(2 tau1^2) - t2^2/(2 tau2^2)).
struct GaussianBiphoton {
  double tau1;  // fs, relative-time width parameter
  double tau2;  // fs, mean-time width parameter

  GaussianBiphoton(double tau1_, double tau2_) : tau1(tau1_), tau2(tau2_) {
    if (!(tau1 > 0.0) || !(tau2 > 0.0) || !std::isfinite(tau1) ||
        !std::isfinite(tau2))
      throw DomainError("GaussianBiphoton: tau1 and tau2 must be positive");
  }

  double entanglement_ratio() const { return tau2 / tau1; }
};

struct ChirpPair {
  double mu_s = 0.0;  // rad/fs^2
  double mu_i = 0.0;  // rad/fs^2

  // Rotated combinations, difference = index 1.
  double mu1() const { return (mu_s - mu_i) / std::sqrt(2.0); }
  double mu2() const { return (mu_s + mu_i) / std::sqrt(2.0); }
};

struct DispersionPair {
  double beta_s = 0.0;  // fs^2
  double beta_i = 0.0;  // fs^2

  double beta1() const { return (beta_s - beta_i) / std::sqrt(2.0); }
  double beta2() const { return (beta_s + beta_i) / std::sqrt(2.0); }
};

struct WidthReport {
  double correlation_time;     // 2 sigma of t_s - t_i
  double mean_time_width;      // 2 sigma of t_s + t_i
  double conditional_t1_width; // 2 sigma of t1 on the t2 = 0 slice
};

inline GaussianBiphoton from_correlation_time(double tc, double ratio) {
  if (!(tc > 0.0) || !(ratio > 0.0))
    throw DomainError("from_correlation_time: Tc and R must be positive");
  return GaussianBiphoton(tc / 2.0, ratio * tc / 2.0);
}

inline WidthReport initial_widths(const GaussianBiphoton& state) {
  return {2.0 * state.tau1, 2.0 * state.tau2,
          2.0 * state.tau1 / std::sqrt(2.0)};
}

}  // namespace biphoton

#endif

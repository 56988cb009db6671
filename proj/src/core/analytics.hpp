#ifndef BIPHOTON_ANALYTICS_HPP
#define BIPHOTON_ANALYTICS_HPP

#include "quadratic_form.hpp"
#include "state.hpp"

namespace biphoton {

struct CompressionResult {
  double final_correlation_time;  // fs
  double compression_ratio;       // initial Tc / final Tc
  DispersionPair beta_used;
};

// Ground truth: 2*sqrt(Var(t_s - t_i)) of the final amplitude, computed by
// exact covariance propagation through chirp and dispersion.
double final_correlation_time_oracle(const GaussianBiphoton& state,
                                     const ChirpPair& chirp,
                                     const DispersionPair& disp);

// The published closed form for T_c,f, evaluated with the rotated
// mu_j, beta_j (difference = index 1; see docs/conventions.md). Agrees with
// the covariance oracle for all inputs.
double eq5_correlation_time(const GaussianBiphoton& state,
                            const ChirpPair& chirp,
                            const DispersionPair& disp);

// Minimizes T_c,f over (beta_s, beta_i). T_c,f^2 is an exact quadratic in
// the betas, so the stationary point comes from a 2x2 linear solve; a
// non-positive-definite Hessian raises DegeneracyError.
CompressionResult optimal_dispersion(const GaussianBiphoton& state,
                                     const ChirpPair& chirp);

// Compression ratio at the optimal dispersion as a function of the
// entanglement ratio R and the dimensionless chirps x = mu_s tau1^2,
// y = mu_i tau1^2.
double eq6_compression_ratio(double ratio, double x, double y);

// Single-pulse limit sqrt(1 + 4 mu^2 tau^4); equals optimal_dispersion on
// the separable state tau1 = tau2 = sqrt(2) tau with mu_s = -mu_i = mu.
double classical_limit_ratio(double tau, double mu);

}  // namespace biphoton

#endif

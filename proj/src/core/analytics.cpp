#include "analytics.hpp"

#include <array>
#include <cmath>

namespace biphoton {

double final_correlation_time_oracle(const GaussianBiphoton& state,
                                     const ChirpPair& chirp,
                                     const DispersionPair& disp) {
  ComplexQuadraticForm f = state_to_form(state);
  f = apply_chirp(f, chirp);
  f = apply_dispersion(f, disp);
  const Cov2 s = covariance(f);
  return 2.0 * std::sqrt(s.s00 + s.s11 - 2.0 * s.s01);
}

double eq5_correlation_time(const GaussianBiphoton& state,
                            const ChirpPair& chirp,
                            const DispersionPair& disp) {
  const double t1 = state.tau1, t2 = state.tau2;
  const std::array<double, 3> tau = {0.0, t1, t2};  // 1-based
  const std::array<double, 3> mu = {0.0, chirp.mu1(), chirp.mu2()};
  const std::array<double, 3> beta = {0.0, disp.beta1(), disp.beta2()};

  double s = t1 * t1;
  for (int j = 1; j <= 2; ++j) {
    const double tj = tau[j], tk = tau[3 - j];
    s += 0.5 * beta[j] * beta[j] *
         (1.0 / (tk * tk) +
          0.5 * (mu[1] * mu[1] * tj * tj + mu[2] * mu[2] * tk * tk));
  }
  s -= beta[1] * mu[1] * t1 * t1;
  s -= beta[2] * mu[2] * t1 * t1;
  s += 0.5 * beta[1] * beta[2] * mu[1] * mu[2] * (t1 * t1 + t2 * t2);
  if (!(s >= 0.0)) throw NumericError("eq5_correlation_time: negative T^2");
  return 2.0 * std::sqrt(s);
}

CompressionResult optimal_dispersion(const GaussianBiphoton& state,
                                     const ChirpPair& chirp) {
  // T_c,f^2 is an exact quadratic in (beta_s, beta_i); recover its gradient
  // and Hessian from six oracle evaluations (exact up to roundoff).
  const double h = state.tau1 * state.tau2;
  auto f = [&](double bs, double bi) {
    const double t = final_correlation_time_oracle(state, chirp, {bs, bi});
    return t * t;
  };
  const double f00 = f(0.0, 0.0);
  const double fp0 = f(h, 0.0), fm0 = f(-h, 0.0);
  const double f0p = f(0.0, h), f0m = f(0.0, -h);
  const double fpp = f(h, h);

  const double h2 = h * h;
  const double hss = (fp0 + fm0 - 2.0 * f00) / h2;
  const double hii = (f0p + f0m - 2.0 * f00) / h2;
  const double hsi = (fpp - fp0 - f0p + f00) / h2;
  const double gs = (fp0 - fm0) / (2.0 * h);
  const double gi = (f0p - f0m) / (2.0 * h);

  const double det = hss * hii - hsi * hsi;
  const double scale = hss * hii + hsi * hsi;
  if (!(hss > 0.0) || !(det > 1e-12 * scale))
    throw DegeneracyError(
        "optimal_dispersion: Hessian not positive definite; "
        "no unique optimal dispersion");

  const DispersionPair beta{(-gs * hii + gi * hsi) / det,
                            (-gi * hss + gs * hsi) / det};
  const double tcf =
      final_correlation_time_oracle(state, chirp, beta);
  return {tcf, 2.0 * state.tau1 / tcf, beta};
}

double eq6_compression_ratio(double ratio, double x, double y) {
  if (!(ratio > 0.0)) throw DomainError("eq6_compression_ratio: R must be > 0");
  const double r2 = ratio * ratio;
  const double sum = x + y;
  const double c = 1.0 - r2 * x * y;
  const double num = (1.0 + r2) * (1.0 + r2) * sum * sum + 4.0 * c * c;
  const double den = r2 * (1.0 + r2) * sum * sum + 4.0 * c;
  // Algebraically den = R^4 (x+y)^2 + R^2 (x-y)^2 + 4 > 0; guard anyway.
  if (!(den > 0.0))
    throw DomainError("eq6_compression_ratio: non-positive denominator");
  return std::sqrt(num / den);
}

double classical_limit_ratio(double tau, double mu) {
  if (!(tau > 0.0)) throw DomainError("classical_limit_ratio: tau must be > 0");
  const double m2t4 = mu * mu * tau * tau * tau * tau;
  return std::sqrt(1.0 + 4.0 * m2t4);
}

}  // namespace biphoton

#ifndef BIPHOTON_QUADRATIC_FORM_HPP
#define BIPHOTON_QUADRATIC_FORM_HPP

#include <complex>

#include "state.hpp"

namespace biphoton {

enum class Domain { Time, Frequency };

// 2x2 complex symmetric matrix [[a, b], [b, d]].
struct Mat2c {
  std::complex<double> a, b, d;
};

Mat2c inverse(const Mat2c& m);

// Pure Gaussian two-photon amplitude A(x) ~ exp(-1/2 x^T M x) with
// x = (t_s, t_i) (time domain) or (omega_s, omega_i) (frequency domain).
// Re(M) must stay positive definite for the amplitude to be normalizable.
struct ComplexQuadraticForm {
  Mat2c m;
  Domain domain = Domain::Time;
};

ComplexQuadraticForm state_to_form(const GaussianBiphoton& state);

// Time-domain chirp multiplication exp(i (mu_s t_s^2 + mu_i t_i^2)/2).
ComplexQuadraticForm apply_chirp(const ComplexQuadraticForm& form,
                                 const ChirpPair& chirp);

// Quadratic spectral phase exp(i (beta_s w_s^2 + beta_i w_i^2)/2), applied
// through the closed-form Gaussian Fourier transform (matrix inversion).
ComplexQuadraticForm apply_dispersion(const ComplexQuadraticForm& form,
                                      const DispersionPair& disp);

// |A|^2 covariance matrix Sigma = (2 Re M)^(-1), entries in fs^2.
struct Cov2 {
  double s00, s01, s11;
};
Cov2 covariance(const ComplexQuadraticForm& form);

// Width report (2 sigma convention) of the form's |A|^2.
WidthReport form_widths(const ComplexQuadraticForm& form);

}  // namespace biphoton

#endif

#include "quadratic_form.hpp"

#include <cmath>

namespace biphoton {

namespace {

using cd = std::complex<double>;

bool re_positive_definite(const Mat2c& m) {
  const double ra = m.a.real(), rb = m.b.real(), rd = m.d.real();
  return ra > 0.0 && ra * rd - rb * rb > 0.0;
}

}  // namespace

Mat2c inverse(const Mat2c& m) {
  const cd det = m.a * m.d - m.b * m.b;
  const double scale =
      std::abs(m.a) + std::abs(m.b) + std::abs(m.d);
  if (!(std::abs(det) > 1e-300 * scale * scale))
    throw NumericError("Mat2c: singular matrix");
  return {m.d / det, -m.b / det, m.a / det};
}

ComplexQuadraticForm state_to_form(const GaussianBiphoton& state) {
  // Rotate diag(1/tau1^2, 1/tau2^2) from (t1, t2) back to (t_s, t_i).
  const double p = 1.0 / (state.tau1 * state.tau1);
  const double q = 1.0 / (state.tau2 * state.tau2);
  return {{cd(0.5 * (p + q)), cd(0.5 * (q - p)), cd(0.5 * (p + q))},
          Domain::Time};
}

ComplexQuadraticForm apply_chirp(const ComplexQuadraticForm& form,
                                 const ChirpPair& chirp) {
  if (form.domain != Domain::Time)
    throw UsageError("apply_chirp: form must be in the time domain");
  ComplexQuadraticForm out = form;
  out.m.a -= cd(0.0, chirp.mu_s);
  out.m.d -= cd(0.0, chirp.mu_i);
  return out;
}

ComplexQuadraticForm apply_dispersion(const ComplexQuadraticForm& form,
                                      const DispersionPair& disp) {
  if (form.domain != Domain::Time)
    throw UsageError("apply_dispersion: form must be in the time domain");
  // Frequency-domain form is M^(-1); the spectral phase subtracts
  // i*diag(beta) there; invert back to time.
  Mat2c w = inverse(form.m);
  w.a -= cd(0.0, disp.beta_s);
  w.d -= cd(0.0, disp.beta_i);
  Mat2c m = inverse(w);
  if (!re_positive_definite(m))
    throw NumericError("apply_dispersion: non-normalizable result");
  return {m, Domain::Time};
}

Cov2 covariance(const ComplexQuadraticForm& form) {
  const double ra = 2.0 * form.m.a.real();
  const double rb = 2.0 * form.m.b.real();
  const double rd = 2.0 * form.m.d.real();
  const double det = ra * rd - rb * rb;
  if (!(det > 0.0) || !(ra > 0.0))
    throw NumericError("covariance: Re(M) not positive definite");
  return {rd / det, -rb / det, ra / det};
}

WidthReport form_widths(const ComplexQuadraticForm& form) {
  const Cov2 s = covariance(form);
  const double var_diff = s.s00 + s.s11 - 2.0 * s.s01;  // Var(t_s - t_i)
  const double var_sum = s.s00 + s.s11 + 2.0 * s.s01;   // Var(t_s + t_i)
  // Conditional t1 slice at t2 = 0: quadratic form restricted to the
  // antidiagonal, Var(t1 | t2=0) = 1/(2 Re(M_rot)_11).
  const double re_a = form.m.a.real(), re_b = form.m.b.real(),
               re_d = form.m.d.real();
  // (R M R^T)_11 with t1 = (t_s - t_i)/sqrt(2).
  const double rot11 = 0.5 * (re_a + re_d) - re_b;
  const double var_cond = 1.0 / (2.0 * rot11);
  return {2.0 * std::sqrt(var_diff), 2.0 * std::sqrt(var_sum),
          2.0 * std::sqrt(var_cond)};
}

}  // namespace biphoton

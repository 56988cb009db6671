#ifndef BIPHOTON_HOM_HPP
#define BIPHOTON_HOM_HPP

#include <vector>

#include "grid.hpp"

namespace biphoton {

// Normalized Hong-Ou-Mandel coincidence curve R_n(tau).
struct HomCurve {
  std::vector<double> delays;  // fs
  std::vector<double> rates;   // dimensionless, clipped to [0, ...]
  double xi_used = 0.0;        // normalization of the overlap term
  double max_abs_imag = 0.0;   // residual imaginary part of the overlap
};

// Overlap integral of the amplitude against its delay-shifted, photon-swapped
// conjugate, R_n = 1 - xi * Re(overlap). xi defaults to the perfect-visibility
// convention (overlap term 1 at tau = 0 for an exchange-symmetric unmodulated
// state); pass xi_override > 0 for reduced-visibility studies.
HomCurve hom_curve(const AmplitudeGrid& grid, const std::vector<double>& delays,
                   double xi_override = 0.0);

// 2 sigma width of the dip profile D(tau) = 1 - R_n(tau) treated as an
// unnormalized density; equals 2 tau1 for the unchirped Gaussian state.
double coherence_time(const HomCurve& curve);

void export_hom_csv(const HomCurve& curve, const std::string& path);

}  // namespace biphoton

#endif

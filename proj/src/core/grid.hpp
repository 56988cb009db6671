#ifndef BIPHOTON_GRID_HPP
#define BIPHOTON_GRID_HPP

#include <complex>
#include <string>
#include <vector>

#include "phase_profile.hpp"
#include "quadratic_form.hpp"
#include "state.hpp"

namespace biphoton {

// Sampled two-photon amplitude on an n x n grid, row-major with axis 0 the
// signal coordinate and axis 1 the idler coordinate. The grid is centered:
// origin = -(n/2) * step, so index n/2 sits exactly at zero on both axes.
struct AmplitudeGrid {
  int n = 0;
  double step = 0.0;    // fs (time domain) or rad/fs (frequency domain)
  double origin = 0.0;  // coordinate of index 0
  Domain domain = Domain::Time;
  std::vector<std::complex<double>> values;  // n*n, row-major

  double coord(int k) const { return origin + k * step; }
  double cell_area() const { return step * step; }
  // Total probability: squared norm times cell area.
  double total_probability() const;
};

struct GridSpec {
  int n = 0;  // 0 = auto-size; otherwise a power of two >= 64
  double extent_sigmas = 8.0;
  double oversample = 2.0;
};

// Fraction of the total probability within two cells of any boundary.
double edge_leakage(const AmplitudeGrid& grid);

// Time-domain sampling of the Gaussian state, normalized to unit total
// probability. mu_max is the caller's anticipated largest |chirp rate|,
// used to reserve spectral headroom for later phase application.
AmplitudeGrid sample_state(const GaussianBiphoton& state, const GridSpec& spec,
                           double mu_max = 0.0);

// Pointwise phase exp(i(phi_s(t_s) + phi_i(t_i))).
AmplitudeGrid apply_phase(const AmplitudeGrid& grid, const PhaseProfile& phi_s,
                          const PhaseProfile& phi_i);

// Unitary 2D transforms; f(w) = (2pi)^(-1) integral A(t) e^{+iwt} dt per
// axis (and the inverse kernel e^{-iwt}), scaled so the total probability
// is identical in both domains.
AmplitudeGrid to_frequency(const AmplitudeGrid& grid);
AmplitudeGrid to_time(const AmplitudeGrid& grid);

// Spectral phase exp(i(beta_s w_s^2 + beta_i w_i^2)/2) applied in the
// frequency domain; input and output are time-domain grids. Trips a
// ResolutionError if the spectrum leaks into the grid edge.
AmplitudeGrid apply_dispersion_grid(const AmplitudeGrid& grid,
                                    const DispersionPair& disp);

WidthReport measure_widths(const AmplitudeGrid& grid);

// Conditional |A(t1, t2=0)|^2 along the antidiagonal through the center.
struct ConditionalSlice {
  std::vector<double> t1;       // fs
  std::vector<double> density;  // unnormalized |A|^2
};
ConditionalSlice conditional_slice(const AmplitudeGrid& grid);

enum class Mode { Signal, Idler };

// Chronocyclic Wigner map of the single-photon reduced density operator,
// normalized to unit integral. Frequencies cover [-pi/(2 step), pi/(2 step)).
struct WignerMap {
  int m = 0;
  double t_start = 0.0, t_step = 0.0;
  double omega_start = 0.0, omega_step = 0.0;
  std::vector<double> values;  // m*m, row-major, row = time index
};
WignerMap reduced_wigner(const AmplitudeGrid& grid, Mode mode, int m);

// CSV dump of |values|^2 with the fixed header "# n dt t0 domain".
void export_intensity(const AmplitudeGrid& grid, const std::string& path);

}  // namespace biphoton

#endif

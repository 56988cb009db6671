#ifndef BIPHOTON_SWEEP_HPP
#define BIPHOTON_SWEEP_HPP

#include <map>
#include <string>
#include <vector>

#include "analytics.hpp"

namespace biphoton {

struct SweepAxis {
  std::string name;
  double min = 0.0, max = 0.0;
  int count = 0;
  double value(int k) const {
    return count > 1 ? min + (max - min) * k / (count - 1) : min;
  }
};

struct SweepResult {
  std::vector<SweepAxis> axes;
  std::vector<double> values;  // row-major over the axes
  std::map<std::string, std::string> metadata;
};

enum class SurfaceMethod { Eq6, Oracle };

// 1/Rc_d over the dimensionless chirp plane (x = mu_s tau1^2,
// y = mu_i tau1^2). Oracle cells run the closed-form dispersion optimum on
// tau1 = 1, tau2 = R; degenerate cells become NaN with a count in metadata.
SweepResult rc_surface(double ratio, double x_min, double x_max, double y_min,
                       double y_max, int n_per_axis, SurfaceMethod method);

// Angle (rad, folded to [0, pi)) minimizing 1/Rc_d on the circle of the
// given radius in the (x, y) plane.
double steepest_drop_direction(double ratio, double radius, int n_angles);

// Optimally compressed T_c,f per tau1 at fixed tau2 and antisymmetric chirp
// mu_s = -mu_i = mu; metadata reports the relative spread (max-min)/mean and
// a warning when a scanned point leaves the deep-chirp regime.
SweepResult width_independence_scan(double tau2, double mu,
                                    const std::vector<double>& tau1_values);

void export_sweep_csv(const SweepResult& sweep, const std::string& path);

}  // namespace biphoton

#endif

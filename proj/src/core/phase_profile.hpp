#ifndef BIPHOTON_PHASE_PROFILE_HPP
#define BIPHOTON_PHASE_PROFILE_HPP

#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace biphoton {

// Parametric single-photon modulator phase phi(t).

struct QuadraticPhase {
  double mu = 0.0;       // rad/fs^2
  double t_center = 0.0;  // fs
};

// phi0 * cos(omega_m t + theta)
struct SinusoidalPhase {
  double phi0 = 0.0;     // rad
  double omega_m = 0.0;  // rad/fs
  double theta = 0.0;    // rad
};

// Sum of Gaussian phase bumps; stands in for ps-scale rotational-revival
// style modulators.
struct PhaseBump {
  double amplitude = 0.0;  // rad
  double center = 0.0;     // fs
  double width = 0.0;      // fs
};
struct RevivalToyPhase {
  std::vector<PhaseBump> bumps;
};

// Uniform samples of phi; linear interpolation between nodes.
struct TabulatedPhase {
  double t_start = 0.0;
  double dt = 0.0;
  std::vector<double> phi;
};

class PhaseProfile {
 public:
  explicit PhaseProfile(QuadraticPhase p) : model_(p) {}
  explicit PhaseProfile(SinusoidalPhase p) : model_(p) {}
  explicit PhaseProfile(RevivalToyPhase p);
  explicit PhaseProfile(TabulatedPhase p);

  static PhaseProfile zero() { return PhaseProfile(QuadraticPhase{0.0, 0.0}); }
  // Two-column CSV (t_fs, phi_rad), strict uniform monotone spacing.
  static PhaseProfile from_csv(const std::string& path);

  double eval(double t) const;

  // Local linear chirp rate d^2 phi / dt^2: analytic for parametric models,
  // central finite difference at the sample spacing for tabulated ones.
  double local_chirp(double t_ref) const;

  bool is_quadratic() const {
    return std::holds_alternative<QuadraticPhase>(model_);
  }
  const std::variant<QuadraticPhase, SinusoidalPhase, RevivalToyPhase,
                     TabulatedPhase>&
  model() const {
    return model_;
  }

 private:
  std::variant<QuadraticPhase, SinusoidalPhase, RevivalToyPhase, TabulatedPhase>
      model_;
};

struct TruncationAudit {
  double mu_local = 0.0;         // rad/fs^2, quadratic coefficient of the fit
  double window = 0.0;           // fs
  double max_residual_rad = 0.0; // sup |phi - quadratic fit| over the window
  bool passes = false;
};

constexpr double kDefaultAuditThreshold = 0.3141592653589793;  // pi/10 rad

// Least-squares quadratic fit of phi over [t_ref - w/2, t_ref + w/2];
// passes when the sup residual stays below threshold_rad.
TruncationAudit truncation_audit(const PhaseProfile& profile, double t_ref,
                                 double window,
                                 double threshold_rad = kDefaultAuditThreshold);

struct CompressibleLimit {
  double window = 0.0;  // fs; +inf sentinel for exactly quadratic profiles
  // Metadata estimate of the narrowest compressed correlation time a
  // modulator of this window and local chirp can reach, 8/(|mu| W)
  // (mean-time width matched to a quarter of the certified window).
  double min_compressed_width = 0.0;
};

// Largest window for which the truncation audit passes, located by
// doubling search plus bisection to 1e-3 relative tolerance.
CompressibleLimit compressible_limit(
    const PhaseProfile& profile, double t_ref,
    double threshold_rad = kDefaultAuditThreshold);

}  // namespace biphoton

#endif

#include "biphoton/biphoton.h"

#include <cstring>
#include <string>

#include "core/analytics.hpp"
#include "core/grid.hpp"
#include "core/hom.hpp"
#include "core/phase_profile.hpp"
#include "core/sweep.hpp"

namespace {

thread_local std::string g_last_error;

template <typename F>
bp_status wrap(F&& fn) {
  try {
    fn();
    return BP_OK;
  } catch (const biphoton::DomainError& e) {
    g_last_error = e.what();
    return BP_ERR_DOMAIN;
  } catch (const biphoton::UsageError& e) {
    g_last_error = e.what();
    return BP_ERR_USAGE;
  } catch (const biphoton::DegeneracyError& e) {
    g_last_error = e.what();
    return BP_ERR_DEGENERATE;
  } catch (const biphoton::ResolutionError& e) {
    g_last_error = e.what();
    return BP_ERR_RESOLUTION;
  } catch (const biphoton::NoDipError& e) {
    g_last_error = e.what();
    return BP_ERR_NODIP;
  } catch (const biphoton::IoError& e) {
    g_last_error = e.what();
    return BP_ERR_IO;
  } catch (const biphoton::NumericError& e) {
    g_last_error = e.what();
    return BP_ERR_NUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BP_ERR_NUMERIC;
  }
}

biphoton::GaussianBiphoton to_cpp(bp_state s) {
  return biphoton::GaussianBiphoton(s.tau1_fs, s.tau2_fs);
}
biphoton::ChirpPair to_cpp(bp_chirp c) { return {c.mu_s, c.mu_i}; }
biphoton::DispersionPair to_cpp(bp_dispersion d) {
  return {d.beta_s, d.beta_i};
}
bp_widths from_cpp(const biphoton::WidthReport& w) {
  return {w.correlation_time, w.mean_time_width, w.conditional_t1_width};
}

bp_status require(bool ok, const char* msg) {
  if (ok) return BP_OK;
  g_last_error = msg;
  return BP_ERR_USAGE;
}

}  // namespace

struct bp_profile {
  biphoton::PhaseProfile impl;
};

struct bp_grid {
  biphoton::AmplitudeGrid impl;
};

extern "C" {

const char* bp_last_error(void) { return g_last_error.c_str(); }

bp_status bp_state_from_correlation_time(double tc_fs, double ratio,
                                         bp_state* out) {
  if (auto s = require(out, "null output"); s != BP_OK) return s;
  return wrap([&] {
    const auto st = biphoton::from_correlation_time(tc_fs, ratio);
    *out = {st.tau1, st.tau2};
  });
}

bp_status bp_initial_widths(bp_state state, bp_widths* out) {
  if (auto s = require(out, "null output"); s != BP_OK) return s;
  return wrap([&] { *out = from_cpp(biphoton::initial_widths(to_cpp(state))); });
}

bp_status bp_final_correlation_time(bp_state state, bp_chirp chirp,
                                    bp_dispersion disp, double* out_fs) {
  if (auto s = require(out_fs, "null output"); s != BP_OK) return s;
  return wrap([&] {
    *out_fs = biphoton::final_correlation_time_oracle(to_cpp(state),
                                                      to_cpp(chirp),
                                                      to_cpp(disp));
  });
}

bp_status bp_eq5_correlation_time(bp_state state, bp_chirp chirp,
                                  bp_dispersion disp, double* out_fs) {
  if (auto s = require(out_fs, "null output"); s != BP_OK) return s;
  return wrap([&] {
    *out_fs = biphoton::eq5_correlation_time(to_cpp(state), to_cpp(chirp),
                                             to_cpp(disp));
  });
}

bp_status bp_optimal_dispersion(bp_state state, bp_chirp chirp,
                                bp_compression* out) {
  if (auto s = require(out, "null output"); s != BP_OK) return s;
  return wrap([&] {
    const auto r = biphoton::optimal_dispersion(to_cpp(state), to_cpp(chirp));
    *out = {r.final_correlation_time, r.compression_ratio,
            {r.beta_used.beta_s, r.beta_used.beta_i}};
  });
}

bp_status bp_eq6_compression_ratio(double ratio, double x, double y,
                                   double* out) {
  if (auto s = require(out, "null output"); s != BP_OK) return s;
  return wrap([&] { *out = biphoton::eq6_compression_ratio(ratio, x, y); });
}

bp_status bp_classical_limit_ratio(double tau_fs, double mu, double* out) {
  if (auto s = require(out, "null output"); s != BP_OK) return s;
  return wrap([&] { *out = biphoton::classical_limit_ratio(tau_fs, mu); });
}

bp_status bp_profile_quadratic(double mu, double t_center_fs,
                               bp_profile** out) {
  if (auto s = require(out, "null output"); s != BP_OK) return s;
  return wrap([&] {
    *out = new bp_profile{
        biphoton::PhaseProfile(biphoton::QuadraticPhase{mu, t_center_fs})};
  });
}

bp_status bp_profile_sinusoidal(double phi0_rad, double omega_m, double theta,
                                bp_profile** out) {
  if (auto s = require(out, "null output"); s != BP_OK) return s;
  return wrap([&] {
    *out = new bp_profile{biphoton::PhaseProfile(
        biphoton::SinusoidalPhase{phi0_rad, omega_m, theta})};
  });
}

bp_status bp_profile_revival_toy(const double* amplitude_rad,
                                 const double* center_fs,
                                 const double* width_fs, int count,
                                 bp_profile** out) {
  if (auto s = require(out && amplitude_rad && center_fs && width_fs &&
                           count > 0,
                       "revival_toy: null arrays or empty bump list");
      s != BP_OK)
    return s;
  return wrap([&] {
    biphoton::RevivalToyPhase p;
    for (int k = 0; k < count; ++k)
      p.bumps.push_back({amplitude_rad[k], center_fs[k], width_fs[k]});
    *out = new bp_profile{biphoton::PhaseProfile(std::move(p))};
  });
}

bp_status bp_profile_tabulated(const double* t_fs, const double* phi_rad,
                               int count, bp_profile** out) {
  if (auto s = require(out && t_fs && phi_rad && count >= 3,
                       "tabulated: need arrays with >= 3 samples");
      s != BP_OK)
    return s;
  return wrap([&] {
    const double dt = t_fs[1] - t_fs[0];
    if (!(dt > 0.0))
      throw biphoton::DomainError("tabulated: time samples must increase");
    for (int k = 1; k < count; ++k)
      if (std::abs(t_fs[k] - t_fs[k - 1] - dt) > 1e-6 * std::abs(dt))
        throw biphoton::DomainError("tabulated: non-uniform time spacing");
    biphoton::TabulatedPhase p{t_fs[0], dt,
                               std::vector<double>(phi_rad, phi_rad + count)};
    *out = new bp_profile{biphoton::PhaseProfile(std::move(p))};
  });
}

bp_status bp_profile_tabulated_csv(const char* path, bp_profile** out) {
  if (auto s = require(out && path, "null path/output"); s != BP_OK) return s;
  return wrap(
      [&] { *out = new bp_profile{biphoton::PhaseProfile::from_csv(path)}; });
}

void bp_profile_free(bp_profile* profile) { delete profile; }

bp_status bp_profile_eval(const bp_profile* profile, double t_fs, double* out) {
  if (auto s = require(profile && out, "null profile/output"); s != BP_OK)
    return s;
  return wrap([&] { *out = profile->impl.eval(t_fs); });
}

bp_status bp_profile_local_chirp(const bp_profile* profile, double t_ref_fs,
                                 double* out) {
  if (auto s = require(profile && out, "null profile/output"); s != BP_OK)
    return s;
  return wrap([&] { *out = profile->impl.local_chirp(t_ref_fs); });
}

bp_status bp_profile_truncation_audit(const bp_profile* profile,
                                      double t_ref_fs, double window_fs,
                                      double threshold_rad, bp_audit* out) {
  if (auto s = require(profile && out, "null profile/output"); s != BP_OK)
    return s;
  return wrap([&] {
    const double thr = threshold_rad > 0.0 ? threshold_rad
                                           : biphoton::kDefaultAuditThreshold;
    const auto a =
        biphoton::truncation_audit(profile->impl, t_ref_fs, window_fs, thr);
    *out = {a.mu_local, a.window, a.max_residual_rad, a.passes ? 1 : 0};
  });
}

bp_status bp_profile_compressible_limit(const bp_profile* profile,
                                        double t_ref_fs, double threshold_rad,
                                        double* window_out,
                                        double* min_width_out) {
  if (auto s = require(profile && window_out, "null profile/output");
      s != BP_OK)
    return s;
  return wrap([&] {
    const double thr = threshold_rad > 0.0 ? threshold_rad
                                           : biphoton::kDefaultAuditThreshold;
    const auto r =
        biphoton::compressible_limit(profile->impl, t_ref_fs, thr);
    *window_out = r.window;
    if (min_width_out) *min_width_out = r.min_compressed_width;
  });
}

bp_status bp_grid_sample(bp_state state, int n, double extent_sigmas,
                         double oversample, double mu_max, bp_grid** out) {
  if (auto s = require(out, "null output"); s != BP_OK) return s;
  return wrap([&] {
    biphoton::GridSpec spec{n, extent_sigmas, oversample};
    *out = new bp_grid{biphoton::sample_state(to_cpp(state), spec, mu_max)};
  });
}

void bp_grid_free(bp_grid* grid) { delete grid; }

int bp_grid_n(const bp_grid* grid) { return grid ? grid->impl.n : 0; }
double bp_grid_dt(const bp_grid* grid) { return grid ? grid->impl.step : 0.0; }
double bp_grid_t0(const bp_grid* grid) {
  return grid ? grid->impl.origin : 0.0;
}

bp_status bp_grid_total_probability(const bp_grid* grid, double* out) {
  if (auto s = require(grid && out, "null grid/output"); s != BP_OK) return s;
  return wrap([&] { *out = grid->impl.total_probability(); });
}

bp_status bp_grid_apply_chirp(bp_grid* grid, bp_chirp chirp) {
  if (auto s = require(grid, "null grid"); s != BP_OK) return s;
  return wrap([&] {
    const biphoton::PhaseProfile ps(biphoton::QuadraticPhase{chirp.mu_s, 0.0});
    const biphoton::PhaseProfile pi(biphoton::QuadraticPhase{chirp.mu_i, 0.0});
    grid->impl = biphoton::apply_phase(grid->impl, ps, pi);
  });
}

bp_status bp_grid_apply_profiles(bp_grid* grid, const bp_profile* phi_s,
                                 const bp_profile* phi_i) {
  if (auto s = require(grid && phi_s && phi_i, "null grid/profile");
      s != BP_OK)
    return s;
  return wrap([&] {
    grid->impl = biphoton::apply_phase(grid->impl, phi_s->impl, phi_i->impl);
  });
}

bp_status bp_grid_apply_dispersion(bp_grid* grid, bp_dispersion disp) {
  if (auto s = require(grid, "null grid"); s != BP_OK) return s;
  return wrap([&] {
    grid->impl = biphoton::apply_dispersion_grid(grid->impl, to_cpp(disp));
  });
}

bp_status bp_grid_measure(const bp_grid* grid, bp_widths* out) {
  if (auto s = require(grid && out, "null grid/output"); s != BP_OK) return s;
  return wrap([&] { *out = from_cpp(biphoton::measure_widths(grid->impl)); });
}

bp_status bp_grid_conditional_slice(const bp_grid* grid, double* t1,
                                    double* density, int* count) {
  if (auto s = require(grid && count, "null grid/count"); s != BP_OK) return s;
  return wrap([&] {
    const auto slice = biphoton::conditional_slice(grid->impl);
    if (t1 && density) {
      if (*count < int(slice.t1.size()))
        throw biphoton::UsageError("conditional_slice: buffer too small");
      std::memcpy(t1, slice.t1.data(), slice.t1.size() * sizeof(double));
      std::memcpy(density, slice.density.data(),
                  slice.density.size() * sizeof(double));
    }
    *count = int(slice.t1.size());
  });
}

bp_status bp_grid_export_intensity(const bp_grid* grid, const char* path) {
  if (auto s = require(grid && path, "null grid/path"); s != BP_OK) return s;
  return wrap([&] { biphoton::export_intensity(grid->impl, path); });
}

bp_status bp_grid_reduced_wigner(const bp_grid* grid, int mode, int m,
                                 double* values, double* t_start,
                                 double* t_step, double* omega_start,
                                 double* omega_step) {
  if (auto s = require(grid && values, "null grid/values"); s != BP_OK)
    return s;
  return wrap([&] {
    const auto w = biphoton::reduced_wigner(
        grid->impl, mode == 0 ? biphoton::Mode::Signal : biphoton::Mode::Idler,
        m);
    std::memcpy(values, w.values.data(), w.values.size() * sizeof(double));
    if (t_start) *t_start = w.t_start;
    if (t_step) *t_step = w.t_step;
    if (omega_start) *omega_start = w.omega_start;
    if (omega_step) *omega_step = w.omega_step;
  });
}

bp_status bp_hom_curve(const bp_grid* grid, const double* delays_fs, int count,
                       double xi_override, double* rates_out, double* xi_out) {
  if (auto s = require(grid && delays_fs && rates_out && count > 0,
                       "null grid/arrays or empty delay list");
      s != BP_OK)
    return s;
  return wrap([&] {
    const auto curve = biphoton::hom_curve(
        grid->impl, std::vector<double>(delays_fs, delays_fs + count),
        xi_override);
    std::memcpy(rates_out, curve.rates.data(), size_t(count) * sizeof(double));
    if (xi_out) *xi_out = curve.xi_used;
  });
}

bp_status bp_hom_coherence_time(const double* delays_fs, const double* rates,
                                int count, double* out_fs) {
  if (auto s = require(delays_fs && rates && out_fs && count > 0,
                       "null arrays/output");
      s != BP_OK)
    return s;
  return wrap([&] {
    biphoton::HomCurve curve;
    curve.delays.assign(delays_fs, delays_fs + count);
    curve.rates.assign(rates, rates + count);
    *out_fs = biphoton::coherence_time(curve);
  });
}

bp_status bp_rc_surface(double ratio, double x_min, double x_max, double y_min,
                        double y_max, int n_per_axis, int method,
                        double* values, int* degenerate_count) {
  if (auto s = require(values, "null values"); s != BP_OK) return s;
  return wrap([&] {
    const auto r = biphoton::rc_surface(
        ratio, x_min, x_max, y_min, y_max, n_per_axis,
        method == 0 ? biphoton::SurfaceMethod::Eq6
                    : biphoton::SurfaceMethod::Oracle);
    std::memcpy(values, r.values.data(), r.values.size() * sizeof(double));
    if (degenerate_count)
      *degenerate_count = std::stoi(r.metadata.at("degenerate_cells"));
  });
}

bp_status bp_steepest_drop_direction(double ratio, double radius, int n_angles,
                                     double* angle_rad) {
  if (auto s = require(angle_rad, "null output"); s != BP_OK) return s;
  return wrap([&] {
    *angle_rad = biphoton::steepest_drop_direction(ratio, radius, n_angles);
  });
}

bp_status bp_width_independence_scan(double tau2_fs, double mu,
                                     const double* tau1_fs, int count,
                                     double* tcf_out, double* spread_out) {
  if (auto s = require(tau1_fs && tcf_out && count > 0, "null arrays/output");
      s != BP_OK)
    return s;
  return wrap([&] {
    const auto r = biphoton::width_independence_scan(
        tau2_fs, mu, std::vector<double>(tau1_fs, tau1_fs + count));
    std::memcpy(tcf_out, r.values.data(), size_t(count) * sizeof(double));
    if (spread_out) *spread_out = std::stod(r.metadata.at("spread"));
  });
}

}  // extern "C"

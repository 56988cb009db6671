/* biphoton: nonlocal linear compression of two-photon time-interval
 * distributions.
 *
 * C API of the shared library. All functions return bp_status; on failure
 * bp_last_error() carries a thread-local message. Opaque handles are
 * created/destroyed with the matching _free call.
 *
 * Units: time fs, angular frequency rad/fs, chirp rad/fs^2, dispersion fs^2.
 * Widths are 2 x (standard deviation of the probability marginal).
 */
#ifndef BIPHOTON_H
#define BIPHOTON_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BP_OK = 0,
  BP_ERR_DOMAIN = 1,     /* invalid physical input */
  BP_ERR_USAGE = 2,      /* API misuse */
  BP_ERR_NUMERIC = 3,    /* numerical breakdown */
  BP_ERR_DEGENERATE = 4, /* no unique dispersion optimum */
  BP_ERR_RESOLUTION = 5, /* grid too small/coarse; message suggests a respec */
  BP_ERR_IO = 6,
  BP_ERR_NODIP = 7
} bp_status;

/* Message for the most recent failure on this thread. */
const char* bp_last_error(void);

typedef struct {
  double tau1_fs;
  double tau2_fs;
} bp_state;

typedef struct {
  double mu_s; /* rad/fs^2 */
  double mu_i;
} bp_chirp;

typedef struct {
  double beta_s; /* fs^2 */
  double beta_i;
} bp_dispersion;

typedef struct {
  double correlation_time_fs;
  double mean_time_width_fs;
  double conditional_t1_width_fs;
} bp_widths;

typedef struct {
  double final_correlation_time_fs;
  double compression_ratio;
  bp_dispersion beta_used;
} bp_compression;

/* ---- analytic engine ---- */

bp_status bp_state_from_correlation_time(double tc_fs, double ratio,
                                         bp_state* out);
bp_status bp_initial_widths(bp_state state, bp_widths* out);

/* Exact covariance-propagation result for the final correlation time. */
bp_status bp_final_correlation_time(bp_state state, bp_chirp chirp,
                                    bp_dispersion disp, double* out_fs);
/* Published closed form; agrees with the covariance result. */
bp_status bp_eq5_correlation_time(bp_state state, bp_chirp chirp,
                                  bp_dispersion disp, double* out_fs);
bp_status bp_optimal_dispersion(bp_state state, bp_chirp chirp,
                                bp_compression* out);
bp_status bp_eq6_compression_ratio(double ratio, double x, double y,
                                   double* out);
bp_status bp_classical_limit_ratio(double tau_fs, double mu, double* out);

/* ---- phase profiles ---- */

typedef struct bp_profile bp_profile;

bp_status bp_profile_quadratic(double mu, double t_center_fs, bp_profile** out);
bp_status bp_profile_sinusoidal(double phi0_rad, double omega_m, double theta,
                                bp_profile** out);
bp_status bp_profile_revival_toy(const double* amplitude_rad,
                                 const double* center_fs,
                                 const double* width_fs, int count,
                                 bp_profile** out);
bp_status bp_profile_tabulated(const double* t_fs, const double* phi_rad,
                               int count, bp_profile** out);
bp_status bp_profile_tabulated_csv(const char* path, bp_profile** out);
void bp_profile_free(bp_profile* profile);

bp_status bp_profile_eval(const bp_profile* profile, double t_fs, double* out);
bp_status bp_profile_local_chirp(const bp_profile* profile, double t_ref_fs,
                                 double* out);

typedef struct {
  double mu_local;
  double window_fs;
  double max_residual_rad;
  int passes;
} bp_audit;

/* threshold_rad <= 0 selects the default pi/10. */
bp_status bp_profile_truncation_audit(const bp_profile* profile,
                                      double t_ref_fs, double window_fs,
                                      double threshold_rad, bp_audit* out);
/* window_out is +inf for exactly quadratic profiles, 0 when the audit never
 * passes. */
bp_status bp_profile_compressible_limit(const bp_profile* profile,
                                        double t_ref_fs, double threshold_rad,
                                        double* window_out,
                                        double* min_width_out);

/* ---- grid engine ---- */

typedef struct bp_grid bp_grid;

/* n = 0 auto-sizes; otherwise a power of two >= 64. mu_max is the largest
 * |chirp rate| the grid will later carry (spectral headroom). */
bp_status bp_grid_sample(bp_state state, int n, double extent_sigmas,
                         double oversample, double mu_max, bp_grid** out);
void bp_grid_free(bp_grid* grid);
int bp_grid_n(const bp_grid* grid);
double bp_grid_dt(const bp_grid* grid);
double bp_grid_t0(const bp_grid* grid);
bp_status bp_grid_total_probability(const bp_grid* grid, double* out);

bp_status bp_grid_apply_chirp(bp_grid* grid, bp_chirp chirp);
bp_status bp_grid_apply_profiles(bp_grid* grid, const bp_profile* phi_s,
                                 const bp_profile* phi_i);
bp_status bp_grid_apply_dispersion(bp_grid* grid, bp_dispersion disp);
bp_status bp_grid_measure(const bp_grid* grid, bp_widths* out);

/* Conditional |A(t1, t2=0)|^2. Call with t1 = NULL to query the count. */
bp_status bp_grid_conditional_slice(const bp_grid* grid, double* t1,
                                    double* density, int* count);
/* CSV dump of |values|^2 with header "# n dt t0 domain". */
bp_status bp_grid_export_intensity(const bp_grid* grid, const char* path);

/* Reduced chronocyclic Wigner map (unit integral), m x m row-major over
 * (time, frequency). mode: 0 = signal, 1 = idler. */
bp_status bp_grid_reduced_wigner(const bp_grid* grid, int mode, int m,
                                 double* values, double* t_start,
                                 double* t_step, double* omega_start,
                                 double* omega_step);

/* ---- Hong-Ou-Mandel ---- */

/* rates_out has count entries; xi_override <= 0 selects the
 * perfect-visibility normalization (returned through xi_out). */
bp_status bp_hom_curve(const bp_grid* grid, const double* delays_fs, int count,
                       double xi_override, double* rates_out, double* xi_out);
bp_status bp_hom_coherence_time(const double* delays_fs, const double* rates,
                                int count, double* out_fs);

/* ---- sweeps ---- */

/* values is n_per_axis^2 row-major (x major). method: 0 = eq6, 1 = oracle. */
bp_status bp_rc_surface(double ratio, double x_min, double x_max, double y_min,
                        double y_max, int n_per_axis, int method,
                        double* values, int* degenerate_count);
bp_status bp_steepest_drop_direction(double ratio, double radius, int n_angles,
                                     double* angle_rad);
bp_status bp_width_independence_scan(double tau2_fs, double mu,
                                     const double* tau1_fs, int count,
                                     double* tcf_out, double* spread_out);

#ifdef __cplusplus
}
#endif

#endif /* BIPHOTON_H */

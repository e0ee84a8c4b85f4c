/* Copyright 2026 The fockcond Authors
   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License. */

/*
 * C interface to the fockcond library.
 *
 * Every fallible call returns a fockcond_status. On failure the message is
 * available from fockcond_last_error() on the calling thread until the next
 * call on that thread. Objects behind opaque handles are owned by the caller
 * and released with the matching *_free function; passing NULL to a *_free
 * function is a no-op.
 */
#ifndef FOCKCOND_H
#define FOCKCOND_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32 || defined __CYGWIN__
#  ifdef FOCKCOND_BUILDING_LIBRARY
#    define FOCKCOND_API __declspec(dllexport)
#  else
#    define FOCKCOND_API __declspec(dllimport)
#  endif
#else
#  define FOCKCOND_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fockcond_status {
  FOCKCOND_OK = 0,
  FOCKCOND_ERR_INVALID_ARGUMENT = 1,
  FOCKCOND_ERR_NO_SOLUTION = 2,
  FOCKCOND_ERR_INVALID_CONFIG = 3,
  FOCKCOND_ERR_NUMERICAL_GUARD = 4,
  FOCKCOND_ERR_OUTCOME_IMPOSSIBLE = 5,
  FOCKCOND_ERR_INTERNAL = 6
} fockcond_status;

FOCKCOND_API const char* fockcond_version(void);
FOCKCOND_API const char* fockcond_status_string(fockcond_status status);
/* Message of the last failed call on this thread, "" if none. */
FOCKCOND_API const char* fockcond_last_error(void);

/* ---- Fock states --------------------------------------------------------- */

typedef struct fockcond_state fockcond_state;

/* count = N + 1 amplitudes; im may be NULL for real amplitudes. */
FOCKCOND_API fockcond_status fockcond_state_from_amplitudes(const double* re, const double* im,
                                                            size_t count, fockcond_state** out);
/* Coherent state |alpha>, renormalized over n <= cutoff. Fails with
 * FOCKCOND_ERR_NUMERICAL_GUARD when the truncation leakage exceeds 1e-6.
 * leakage may be NULL. */
FOCKCOND_API fockcond_status fockcond_state_coherent(double alpha_re, double alpha_im, int cutoff,
                                                     fockcond_state** out, double* leakage);
/* ceil(|alpha|^2 + 8|alpha| + 20) */
FOCKCOND_API int fockcond_default_cutoff(double alpha_re, double alpha_im);
FOCKCOND_API int fockcond_state_cutoff(const fockcond_state* state);
FOCKCOND_API double fockcond_state_norm_squared(const fockcond_state* state);
/* Copies min(count, N+1) amplitudes; im may be NULL. */
FOCKCOND_API fockcond_status fockcond_state_amplitudes(const fockcond_state* state, double* re,
                                                       double* im, size_t count);
FOCKCOND_API fockcond_status fockcond_fidelity(const fockcond_state* a, const fockcond_state* b,
                                               double* out);
FOCKCOND_API void fockcond_state_free(fockcond_state* state);

/* ---- Conditional atom-field maps ----------------------------------------- */

typedef enum fockcond_level { FOCKCOND_GROUND = 0, FOCKCOND_EXCITED = 1 } fockcond_level;

typedef struct fockcond_step {
  double tau;
  fockcond_level level; /* prepared and detected in this level */
} fockcond_step;

/* Applies the steps in order to a normalized state. out_raw receives the
 * unnormalized conditional amplitudes (NULL to skip), probability their
 * squared norm. */
FOCKCOND_API fockcond_status fockcond_apply_sequence(const fockcond_state* state,
                                                     const fockcond_step* steps, size_t step_count,
                                                     fockcond_state** out_raw, double* probability);
/* (1, cos tau, cos(sqrt(2) tau)) */
FOCKCOND_API void fockcond_ns_amplitudes(double tau, double out[3]);
FOCKCOND_API fockcond_status fockcond_ns_gate_check(const fockcond_step* steps, size_t step_count,
                                                    const fockcond_state* const* states,
                                                    size_t state_count, double* worst_fidelity,
                                                    double* min_probability);
/* Field block <out| exp[-i tau (a^dag s^- + a s^+)] |in>, row-major
 * (N+1)x(N+1); count must be at least (N+1)^2. */
FOCKCOND_API fockcond_status fockcond_conditional_block(double tau, int cutoff, fockcond_level in,
                                                        fockcond_level out, double* re, double* im,
                                                        size_t count);

/* ---- Interaction-time searches ------------------------------------------- */

typedef struct fockcond_solution {
  size_t tau_count; /* 1 or 2 */
  double taus[2];
  double amplitudes[3];
  int target[3];
  double merit;
  double seed_merit;
  double spread;
} fockcond_solution;

typedef struct fockcond_solutions fockcond_solutions;

typedef struct fockcond_two_atom_options {
  double tau1_lo, tau1_hi;
  double tau2_lo, tau2_hi;
  double grid_step;
  double target_merit;
  size_t max_seeds;
} fockcond_two_atom_options;

FOCKCOND_API void fockcond_two_atom_options_default(fockcond_two_atom_options* options);
/* Single-atom solutions with tau <= max_tau, best merit first. An empty
 * result is FOCKCOND_OK with a zero count. */
FOCKCOND_API fockcond_status fockcond_ns_search(double max_tau, fockcond_solutions** out);
FOCKCOND_API fockcond_status fockcond_two_atom_search(const fockcond_two_atom_options* options,
                                                      fockcond_solutions** out);
FOCKCOND_API size_t fockcond_solutions_count(const fockcond_solutions* solutions);
FOCKCOND_API fockcond_status fockcond_solutions_get(const fockcond_solutions* solutions,
                                                    size_t index, fockcond_solution* out);
/* Best refined two-atom point whether accepted or not; NO_SOLUTION if the
 * search examined no seed. */
FOCKCOND_API fockcond_status fockcond_solutions_best_attempt(const fockcond_solutions* solutions,
                                                             fockcond_solution* out);
FOCKCOND_API void fockcond_solutions_free(fockcond_solutions* solutions);

/* s_n for n = 0..cutoff (count >= cutoff + 1): -1 on n = 2(2m+1)^2. */
FOCKCOND_API fockcond_status fockcond_sign_pattern(int cutoff, int* signs, size_t count);

typedef struct fockcond_qudit_result {
  double theta;
  double worst_error;
  int within_tolerance;
  int from_family;
  int64_t family_index;
} fockcond_qudit_result;

/* Returns FOCKCOND_ERR_NO_SOLUTION with the best point in *out when no theta
 * below max_theta meets the tolerance. max_theta <= 0 selects the default. */
FOCKCOND_API fockcond_status fockcond_qudit_theta_search(int cutoff, double tolerance,
                                                         double max_theta,
                                                         fockcond_qudit_result* out);

/* ---- Phase space --------------------------------------------------------- */

typedef enum fockcond_q_convention {
  FOCKCOND_Q_PAPER_UNNORMALIZED = 0,
  FOCKCOND_Q_NORMALIZED = 1
} fockcond_q_convention;

typedef struct fockcond_grid_spec {
  double x_lo, x_hi;
  size_t x_points;
  double p_lo, p_hi;
  size_t p_points;
} fockcond_grid_spec;

typedef struct fockcond_qgrid fockcond_qgrid;

FOCKCOND_API fockcond_status fockcond_q_function(const fockcond_state* state,
                                                 const fockcond_grid_spec* grid,
                                                 fockcond_q_convention convention,
                                                 fockcond_qgrid** out);
/* Row-major values, one row of x_points per p sample. */
FOCKCOND_API const double* fockcond_qgrid_values(const fockcond_qgrid* q);
FOCKCOND_API void fockcond_qgrid_spec(const fockcond_qgrid* q, fockcond_grid_spec* out);
FOCKCOND_API int fockcond_qgrid_leakage_warning(const fockcond_qgrid* q);
FOCKCOND_API double fockcond_qgrid_integral(const fockcond_qgrid* q);
FOCKCOND_API void fockcond_qgrid_free(fockcond_qgrid* q);

/* cos(theta sqrt(n)) |alpha> for real alpha; cutoff < 0 picks the default. */
FOCKCOND_API fockcond_status fockcond_conditional_cat(double alpha, double theta, int cutoff,
                                                      fockcond_state** out_raw,
                                                      double* probability);
FOCKCOND_API void fockcond_gaussian_amplitude(double alpha, double theta, double phi, double* re,
                                              double* im);
FOCKCOND_API fockcond_status fockcond_exact_circle_amplitude(double alpha, double theta,
                                                             double phi, int cutoff, double* re,
                                                             double* im, int* leakage_warning);

typedef struct fockcond_peak_comparison {
  double exact_angle;
  double predicted_angle;
  double exact_peak;
  double gaussian_peak;
  double relative_discrepancy;
} fockcond_peak_comparison;

FOCKCOND_API fockcond_status fockcond_compare_gaussian_peak(double alpha, double theta,
                                                            int cutoff,
                                                            fockcond_peak_comparison* out);

#define FOCKCOND_MAX_LOBES 16

typedef struct fockcond_cat_report {
  size_t lobe_count; /* may exceed FOCKCOND_MAX_LOBES; arrays hold the first ones */
  double lobe_angles[FOCKCOND_MAX_LOBES];
  double lobe_heights[FOCKCOND_MAX_LOBES];
  int degenerate;
  double predicted_angle;
  double lobe_separation;
  double best_cat_fidelity;
  double best_gamma_re, best_gamma_im;
  double best_xi;
} fockcond_cat_report;

FOCKCOND_API fockcond_status fockcond_cat_diagnostics(const fockcond_state* state, double alpha,
                                                      double theta, fockcond_cat_report* out);

/* ---- Universality check -------------------------------------------------- */

typedef enum fockcond_series {
  FOCKCOND_SERIES_TRUNCATED = 0,
  FOCKCOND_SERIES_WITHOUT_CUBIC = 1,
  FOCKCOND_SERIES_COMPLETE = 2
} fockcond_series;

/* residuals and cutoffs must hold alpha_count entries. has_exponent is 0 for
 * a single alpha. */
FOCKCOND_API fockcond_status fockcond_residual_scaling(const double* alphas, size_t alpha_count,
                                                       int subspace_dim, fockcond_series series,
                                                       double* residuals, int* cutoffs,
                                                       double* exponent, int* has_exponent);
FOCKCOND_API fockcond_status fockcond_unitary_consistency(double alpha_re, double alpha_im,
                                                          double theta, int cutoff, int interior,
                                                          double* out);

/* ---- Laboratory parameters ----------------------------------------------- */

typedef struct fockcond_raman_params {
  double g;     /* rad/s */
  double omega; /* rad/s */
  double delta; /* rad/s */
} fockcond_raman_params;

FOCKCOND_API fockcond_status fockcond_kappa(const fockcond_raman_params* params, double* kappa,
                                            int* dispersive_warning);
FOCKCOND_API fockcond_status fockcond_interaction_time(double tau, double kappa, double* seconds);

#ifdef __cplusplus
}
#endif

#endif /* FOCKCOND_H */

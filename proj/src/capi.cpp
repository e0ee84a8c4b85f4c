// Copyright 2026 The fockcond Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockcond/fockcond.h"

#include <algorithm>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "fockcond/atom_field.hpp"
#include "fockcond/error.hpp"
#include "fockcond/fock_space.hpp"
#include "fockcond/interaction_search.hpp"
#include "fockcond/lab_params.hpp"
#include "fockcond/phase_space.hpp"
#include "fockcond/universality.hpp"

struct fockcond_state {
  fockcond::FockVector vector;
};

struct fockcond_solutions {
  std::vector<fockcond::TauSolution> solutions;
  std::optional<fockcond::TauSolution> best_attempt;
};

struct fockcond_qgrid {
  fockcond::QGrid grid;
  std::vector<double> row_major;
};

namespace {

thread_local std::string g_last_error;

fockcond_status to_status(fockcond::ErrorCode code) {
  return static_cast<fockcond_status>(static_cast<int>(code));
}

// Runs body, translating exceptions into a status and the thread-local
// message.
template <typename Body>
fockcond_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const fockcond::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FOCKCOND_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FOCKCOND_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return FOCKCOND_ERR_INTERNAL;
  }
}

fockcond_status fail(fockcond_status status, const char* message) {
  g_last_error = message;
  return status;
}

#define FOCKCOND_REQUIRE(cond, msg) \
  do {                              \
    if (!(cond)) return fail(FOCKCOND_ERR_INVALID_ARGUMENT, msg); \
  } while (0)

fockcond::AtomLevel to_level(fockcond_level level) {
  return level == FOCKCOND_EXCITED ? fockcond::AtomLevel::Excited : fockcond::AtomLevel::Ground;
}

std::vector<fockcond::UpsilonStep> to_steps(const fockcond_step* steps, size_t count) {
  std::vector<fockcond::UpsilonStep> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back({steps[i].tau, to_level(steps[i].level)});
  return out;
}

fockcond_solution to_c(const fockcond::TauSolution& s) {
  fockcond_solution out{};
  out.tau_count = std::min<size_t>(s.taus.size(), 2);
  for (size_t i = 0; i < out.tau_count; ++i) out.taus[i] = s.taus[i];
  for (size_t i = 0; i < 3 && i < s.amplitudes.size(); ++i) {
    out.amplitudes[i] = s.amplitudes[i];
    out.target[i] = s.target[i];
  }
  out.merit = s.merit;
  out.seed_merit = s.seed_merit;
  out.spread = s.spread;
  return out;
}

fockcond::GridSpec to_grid(const fockcond_grid_spec& g) {
  return {{g.x_lo, g.x_hi, g.x_points}, {g.p_lo, g.p_hi, g.p_points}};
}

}  // namespace

extern "C" {

const char* fockcond_version(void) { return "0.1.0"; }

const char* fockcond_status_string(fockcond_status status) {
  switch (status) {
    case FOCKCOND_OK:
      return "ok";
    case FOCKCOND_ERR_INTERNAL:
      return "internal error";
    default:
      return fockcond::to_string(static_cast<fockcond::ErrorCode>(status));
  }
}

const char* fockcond_last_error(void) { return g_last_error.c_str(); }

/* ---- states ---- */

fockcond_status fockcond_state_from_amplitudes(const double* re, const double* im, size_t count,
                                               fockcond_state** out) {
  FOCKCOND_REQUIRE(re && out && count > 0, "state_from_amplitudes: null argument or empty");
  return guarded([&] {
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(count));
    for (size_t i = 0; i < count; ++i) amps(static_cast<Eigen::Index>(i)) = {re[i], im ? im[i] : 0.0};
    *out = new fockcond_state{fockcond::FockVector(std::move(amps))};
    return FOCKCOND_OK;
  });
}

fockcond_status fockcond_state_coherent(double alpha_re, double alpha_im, int cutoff,
                                        fockcond_state** out, double* leakage) {
  FOCKCOND_REQUIRE(out, "state_coherent: null output");
  return guarded([&] {
    fockcond::CoherentState c = fockcond::coherent_state({alpha_re, alpha_im}, cutoff);
    if (leakage) *leakage = c.leakage;
    *out = new fockcond_state{std::move(c.state)};
    return FOCKCOND_OK;
  });
}

int fockcond_default_cutoff(double alpha_re, double alpha_im) {
  return fockcond::default_cutoff({alpha_re, alpha_im});
}

int fockcond_state_cutoff(const fockcond_state* state) {
  return state ? state->vector.cutoff() : -1;
}

double fockcond_state_norm_squared(const fockcond_state* state) {
  return state ? state->vector.norm_squared() : 0.0;
}

fockcond_status fockcond_state_amplitudes(const fockcond_state* state, double* re, double* im,
                                          size_t count) {
  FOCKCOND_REQUIRE(state && re, "state_amplitudes: null argument");
  const size_t n = std::min(count, state->vector.dim());
  for (size_t i = 0; i < n; ++i) {
    const auto c = state->vector[static_cast<int>(i)];
    re[i] = c.real();
    if (im) im[i] = c.imag();
  }
  return FOCKCOND_OK;
}

fockcond_status fockcond_fidelity(const fockcond_state* a, const fockcond_state* b, double* out) {
  FOCKCOND_REQUIRE(a && b && out, "fidelity: null argument");
  return guarded([&] {
    *out = fockcond::fidelity(a->vector, b->vector);
    return FOCKCOND_OK;
  });
}

void fockcond_state_free(fockcond_state* state) { delete state; }

/* ---- conditional maps ---- */

fockcond_status fockcond_apply_sequence(const fockcond_state* state, const fockcond_step* steps,
                                        size_t step_count, fockcond_state** out_raw,
                                        double* probability) {
  FOCKCOND_REQUIRE(state && steps && step_count > 0, "apply_sequence: null argument or no steps");
  return guarded([&] {
    const auto seq = to_steps(steps, step_count);
    fockcond::ConditionalOutcome o = fockcond::apply_sequence(state->vector, seq);
    if (probability) *probability = o.probability;
    if (out_raw) *out_raw = new fockcond_state{std::move(o.raw)};
    return FOCKCOND_OK;
  });
}

void fockcond_ns_amplitudes(double tau, double out[3]) {
  const auto a = fockcond::ns_amplitudes(tau);
  std::copy(a.begin(), a.end(), out);
}

fockcond_status fockcond_ns_gate_check(const fockcond_step* steps, size_t step_count,
                                       const fockcond_state* const* states, size_t state_count,
                                       double* worst_fidelity, double* min_probability) {
  FOCKCOND_REQUIRE(steps && step_count > 0 && states, "ns_gate_check: null argument");
  return guarded([&] {
    std::vector<fockcond::FockVector> tests;
    for (size_t i = 0; i < state_count; ++i) {
      if (!states[i]) throw fockcond::Error(fockcond::ErrorCode::InvalidArgument, "ns_gate_check: null state");
      tests.push_back(states[i]->vector);
    }
    const auto report = fockcond::ns_gate_check(to_steps(steps, step_count), tests);
    if (worst_fidelity) *worst_fidelity = report.worst_fidelity;
    if (min_probability) *min_probability = report.min_probability;
    return FOCKCOND_OK;
  });
}

fockcond_status fockcond_conditional_block(double tau, int cutoff, fockcond_level in,
                                           fockcond_level out, double* re, double* im,
                                           size_t count) {
  FOCKCOND_REQUIRE(re, "conditional_block: null output");
  return guarded([&] {
    const size_t dim = static_cast<size_t>(cutoff) + 1;
    if (cutoff < 1 || count < dim * dim) {
      throw fockcond::Error(fockcond::ErrorCode::InvalidArgument,
                            "conditional_block: cutoff must be >= 1 and buffer (N+1)^2");
    }
    const auto block = fockcond::conditional_block(fockcond::joint_evolution(tau, cutoff),
                                                   to_level(in), to_level(out));
    for (size_t r = 0; r < dim; ++r) {
      for (size_t c = 0; c < dim; ++c) {
        const auto v = block(static_cast<int>(r), static_cast<int>(c));
        re[r * dim + c] = v.real();
        if (im) im[r * dim + c] = v.imag();
      }
    }
    return FOCKCOND_OK;
  });
}

/* ---- searches ---- */

void fockcond_two_atom_options_default(fockcond_two_atom_options* options) {
  if (!options) return;
  const fockcond::TwoAtomOptions d;
  *options = {d.tau1.lo, d.tau1.hi, d.tau2.lo, d.tau2.hi, d.grid_step, d.target_merit, d.max_seeds};
}

fockcond_status fockcond_ns_search(double max_tau, fockcond_solutions** out) {
  FOCKCOND_REQUIRE(out, "ns_search: null output");
  return guarded([&] {
    *out = new fockcond_solutions{fockcond::ns_tau_candidates(max_tau), std::nullopt};
    return FOCKCOND_OK;
  });
}

fockcond_status fockcond_two_atom_search(const fockcond_two_atom_options* options,
                                         fockcond_solutions** out) {
  FOCKCOND_REQUIRE(out, "two_atom_search: null output");
  return guarded([&] {
    fockcond::TwoAtomOptions o;
    if (options) {
      o.tau1 = {options->tau1_lo, options->tau1_hi};
      o.tau2 = {options->tau2_lo, options->tau2_hi};
      o.grid_step = options->grid_step;
      o.target_merit = options->target_merit;
      o.max_seeds = options->max_seeds;
    }
    fockcond::TwoAtomResult r = fockcond::two_atom_search(o);
    *out = new fockcond_solutions{std::move(r.solutions), std::move(r.best_attempt)};
    return FOCKCOND_OK;
  });
}

size_t fockcond_solutions_count(const fockcond_solutions* solutions) {
  return solutions ? solutions->solutions.size() : 0;
}

fockcond_status fockcond_solutions_get(const fockcond_solutions* solutions, size_t index,
                                       fockcond_solution* out) {
  FOCKCOND_REQUIRE(solutions && out, "solutions_get: null argument");
  FOCKCOND_REQUIRE(index < solutions->solutions.size(), "solutions_get: index out of range");
  *out = to_c(solutions->solutions[index]);
  return FOCKCOND_OK;
}

fockcond_status fockcond_solutions_best_attempt(const fockcond_solutions* solutions,
                                                fockcond_solution* out) {
  FOCKCOND_REQUIRE(solutions && out, "solutions_best_attempt: null argument");
  if (!solutions->best_attempt) return fail(FOCKCOND_ERR_NO_SOLUTION, "no refined point");
  *out = to_c(*solutions->best_attempt);
  return FOCKCOND_OK;
}

void fockcond_solutions_free(fockcond_solutions* solutions) { delete solutions; }

fockcond_status fockcond_sign_pattern(int cutoff, int* signs, size_t count) {
  FOCKCOND_REQUIRE(signs, "sign_pattern: null output");
  return guarded([&] {
    const auto pattern = fockcond::sign_pattern(cutoff);
    if (count < static_cast<size_t>(cutoff) + 1) {
      throw fockcond::Error(fockcond::ErrorCode::InvalidArgument, "sign_pattern: buffer too small");
    }
    std::copy(pattern.signs().begin(), pattern.signs().end(), signs);
    return FOCKCOND_OK;
  });
}

fockcond_status fockcond_qudit_theta_search(int cutoff, double tolerance, double max_theta,
                                            fockcond_qudit_result* out) {
  FOCKCOND_REQUIRE(out, "qudit_theta_search: null output");
  return guarded([&] {
    fockcond::QuditSearchOptions options;
    if (max_theta > 0.0) options.max_theta = max_theta;
    const auto r = fockcond::qudit_theta_search(fockcond::sign_pattern(cutoff), tolerance, options);
    *out = {r.theta, r.worst_error, r.within_tolerance ? 1 : 0, r.from_family ? 1 : 0,
            r.family_index};
    if (!r.within_tolerance) {
      g_last_error = "no theta within bound";
      return FOCKCOND_ERR_NO_SOLUTION;
    }
    return FOCKCOND_OK;
  });
}

/* ---- phase space ---- */

fockcond_status fockcond_q_function(const fockcond_state* state, const fockcond_grid_spec* grid,
                                    fockcond_q_convention convention, fockcond_qgrid** out) {
  FOCKCOND_REQUIRE(state && grid && out, "q_function: null argument");
  return guarded([&] {
    const auto conv = convention == FOCKCOND_Q_NORMALIZED ? fockcond::QConvention::Normalized
                                                          : fockcond::QConvention::PaperUnnormalized;
    fockcond::QGrid q = fockcond::q_function(state->vector, to_grid(*grid), conv);
    std::vector<double> rows(static_cast<size_t>(q.values.size()));
    size_t k = 0;
    for (Eigen::Index r = 0; r < q.values.rows(); ++r) {
      for (Eigen::Index c = 0; c < q.values.cols(); ++c) rows[k++] = q.values(r, c);
    }
    *out = new fockcond_qgrid{std::move(q), std::move(rows)};
    return FOCKCOND_OK;
  });
}

const double* fockcond_qgrid_values(const fockcond_qgrid* q) { return q ? q->row_major.data() : nullptr; }

void fockcond_qgrid_spec(const fockcond_qgrid* q, fockcond_grid_spec* out) {
  if (!q || !out) return;
  const auto& s = q->grid.spec;
  *out = {s.x.lo, s.x.hi, s.x.points, s.p.lo, s.p.hi, s.p.points};
}

int fockcond_qgrid_leakage_warning(const fockcond_qgrid* q) {
  return q && q->grid.leakage_warning ? 1 : 0;
}

double fockcond_qgrid_integral(const fockcond_qgrid* q) {
  return q ? fockcond::q_integral(q->grid) : 0.0;
}

void fockcond_qgrid_free(fockcond_qgrid* q) { delete q; }

fockcond_status fockcond_conditional_cat(double alpha, double theta, int cutoff,
                                         fockcond_state** out_raw, double* probability) {
  return guarded([&] {
    fockcond::ConditionalOutcome o = fockcond::conditional_cat(alpha, theta, cutoff);
    if (probability) *probability = o.probability;
    if (out_raw) *out_raw = new fockcond_state{std::move(o.raw)};
    return FOCKCOND_OK;
  });
}

void fockcond_gaussian_amplitude(double alpha, double theta, double phi, double* re, double* im) {
  const auto a = fockcond::gaussian_amplitude(alpha, theta, phi);
  if (re) *re = a.real();
  if (im) *im = a.imag();
}

fockcond_status fockcond_exact_circle_amplitude(double alpha, double theta, double phi, int cutoff,
                                                double* re, double* im, int* leakage_warning) {
  return guarded([&] {
    const auto a = fockcond::exact_circle_amplitude(alpha, theta, phi, cutoff);
    if (re) *re = a.value.real();
    if (im) *im = a.value.imag();
    if (leakage_warning) *leakage_warning = a.leakage_warning ? 1 : 0;
    return FOCKCOND_OK;
  });
}

fockcond_status fockcond_compare_gaussian_peak(double alpha, double theta, int cutoff,
                                               fockcond_peak_comparison* out) {
  FOCKCOND_REQUIRE(out, "compare_gaussian_peak: null output");
  return guarded([&] {
    const auto c = fockcond::compare_gaussian_peak(alpha, theta, cutoff);
    *out = {c.exact_angle, c.predicted_angle, c.exact_peak, c.gaussian_peak, c.relative_discrepancy};
    return FOCKCOND_OK;
  });
}

fockcond_status fockcond_cat_diagnostics(const fockcond_state* state, double alpha, double theta,
                                         fockcond_cat_report* out) {
  FOCKCOND_REQUIRE(state && out, "cat_diagnostics: null argument");
  return guarded([&] {
    const auto r = fockcond::cat_diagnostics(state->vector, alpha, theta);
    *out = fockcond_cat_report{};
    out->lobe_count = r.lobes.size();
    for (size_t i = 0; i < r.lobes.size() && i < FOCKCOND_MAX_LOBES; ++i) {
      out->lobe_angles[i] = r.lobes[i].angle;
      out->lobe_heights[i] = r.lobes[i].height;
    }
    out->degenerate = r.degenerate ? 1 : 0;
    out->predicted_angle = r.predicted_angle;
    out->lobe_separation = r.lobe_separation;
    out->best_cat_fidelity = r.best_cat_fidelity;
    out->best_gamma_re = r.best_gamma.real();
    out->best_gamma_im = r.best_gamma.imag();
    out->best_xi = r.best_xi;
    return FOCKCOND_OK;
  });
}

/* ---- universality ---- */

fockcond_status fockcond_residual_scaling(const double* alphas, size_t alpha_count,
                                          int subspace_dim, fockcond_series series,
                                          double* residuals, int* cutoffs, double* exponent,
                                          int* has_exponent) {
  FOCKCOND_REQUIRE(alphas && alpha_count > 0 && residuals, "residual_scaling: null argument");
  return guarded([&] {
    fockcond::SeriesTerms terms = fockcond::SeriesTerms::Truncated;
    if (series == FOCKCOND_SERIES_WITHOUT_CUBIC) terms = fockcond::SeriesTerms::WithoutCubic;
    if (series == FOCKCOND_SERIES_COMPLETE) terms = fockcond::SeriesTerms::Complete;
    const auto r = fockcond::residual_scaling(std::span<const double>(alphas, alpha_count),
                                              subspace_dim, terms);
    for (size_t i = 0; i < r.points.size(); ++i) {
      residuals[i] = r.points[i].residual_norm;
      if (cutoffs) cutoffs[i] = r.points[i].cutoff;
    }
    if (has_exponent) *has_exponent = r.exponent ? 1 : 0;
    if (exponent) *exponent = r.exponent.value_or(0.0);
    return FOCKCOND_OK;
  });
}

fockcond_status fockcond_unitary_consistency(double alpha_re, double alpha_im, double theta,
                                             int cutoff, int interior, double* out) {
  FOCKCOND_REQUIRE(out, "unitary_consistency: null output");
  return guarded([&] {
    *out = fockcond::unitary_consistency({alpha_re, alpha_im}, theta, cutoff, interior);
    return FOCKCOND_OK;
  });
}

/* ---- laboratory parameters ---- */

fockcond_status fockcond_kappa(const fockcond_raman_params* params, double* kappa,
                               int* dispersive_warning) {
  FOCKCOND_REQUIRE(params && kappa, "kappa: null argument");
  return guarded([&] {
    const fockcond::RamanParams p{params->g, params->omega, params->delta};
    *kappa = fockcond::kappa(p);
    if (dispersive_warning) *dispersive_warning = fockcond::dispersive_warning(p) ? 1 : 0;
    return FOCKCOND_OK;
  });
}

fockcond_status fockcond_interaction_time(double tau, double kappa, double* seconds) {
  FOCKCOND_REQUIRE(seconds, "interaction_time: null output");
  return guarded([&] {
    *seconds = fockcond::interaction_time(tau, kappa);
    return FOCKCOND_OK;
  });
}

}  // extern "C"

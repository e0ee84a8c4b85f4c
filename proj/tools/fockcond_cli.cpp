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

// Command-line front end over the fockcond C API.
//
//   fockcond ns-search     single- and two-atom gate interaction times
//   fockcond qfunc         Q-function grid, gnuplot script and lobe report
//   fockcond cat-diagnose  lobe and cat-fidelity report without a grid
//   fockcond universality  generator residual against the series expansion
//   fockcond params        laboratory coupling and interaction times
//   fockcond qudit-theta   theta for the qudit sign-shift pattern
//
// Exit codes: 0 success, 2 no solution, 3 invalid configuration,
// 4 numerical guard abort.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fockcond/fockcond.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 2;
constexpr int kExitInvalidConfig = 3;
constexpr int kExitNumericalGuard = 4;

struct CliFailure {
  int code;
  std::string message;
};

[[noreturn]] void invalid(const std::string& message) { throw CliFailure{kExitInvalidConfig, message}; }

int exit_code_for(fockcond_status status) {
  switch (status) {
    case FOCKCOND_OK:
      return kExitOk;
    case FOCKCOND_ERR_NO_SOLUTION:
      return kExitNoSolution;
    case FOCKCOND_ERR_INVALID_ARGUMENT:
    case FOCKCOND_ERR_INVALID_CONFIG:
      return kExitInvalidConfig;
    case FOCKCOND_ERR_NUMERICAL_GUARD:
    case FOCKCOND_ERR_OUTCOME_IMPOSSIBLE:
      return kExitNumericalGuard;
    default:
      return 1;
  }
}

void check(fockcond_status status) {
  if (status != FOCKCOND_OK) throw CliFailure{exit_code_for(status), fockcond_last_error()};
}

// ---- numeric formatting (12 significant digits everywhere) ----

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(fmt12(v).c_str(), nullptr);
}

// ---- argument parsing ----

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double parse_plain(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t.empty()) invalid("empty value for " + what);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0' || !std::isfinite(v)) invalid("cannot parse " + what + ": '" + text + "'");
  return v;
}

// Real number with optional multiples of pi: "2.5", "10pi", "10*pi", "pi",
// "pi/2", "3pi/4".
double parse_real(const std::string& text, const std::string& what) {
  std::string t = trim(text);
  const auto pos = t.find("pi");
  if (pos == std::string::npos) return parse_plain(t, what);
  std::string head = trim(t.substr(0, pos));
  std::string tail = trim(t.substr(pos + 2));
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  double v = std::numbers::pi;
  if (!head.empty()) v *= head == "-" ? -1.0 : parse_plain(head, what);
  if (!tail.empty()) {
    if (tail.front() != '/') invalid("cannot parse " + what + ": '" + text + "'");
    v /= parse_plain(tail.substr(1), what);
  }
  return v;
}

// Angular frequency in rad/s. A unit suffix (Hz, kHz, MHz, GHz) marks a
// cyclic frequency, converted with 2 pi; a "2pi*" prefix is accepted as the
// same shorthand, so "2pi*4.5MHz", "4.5MHz" and "2.827e7" are equivalent.
double parse_frequency(const std::string& text, const std::string& what) {
  std::string t = trim(text);
  bool cyclic = false;
  for (const char* prefix : {"2pi*", "2*pi*", "2pi"}) {
    if (t.rfind(prefix, 0) == 0) {
      t = trim(t.substr(std::char_traits<char>::length(prefix)));
      cyclic = true;
      break;
    }
  }
  double scale = 1.0;
  const std::pair<const char*, double> units[] = {{"GHz", 1e9}, {"MHz", 1e6}, {"kHz", 1e3}, {"Hz", 1.0}};
  for (const auto& [suffix, factor] : units) {
    const std::string s(suffix);
    if (t.size() > s.size() && t.compare(t.size() - s.size(), s.size(), s) == 0) {
      t = trim(t.substr(0, t.size() - s.size()));
      scale = factor;
      cyclic = true;
      break;
    }
  }
  const double v = parse_plain(t, what) * scale;
  return cyclic ? 2.0 * std::numbers::pi * v : v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

struct Range {
  double lo;
  double hi;
};

Range parse_range(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) invalid(what + " must be lo:hi, got '" + text + "'");
  return {parse_real(parts[0], what), parse_real(parts[1], what)};
}

fockcond_grid_spec parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) invalid("--grid must be x0:x1:n, got '" + text + "'");
  const double lo = parse_real(parts[0], "--grid");
  const double hi = parse_real(parts[1], "--grid");
  const double n = parse_plain(parts[2], "--grid");
  if (!(hi > lo) || n < 2 || n != std::floor(n) || n > 5001) invalid("--grid needs x0 < x1 and 2 <= n <= 5001");
  const auto points = static_cast<size_t>(n);
  return {lo, hi, points, lo, hi, points};
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(item, what));
  if (out.empty()) invalid(what + " is empty");
  return out;
}

// ---- output ----

struct Output {
  std::filesystem::path dir;
  bool csv = true;
  bool json = true;

  std::filesystem::path path(const std::string& name) const { return dir / name; }

  void write(const std::string& name, const std::string& content) const {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream f(path(name), std::ios::binary);
    if (!f) invalid("cannot write " + path(name).string());
    f << content;
  }

  void write_json(const std::string& name, const ordered_json& j) const { write(name, j.dump(2) + "\n"); }
};

Output make_output(const std::string& dir, const std::vector<std::string>& formats) {
  Output out{dir.empty() ? std::filesystem::path(".") : std::filesystem::path(dir)};
  if (!formats.empty()) {
    out.csv = false;
    out.json = false;
    for (const auto& f : formats) {
      for (const auto& item : split(f, ',')) {
        if (item == "csv") {
          out.csv = true;
        } else if (item == "json") {
          out.json = true;
        } else {
          invalid("--format must be csv or json, got '" + item + "'");
        }
      }
    }
  }
  return out;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::initializer_list<const char*> header) {
    bool first = true;
    for (const char* h : header) {
      text_ += first ? "" : ",";
      text_ += h;
      first = false;
    }
    text_ += "\r\n";
  }

  void row(std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
      text_ += first ? "" : ",";
      text_ += fmt12(v);
      first = false;
    }
    text_ += "\r\n";
  }

  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

// RAII for C handles.
template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using StateHandle = Handle<fockcond_state, fockcond_state_free>;
using SolutionsHandle = Handle<fockcond_solutions, fockcond_solutions_free>;
using QGridHandle = Handle<fockcond_qgrid, fockcond_qgrid_free>;

// ---- ns-search ----

struct NsSearchConfig {
  std::string max_tau = "250";
  bool two_atom = false;
  std::string tau1 = "1:60";
  std::string tau2 = "1:250";
  double grid_step = 0.05;
  double target_merit = 1e-6;
};

ordered_json solution_json(const fockcond_solution& s) {
  ordered_json j;
  ordered_json taus = ordered_json::array();
  for (size_t i = 0; i < s.tau_count; ++i) taus.push_back(num(s.taus[i]));
  j["taus"] = taus;
  j["amplitudes"] = {num(s.amplitudes[0]), num(s.amplitudes[1]), num(s.amplitudes[2])};
  j["target"] = {s.target[0], s.target[1], s.target[2]};
  j["merit"] = num(s.merit);
  j["spread"] = num(s.spread);
  return j;
}

int run_ns_search(const NsSearchConfig& cfg, const Output& out) {
  SolutionsHandle sols;
  ordered_json doc;
  doc["command"] = "ns-search";
  if (!cfg.two_atom) {
    const double max_tau = parse_real(cfg.max_tau, "--max-tau");
    check(fockcond_ns_search(max_tau, sols.out()));
    doc["mode"] = "single-atom";
    doc["max_tau"] = num(max_tau);
  } else {
    fockcond_two_atom_options opt;
    fockcond_two_atom_options_default(&opt);
    const Range r1 = parse_range(cfg.tau1, "--tau1");
    const Range r2 = parse_range(cfg.tau2, "--tau2");
    opt.tau1_lo = r1.lo;
    opt.tau1_hi = r1.hi;
    opt.tau2_lo = r2.lo;
    opt.tau2_hi = r2.hi;
    opt.grid_step = cfg.grid_step;
    opt.target_merit = cfg.target_merit;
    check(fockcond_two_atom_search(&opt, sols.out()));
    doc["mode"] = "two-atom";
    doc["tau1_range"] = {num(r1.lo), num(r1.hi)};
    doc["tau2_range"] = {num(r2.lo), num(r2.hi)};
    doc["target_merit"] = num(cfg.target_merit);
  }

  const size_t count = fockcond_solutions_count(sols.get());
  CsvWriter csv = cfg.two_atom ? CsvWriter({"tau1", "tau2", "B0", "B1", "B2", "merit", "spread"})
                               : CsvWriter({"tau", "A0", "A1", "A2", "merit"});
  ordered_json list = ordered_json::array();
  for (size_t i = 0; i < count; ++i) {
    fockcond_solution s;
    check(fockcond_solutions_get(sols.get(), i, &s));
    if (cfg.two_atom) {
      csv.row({s.taus[0], s.taus[1], s.amplitudes[0], s.amplitudes[1], s.amplitudes[2], s.merit, s.spread});
    } else {
      csv.row({s.taus[0], s.amplitudes[0], s.amplitudes[1], s.amplitudes[2], s.merit});
    }
    list.push_back(solution_json(s));
  }
  doc["solutions"] = list;
  const std::string stem = cfg.two_atom ? "two_atom" : "table1";
  if (out.csv) out.write(stem + ".csv", csv.text());
  if (out.json) out.write_json(stem + ".json", doc);

  std::cout << count << " solution(s) written to " << out.path(stem).string() << ".*\n";
  if (count == 0) {
    fockcond_solution best;
    if (cfg.two_atom && fockcond_solutions_best_attempt(sols.get(), &best) == FOCKCOND_OK) {
      std::cerr << "no solutions; closest point tau1=" << fmt12(best.taus[0]) << " tau2=" << fmt12(best.taus[1])
                << " spread=" << fmt12(best.spread) << "\n";
    } else {
      std::cerr << "no solutions\n";
    }
    return kExitNoSolution;
  }
  return kExitOk;
}

// ---- qfunc / cat-diagnose ----

struct CatConfig {
  std::string alpha = "10";
  std::string theta = "10pi";
  std::string grid = "-15:15:301";
  int cutoff = -1;
  std::string convention = "paper";
};

ordered_json lobes_json(double alpha, double theta, int cutoff, double probability,
                        const fockcond_cat_report& r) {
  ordered_json j;
  j["alpha"] = num(alpha);
  j["theta"] = num(theta);
  j["cutoff"] = cutoff;
  j["success_probability"] = num(probability);
  j["predicted_angle"] = num(r.predicted_angle);
  j["lobe_count"] = r.lobe_count;
  j["degenerate"] = r.degenerate != 0;
  ordered_json lobes = ordered_json::array();
  for (size_t i = 0; i < r.lobe_count && i < FOCKCOND_MAX_LOBES; ++i) {
    lobes.push_back({{"angle", num(r.lobe_angles[i])}, {"height", num(r.lobe_heights[i])}});
  }
  j["lobes"] = lobes;
  j["lobe_separation"] = num(r.lobe_separation);
  j["best_cat_fidelity"] = num(r.best_cat_fidelity);
  j["best_gamma"] = {{"re", num(r.best_gamma_re)}, {"im", num(r.best_gamma_im)}};
  j["best_xi"] = num(r.best_xi);
  return j;
}

struct CatState {
  double alpha;
  double theta;
  int cutoff;
  double probability;
  StateHandle raw;
};

void build_cat(const CatConfig& cfg, CatState& s) {
  s.alpha = parse_real(cfg.alpha, "--alpha");
  s.theta = parse_real(cfg.theta, "--theta");
  if (!(s.alpha > 0.0)) invalid("--alpha must be positive");
  s.cutoff = cfg.cutoff >= 0 ? cfg.cutoff : fockcond_default_cutoff(s.alpha, 0.0);
  check(fockcond_conditional_cat(s.alpha, s.theta, s.cutoff, s.raw.out(), &s.probability));
}

std::string gnuplot_script(const fockcond_grid_spec& g, double alpha, double theta) {
  std::ostringstream gp;
  gp << "# Q-function heatmap of cos(theta sqrt(n)) |alpha>, alpha=" << fmt12(alpha)
     << " theta=" << fmt12(theta) << "\n"
     << "# usage: gnuplot -p qgrid.gp   (uncomment the next two lines for a PNG)\n"
     << "# set terminal pngcairo size 800,800\n"
     << "# set output 'qgrid.png'\n"
     << "set datafile separator ','\n"
     << "set size ratio -1\n"
     << "set xrange [" << fmt12(g.x_lo) << ":" << fmt12(g.x_hi) << "]\n"
     << "set yrange [" << fmt12(g.p_lo) << ":" << fmt12(g.p_hi) << "]\n"
     << "set xlabel 'x'\n"
     << "set ylabel 'p'\n"
     << "set palette rgbformulae 33,13,10\n"
     << "plot 'qgrid.csv' skip 1 using 1:2:3 with image notitle\n";
  return gp.str();
}

int run_qfunc(const CatConfig& cfg, const Output& out) {
  fockcond_q_convention conv = FOCKCOND_Q_PAPER_UNNORMALIZED;
  if (cfg.convention == "normalized") {
    conv = FOCKCOND_Q_NORMALIZED;
  } else if (cfg.convention != "paper") {
    invalid("--convention must be paper or normalized");
  }
  const fockcond_grid_spec grid = parse_grid(cfg.grid);
  CatState s;
  build_cat(cfg, s);

  QGridHandle q;
  check(fockcond_q_function(s.raw.get(), &grid, conv, q.out()));
  if (fockcond_qgrid_leakage_warning(q.get())) {
    std::cerr << "warning: grid reaches |beta|^2 > cutoff/2 = " << s.cutoff / 2.0 << "\n";
  }
  const double* values = fockcond_qgrid_values(q.get());
  const double dx = (grid.x_hi - grid.x_lo) / static_cast<double>(grid.x_points - 1);
  const double dp = (grid.p_hi - grid.p_lo) / static_cast<double>(grid.p_points - 1);

  if (out.csv) {
    CsvWriter csv({"x", "p", "Q"});
    for (size_t ip = 0; ip < grid.p_points; ++ip) {
      for (size_t ix = 0; ix < grid.x_points; ++ix) {
        csv.row({grid.x_lo + static_cast<double>(ix) * dx, grid.p_lo + static_cast<double>(ip) * dp,
                 values[ip * grid.x_points + ix]});
      }
    }
    out.write("qgrid.csv", csv.text());
    out.write("qgrid.gp", gnuplot_script(grid, s.alpha, s.theta));
  }
  if (out.json) {
    ordered_json j;
    j["alpha"] = num(s.alpha);
    j["theta"] = num(s.theta);
    j["cutoff"] = s.cutoff;
    j["convention"] = cfg.convention;
    j["success_probability"] = num(s.probability);
    j["grid"] = {{"x", {{"lo", num(grid.x_lo)}, {"hi", num(grid.x_hi)}, {"points", grid.x_points}}},
                 {"p", {{"lo", num(grid.p_lo)}, {"hi", num(grid.p_hi)}, {"points", grid.p_points}}}};
    j["leakage_warning"] = fockcond_qgrid_leakage_warning(q.get()) != 0;
    ordered_json rows = ordered_json::array();
    for (size_t ip = 0; ip < grid.p_points; ++ip) {
      ordered_json row = ordered_json::array();
      for (size_t ix = 0; ix < grid.x_points; ++ix) row.push_back(num(values[ip * grid.x_points + ix]));
      rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    out.write_json("qgrid.json", j);
  }

  fockcond_cat_report report;
  check(fockcond_cat_diagnostics(s.raw.get(), s.alpha, s.theta, &report));
  out.write_json("lobes.json", lobes_json(s.alpha, s.theta, s.cutoff, s.probability, report));
  std::cout << "lobes:";
  for (size_t i = 0; i < report.lobe_count && i < FOCKCOND_MAX_LOBES; ++i) std::cout << " " << fmt12(report.lobe_angles[i]);
  std::cout << "\n";
  return kExitOk;
}

int run_cat_diagnose(const CatConfig& cfg, const Output& out) {
  CatState s;
  build_cat(cfg, s);
  fockcond_cat_report report;
  check(fockcond_cat_diagnostics(s.raw.get(), s.alpha, s.theta, &report));
  const ordered_json j = lobes_json(s.alpha, s.theta, s.cutoff, s.probability, report);
  out.write_json("cat.json", j);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

// ---- universality ----

struct UniversalityConfig {
  std::string alphas = "4,6,8,12,16";
  int subspace = 3;
  bool drop_cubic = false;
  std::string series = "truncated";
};

int run_universality(const UniversalityConfig& cfg, const Output& out) {
  const std::vector<double> alphas = parse_list(cfg.alphas, "--alpha");
  fockcond_series series = FOCKCOND_SERIES_TRUNCATED;
  std::string series_name = cfg.series;
  if (cfg.drop_cubic) {
    series = FOCKCOND_SERIES_WITHOUT_CUBIC;
    series_name = "no-cubic";
  } else if (cfg.series == "no-cubic") {
    series = FOCKCOND_SERIES_WITHOUT_CUBIC;
  } else if (cfg.series == "complete") {
    series = FOCKCOND_SERIES_COMPLETE;
  } else if (cfg.series != "truncated") {
    invalid("--series must be truncated, no-cubic or complete");
  }
  std::vector<double> residuals(alphas.size());
  std::vector<int> cutoffs(alphas.size());
  double exponent = 0.0;
  int has_exponent = 0;
  check(fockcond_residual_scaling(alphas.data(), alphas.size(), cfg.subspace, series, residuals.data(),
                                  cutoffs.data(), &exponent, &has_exponent));

  CsvWriter csv({"alpha", "cutoff", "residual"});
  ordered_json points = ordered_json::array();
  for (size_t i = 0; i < alphas.size(); ++i) {
    csv.row({alphas[i], static_cast<double>(cutoffs[i]), residuals[i]});
    points.push_back({{"alpha", num(alphas[i])}, {"cutoff", cutoffs[i]}, {"residual", num(residuals[i])}});
  }
  if (out.csv) out.write("scaling.csv", csv.text());

  ordered_json summary;
  summary["series"] = series_name;
  summary["subspace_dim"] = cfg.subspace;
  summary["points"] = points;
  summary["exponent"] = has_exponent ? num(exponent) : ordered_json(nullptr);
  summary["expected_window"] = {-3.5, -2.5};
  summary["within_window"] = has_exponent ? ordered_json(exponent >= -3.5 && exponent <= -2.5) : ordered_json(nullptr);
  out.write_json("summary.json", summary);
  std::cout << "exponent: " << (has_exponent ? fmt12(exponent) : std::string("null")) << "\n";
  return kExitOk;
}

// ---- params ----

struct ParamsConfig {
  std::string g = "2pi*4.5MHz";
  std::string omega = "2pi*30MHz";
  std::string delta = "2pi*6MHz";
  std::string taus = "6.5064,37.73742,219.918";
};

int run_params(const ParamsConfig& cfg) {
  const fockcond_raman_params p{parse_frequency(cfg.g, "--g"), parse_frequency(cfg.omega, "--omega"),
                                parse_frequency(cfg.delta, "--delta")};
  double kappa = 0.0;
  int warning = 0;
  check(fockcond_kappa(&p, &kappa, &warning));
  ordered_json j;
  j["g_rad_per_s"] = num(p.g);
  j["omega_rad_per_s"] = num(p.omega);
  j["delta_rad_per_s"] = num(p.delta);
  j["kappa_rad_per_s"] = num(kappa);
  j["kappa_hz"] = num(kappa / (2.0 * std::numbers::pi));
  j["dispersive_warning"] = warning != 0;
  ordered_json times = ordered_json::array();
  for (double tau : parse_list(cfg.taus, "--tau")) {
    double t = 0.0;
    check(fockcond_interaction_time(tau, kappa, &t));
    times.push_back({{"tau", num(tau)}, {"seconds", num(t)}, {"microseconds", num(t * 1e6)}});
  }
  j["interaction_times"] = times;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

// ---- qudit-theta ----

struct QuditConfig {
  int n = 2;
  double tolerance = 0.01;
  double max_theta = 2.0e4;
};

int run_qudit_theta(const QuditConfig& cfg) {
  if (cfg.n < 0) invalid("--n must be >= 0");
  fockcond_qudit_result r{};
  const fockcond_status status = fockcond_qudit_theta_search(cfg.n, cfg.tolerance, cfg.max_theta, &r);
  if (status != FOCKCOND_OK && status != FOCKCOND_ERR_NO_SOLUTION) check(status);

  std::vector<int> signs(static_cast<size_t>(cfg.n) + 1);
  check(fockcond_sign_pattern(cfg.n, signs.data(), signs.size()));
  ordered_json j;
  j["N"] = cfg.n;
  j["tolerance"] = num(cfg.tolerance);
  j["theta"] = num(r.theta);
  j["worst_error"] = num(r.worst_error);
  j["within_tolerance"] = r.within_tolerance != 0;
  j["from_family"] = r.from_family != 0;
  j["family_index"] = r.family_index;
  ordered_json flips = ordered_json::array();
  ordered_json table = ordered_json::array();
  for (int n = 0; n <= cfg.n; ++n) {
    if (signs[static_cast<size_t>(n)] < 0) flips.push_back(n);
    table.push_back({{"n", n},
                     {"target", signs[static_cast<size_t>(n)]},
                     {"cos", num(std::cos(r.theta * std::sqrt(static_cast<double>(n))))}});
  }
  j["flips"] = flips;
  j["table"] = table;
  std::cout << j.dump(2) << "\n";
  if (status == FOCKCOND_ERR_NO_SOLUTION) {
    std::cerr << "no theta within bound " << fmt12(cfg.max_theta) << "; best worst_error " << fmt12(r.worst_error)
              << "\n";
    return kExitNoSolution;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditional Fock-space nonlinearity toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value configuration file (CLI flags take precedence)");

  std::string out_dir = ".";
  std::vector<std::string> formats;
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--format", formats, "csv and/or json (default both)");

  NsSearchConfig ns;
  auto* ns_cmd = app.add_subcommand("ns-search", "nonlinear sign gate interaction times");
  ns_cmd->add_option("--max-tau", ns.max_tau, "largest single-atom tau")->capture_default_str();
  ns_cmd->add_flag("--two-atom", ns.two_atom, "search (tau1, tau2) for a ground and an excited atom");
  ns_cmd->add_option("--tau1", ns.tau1, "two-atom tau1 range lo:hi")->capture_default_str();
  ns_cmd->add_option("--tau2", ns.tau2, "two-atom tau2 range lo:hi")->capture_default_str();
  ns_cmd->add_option("--grid-step", ns.grid_step, "two-atom coarse grid step")->capture_default_str();
  ns_cmd->add_option("--target-merit", ns.target_merit, "accepted equal-magnitude spread")->capture_default_str();

  CatConfig qf;
  auto* qf_cmd = app.add_subcommand("qfunc", "Q-function of cos(theta sqrt(n)) applied to |alpha>");
  CatConfig cd;
  auto* cd_cmd = app.add_subcommand("cat-diagnose", "lobe angles and cat fidelity");
  for (auto [cmd, cfg] : {std::pair{qf_cmd, &qf}, std::pair{cd_cmd, &cd}}) {
    cmd->add_option("--alpha", cfg->alpha, "real coherent amplitude")->capture_default_str();
    cmd->add_option("--theta", cfg->theta, "interaction angle, e.g. 10pi")->capture_default_str();
    cmd->add_option("--cutoff", cfg->cutoff, "Fock cutoff (default ceil(a^2+8a+20))");
  }
  qf_cmd->add_option("--grid", qf.grid, "square grid x0:x1:n for both x and p")->capture_default_str();
  qf_cmd->add_option("--convention", qf.convention, "paper or normalized")->capture_default_str();

  UniversalityConfig un;
  auto* un_cmd = app.add_subcommand("universality", "displaced generator residual scaling");
  un_cmd->add_option("--alpha", un.alphas, "comma-separated displacements")->capture_default_str();
  un_cmd->add_option("--subspace", un.subspace, "compare on n <= k")->capture_default_str();
  un_cmd->add_flag("--drop-cubic", un.drop_cubic, "omit the cubic term from the series");
  un_cmd->add_option("--series", un.series, "truncated, no-cubic or complete")->capture_default_str();

  ParamsConfig pa;
  auto* pa_cmd = app.add_subcommand("params", "coupling constant and interaction times");
  pa_cmd->add_option("--g", pa.g, "one-photon Rabi frequency (rad/s, or e.g. 2pi*4.5MHz)")->capture_default_str();
  pa_cmd->add_option("--omega", pa.omega, "Raman Rabi frequency")->capture_default_str();
  pa_cmd->add_option("--delta", pa.delta, "detuning")->capture_default_str();
  pa_cmd->add_option("--tau", pa.taus, "comma-separated dimensionless times")->capture_default_str();

  QuditConfig qu;
  auto* qu_cmd = app.add_subcommand("qudit-theta", "theta for the sign shift on n = 2(2m+1)^2");
  qu_cmd->add_option("--n", qu.n, "largest Fock level N")->capture_default_str();
  qu_cmd->add_option("--tolerance", qu.tolerance, "max |cos(theta sqrt n) - s_n|")->capture_default_str();
  qu_cmd->add_option("--max-theta", qu.max_theta, "search bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    const Output out = make_output(out_dir, formats);
    if (*ns_cmd) return run_ns_search(ns, out);
    if (*qf_cmd) return run_qfunc(qf, out);
    if (*cd_cmd) return run_cat_diagnose(cd, out);
    if (*un_cmd) return run_universality(un, out);
    if (*pa_cmd) return run_params(pa);
    if (*qu_cmd) return run_qudit_theta(qu);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kExitInvalidConfig;
}

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "mixmeas/thermal_model.hpp"

namespace mixmeas {

// CODATA values, J s and J/K. Unit handling stops here: the core works in
// the dimensionless beta everywhere.
inline constexpr double kHBar = 1.054571817e-34;
inline constexpr double kBoltzmann = 1.380649e-23;

// beta = hbar * omega / (k_B * T).
double convert_units(double omega, double temperature);

enum class Method {
  kHelstromClosed,
  kHelstromNumeric,
  kBayesExact,
  kHolevoBound,
  kLowTempApprox,
};

std::string_view to_string(Method method);
Method method_from_string(std::string_view name);
// Comma-separated list, e.g. "helstrom-closed,holevo-bound".
std::vector<Method> parse_method_list(std::string_view names);

struct SweepRow {
  double log10_beta;
  double beta;
  int levels;
  Method method;
  double p_c;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

struct GridSpec {
  double beta_min = 1e-3;
  double beta_max = 1e2;
  int points = 101;
};

// log10-spaced grid inclusive of both endpoints.
std::vector<double> log10_grid(const GridSpec& grid);

struct SweepRequest {
  GridSpec grid{};
  int levels = 2;
  std::vector<Method> methods{};
  Eigen::VectorXd priors{};   // empty means uniform
  double tail_epsilon = 1e-12;
};

// Evaluate every requested method at every grid point. Per-point numeric
// failures become warnings and missing rows rather than errors; rows come
// back sorted by (levels, method, beta).
SweepResult run_sweep(const SweepRequest& request,
                      std::vector<std::string>* warnings = nullptr);

void sort_rows(SweepResult& result);

struct ValidityRow {
  double log10_beta;
  double beta;
  double bound;   // e^{H-h}, closed-form path
  double exact;   // Bayes-optimal success probability
  double delta;   // bound - exact; no sign is asserted
};

struct ValidityReport {
  int levels = 2;
  std::vector<ValidityRow> rows;
  double min_delta = 0.0;
  double argmin_beta = 0.0;
};

// Gap between the entropic bound and the exact optimum across a beta
// grid. Where the numeric ensemble is refused, the exact column degrades
// to the two-level closed form when available; otherwise the point is
// skipped with a warning.
ValidityReport validity_report(const GridSpec& grid, int levels,
                               double tail_epsilon = 1e-12,
                               std::vector<std::string>* warnings = nullptr);

// 12 significant digits, locale-independent; shared by every emitter so
// files are byte-stable across runs.
std::string format_real(double value);

// CSV schema: header "log10_beta,beta,levels,method,p_c", one row per
// (grid point, levels, method), newline-terminated.
std::string to_csv(const SweepResult& result);
SweepResult parse_csv(const std::string& text);

std::string to_csv(const ValidityReport& report);

// Gnuplot script plotting p_c against log10(beta), one series per
// (levels, method) pair found in the result. `csv_path` is referenced as
// given; `image_path` is the render target.
std::string gnuplot_script(const SweepResult& result,
                           const std::string& csv_path,
                           const std::string& image_path);

}  // namespace mixmeas

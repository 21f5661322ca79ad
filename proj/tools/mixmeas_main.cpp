// Experiment CLI: success probabilities and entropic bounds for reading
// out a quantum system through an apparatus prepared in a thermal state.
//
// Exit codes: 0 success, 1 invalid arguments, 2 numeric failure that left
// every requested method unavailable.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mixmeas/sweep.hpp"

namespace {

using namespace mixmeas;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::string image_path_for(const std::string& script_path) {
  const std::size_t dot = script_path.find_last_of('.');
  const std::size_t slash = script_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return script_path + ".png";
  return script_path.substr(0, dot) + ".png";
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

Eigen::VectorXd to_priors(const std::vector<double>& values) {
  Eigen::VectorXd priors(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    priors(static_cast<Eigen::Index>(i)) = values[i];
  return priors;
}

int emit_sweep_outputs(const SweepResult& result, const std::string& out_path,
                       const std::string& script_path) {
  if (result.rows.empty()) {
    std::cerr << "error: no requested method could be evaluated anywhere on "
                 "the grid\n";
    return 2;
  }
  write_file(out_path, to_csv(result));
  std::cout << "wrote " << out_path << " (" << result.rows.size() << " rows)\n";
  if (!script_path.empty()) {
    write_file(script_path,
               gnuplot_script(result, out_path, image_path_for(script_path)));
    std::cout << "wrote " << script_path << "\n";
  }
  return 0;
}

struct FigureOptions {
  GridSpec grid{1e-3, 1e2, 101};
  double tail_epsilon = 1e-12;
  std::string out;
  std::string script;
};

void add_grid_flags(CLI::App* cmd, GridSpec& grid) {
  cmd->add_option("--beta-min", grid.beta_min, "Lowest beta on the grid");
  cmd->add_option("--beta-max", grid.beta_max, "Highest beta on the grid");
  cmd->add_option("--points", grid.points, "Number of log-spaced grid points");
}

int run_fig1(const FigureOptions& opt) {
  SweepRequest request;
  request.grid = opt.grid;
  request.levels = 2;
  request.methods = {Method::kHelstromClosed, Method::kHelstromNumeric};
  request.tail_epsilon = opt.tail_epsilon;
  std::vector<std::string> warnings;
  const SweepResult result = run_sweep(request, &warnings);
  print_warnings(warnings);
  return emit_sweep_outputs(result, opt.out, opt.script);
}

int run_fig2(const FigureOptions& opt) {
  SweepResult merged;
  std::vector<std::string> warnings;
  for (int levels : {2, 4, 8}) {
    SweepRequest request;
    request.grid = opt.grid;
    request.levels = levels;
    request.methods = {Method::kHolevoBound};
    request.tail_epsilon = opt.tail_epsilon;
    const SweepResult part = run_sweep(request, &warnings);
    merged.rows.insert(merged.rows.end(), part.rows.begin(), part.rows.end());
  }
  sort_rows(merged);
  print_warnings(warnings);
  return emit_sweep_outputs(merged, opt.out, opt.script);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mixmeas: success probabilities and entropic bounds for quantum "
      "measurements with a thermal apparatus"};
  app.require_subcommand(1);

  FigureOptions fig1_opt{.out = "fig1.csv", .script = "fig1.gp"};
  CLI::App* fig1 = app.add_subcommand(
      "fig1", "Two-level Helstrom success probability vs log10(beta)");
  add_grid_flags(fig1, fig1_opt.grid);
  fig1->add_option("--tail-epsilon", fig1_opt.tail_epsilon,
                   "Discarded Fock tail mass");
  fig1->add_option("--out", fig1_opt.out, "Output CSV path");
  fig1->add_option("--plot-script", fig1_opt.script, "Output gnuplot path");

  FigureOptions fig2_opt{.out = "fig2.csv", .script = "fig2.gp"};
  CLI::App* fig2 = app.add_subcommand(
      "fig2",
      "Entropic success bound vs log10(beta) for 2-, 4- and 8-level systems");
  add_grid_flags(fig2, fig2_opt.grid);
  fig2->add_option("--tail-epsilon", fig2_opt.tail_epsilon,
                   "Discarded Fock tail mass");
  fig2->add_option("--out", fig2_opt.out, "Output CSV path");
  fig2->add_option("--plot-script", fig2_opt.script, "Output gnuplot path");

  SweepRequest sweep_request;
  std::vector<double> sweep_priors;
  std::string sweep_methods = "helstrom-closed";
  std::string sweep_out = "sweep.csv";
  std::string sweep_script;
  CLI::App* sweep = app.add_subcommand("sweep", "Fully parameterized sweep");
  sweep->add_option("--beta-min", sweep_request.grid.beta_min, "Lowest beta")
      ->required();
  sweep->add_option("--beta-max", sweep_request.grid.beta_max, "Highest beta")
      ->required();
  sweep->add_option("--points", sweep_request.grid.points,
                    "Number of log-spaced grid points");
  sweep->add_option("--levels", sweep_request.levels,
                    "System dimension N+1 (>= 2)");
  sweep->add_option("--methods", sweep_methods,
                    "Comma-separated: helstrom-closed, helstrom-numeric, "
                    "bayes-exact, holevo-bound, low-temp-approx");
  sweep->add_option("--priors", sweep_priors,
                    "Prior probabilities, one per level (default uniform)")
      ->delimiter(',');
  sweep->add_option("--tail-epsilon", sweep_request.tail_epsilon,
                    "Discarded Fock tail mass");
  sweep->add_option("--out", sweep_out, "Output CSV path");
  sweep->add_option("--plot-script", sweep_script,
                    "Optional gnuplot output path");

  GridSpec validity_grid{0.1, 10.0, 25};
  int validity_levels = 2;
  double validity_tail = 1e-12;
  std::string validity_out;
  CLI::App* validity = app.add_subcommand(
      "validity",
      "Gap between the entropic bound and the exact Bayes optimum");
  add_grid_flags(validity, validity_grid);
  validity->add_option("--levels", validity_levels, "System dimension N+1");
  validity->add_option("--tail-epsilon", validity_tail,
                       "Discarded Fock tail mass");
  validity->add_option("--out", validity_out, "Optional CSV output path");

  double threshold_target = 0.8;
  CLI::App* threshold = app.add_subcommand(
      "threshold", "Inverse temperature needed for a target two-level P_c");
  threshold->add_option("--target", threshold_target,
                        "Target success probability in (0.5, 1)");

  double convert_omega = 0.0;
  double convert_temperature = 0.0;
  CLI::App* convert = app.add_subcommand(
      "convert", "Convert oscillator frequency and temperature to beta");
  convert->add_option("--omega", convert_omega, "Frequency in rad/s")
      ->required();
  convert->add_option("--temperature", convert_temperature, "Temperature in K")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (fig1->parsed()) return run_fig1(fig1_opt);
    if (fig2->parsed()) return run_fig2(fig2_opt);

    if (sweep->parsed()) {
      sweep_request.methods = parse_method_list(sweep_methods);
      if (!sweep_priors.empty()) sweep_request.priors = to_priors(sweep_priors);
      std::vector<std::string> warnings;
      const SweepResult result = run_sweep(sweep_request, &warnings);
      print_warnings(warnings);
      return emit_sweep_outputs(result, sweep_out, sweep_script);
    }

    if (validity->parsed()) {
      std::vector<std::string> warnings;
      const ValidityReport report =
          validity_report(validity_grid, validity_levels, validity_tail,
                          &warnings);
      print_warnings(warnings);
      std::cout << "log10_beta beta bound exact delta\n";
      for (const ValidityRow& row : report.rows)
        std::cout << format_real(row.log10_beta) << ' ' << format_real(row.beta)
                  << ' ' << format_real(row.bound) << ' '
                  << format_real(row.exact) << ' ' << format_real(row.delta)
                  << '\n';
      std::cout << "minimum delta = " << format_real(report.min_delta)
                << " at beta = " << format_real(report.argmin_beta)
                << " (log10 beta = "
                << format_real(std::log10(report.argmin_beta)) << ")\n";
      if (!validity_out.empty()) {
        write_file(validity_out, to_csv(report));
        std::cout << "wrote " << validity_out << "\n";
      }
      return 0;
    }

    if (threshold->parsed()) {
      const double beta_star = threshold_beta(threshold_target);
      std::cout << "target_pc = " << format_real(threshold_target) << "\n";
      std::cout << "beta_star = " << format_real(beta_star) << "\n";
      return 0;
    }

    if (convert->parsed()) {
      std::cout << "beta = "
                << format_real(convert_units(convert_omega, convert_temperature))
                << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

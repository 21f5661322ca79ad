#include "mixmeas/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "mixmeas/discrimination.hpp"

namespace mixmeas {

namespace {

constexpr std::string_view kMethodNames[] = {
    "helstrom-closed", "helstrom-numeric", "bayes-exact",
    "holevo-bound",    "low-temp-approx",
};

constexpr std::string_view kCsvHeader = "log10_beta,beta,levels,method,p_c";

bool is_uniform(const Eigen::VectorXd& priors, int levels) {
  if (priors.size() == 0) return true;
  return (priors.array() - 1.0 / levels).abs().maxCoeff() < 1e-15;
}

ModelConfig model_config(const SweepRequest& request, double beta) {
  ModelConfig config;
  config.beta = beta;
  config.levels = request.levels;
  config.priors = request.priors;
  config.tail_epsilon = request.tail_epsilon;
  return config;
}

double evaluate_method(Method method, double beta, const SweepRequest& request) {
  switch (method) {
    case Method::kHelstromClosed:
      return two_level_pc_closed_form(beta);
    case Method::kHelstromNumeric: {
      const DiagonalEnsemble ensemble = build_ensemble(model_config(request, beta));
      const auto& m = ensemble.members();
      return helstrom(m[0].second, m[1].second, m[0].first);
    }
    case Method::kBayesExact:
      return bayes_optimal_commuting(build_ensemble(model_config(request, beta)));
    case Method::kHolevoBound:
      if (is_uniform(request.priors, request.levels))
        return success_probability_bound_closed_form(beta, request.levels,
                                                     request.tail_epsilon);
      return success_probability_bound(build_ensemble(model_config(request, beta)));
    case Method::kLowTempApprox:
      return low_temperature_approximation(beta);
  }
  throw std::logic_error("evaluate_method: unknown method");
}

void validate_grid(const GridSpec& grid) {
  if (!(grid.beta_min > 0.0))
    throw std::invalid_argument("sweep: beta_min must be positive");
  if (!(grid.beta_min < grid.beta_max))
    throw std::invalid_argument("sweep: beta_min must be below beta_max");
  if (grid.points < 2)
    throw std::invalid_argument("sweep: at least two grid points required");
}

void validate_request(const SweepRequest& request) {
  validate_grid(request.grid);
  if (request.levels < 2)
    throw std::invalid_argument("sweep: levels must be >= 2");
  if (request.methods.empty())
    throw std::invalid_argument("sweep: no methods requested");
  if (request.priors.size() != 0) {
    if (request.priors.size() != request.levels)
      throw std::invalid_argument("sweep: priors length must equal levels");
    double total = 0.0;
    for (Eigen::Index i = 0; i < request.priors.size(); ++i) {
      if (!(request.priors(i) >= 0.0))
        throw std::invalid_argument("sweep: negative prior");
      total += request.priors(i);
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw std::invalid_argument("sweep: priors must sum to 1");
  }
  for (Method method : request.methods) {
    const bool two_state = method == Method::kHelstromClosed ||
                           method == Method::kHelstromNumeric;
    if (two_state && request.levels != 2)
      throw std::invalid_argument("sweep: " + std::string(to_string(method)) +
                                  " requires levels = 2");
    if (method == Method::kHelstromClosed &&
        !is_uniform(request.priors, request.levels))
      throw std::invalid_argument(
          "sweep: helstrom-closed is defined for uniform priors only");
  }
}

void warn(std::vector<std::string>* warnings, double beta, Method method,
          const std::string& why) {
  if (warnings == nullptr) return;
  warnings->push_back("beta=" + format_real(beta) + " " +
                      std::string(to_string(method)) + ": " + why);
}

}  // namespace

double convert_units(double omega, double temperature) {
  if (!(omega > 0.0))
    throw std::invalid_argument("convert_units: omega must be positive");
  if (!(temperature > 0.0))
    throw std::invalid_argument("convert_units: temperature must be positive");
  return kHBar * omega / (kBoltzmann * temperature);
}

std::string_view to_string(Method method) {
  return kMethodNames[static_cast<int>(method)];
}

Method method_from_string(std::string_view name) {
  for (int k = 0; k < 5; ++k)
    if (name == kMethodNames[k]) return static_cast<Method>(k);
  throw std::invalid_argument("unknown method: " + std::string(name));
}

std::vector<Method> parse_method_list(std::string_view names) {
  std::vector<Method> out;
  std::size_t start = 0;
  while (start <= names.size()) {
    const std::size_t comma = names.find(',', start);
    const std::string_view token =
        names.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                            : comma - start);
    if (!token.empty()) out.push_back(method_from_string(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty method list");
  return out;
}

std::vector<double> log10_grid(const GridSpec& grid) {
  validate_grid(grid);
  const double lo = std::log10(grid.beta_min);
  const double hi = std::log10(grid.beta_max);
  std::vector<double> out(static_cast<std::size_t>(grid.points));
  for (int i = 0; i < grid.points; ++i)
    out[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / (grid.points - 1);
  out.front() = lo;
  out.back() = hi;
  return out;
}

void sort_rows(SweepResult& result) {
  std::sort(result.rows.begin(), result.rows.end(),
            [](const SweepRow& a, const SweepRow& b) {
              return std::tuple(a.levels, static_cast<int>(a.method), a.beta) <
                     std::tuple(b.levels, static_cast<int>(b.method), b.beta);
            });
}

SweepResult run_sweep(const SweepRequest& request,
                      std::vector<std::string>* warnings) {
  validate_request(request);
  SweepResult result;
  for (double l : log10_grid(request.grid)) {
    const double beta = std::pow(10.0, l);
    for (Method method : request.methods) {
      try {
        const double value = evaluate_method(method, beta, request);
        result.rows.push_back({l, beta, request.levels, method, value});
      } catch (const std::exception& e) {
        warn(warnings, beta, method, e.what());
      }
    }
  }
  sort_rows(result);
  return result;
}

ValidityReport validity_report(const GridSpec& grid, int levels,
                               double tail_epsilon,
                               std::vector<std::string>* warnings) {
  validate_grid(grid);
  if (levels < 2)
    throw std::invalid_argument("validity_report: levels must be >= 2");

  ValidityReport report;
  report.levels = levels;
  for (double l : log10_grid(grid)) {
    const double beta = std::pow(10.0, l);
    const double bound =
        success_probability_bound_closed_form(beta, levels, tail_epsilon);
    std::optional<double> exact;
    try {
      ModelConfig config;
      config.beta = beta;
      config.levels = levels;
      config.tail_epsilon = tail_epsilon;
      exact = bayes_optimal_commuting(build_ensemble(config));
    } catch (const std::exception& e) {
      if (levels == 2) {
        exact = two_level_pc_closed_form(beta);
      } else {
        warn(warnings, beta, Method::kBayesExact, e.what());
      }
    }
    if (!exact) continue;
    report.rows.push_back({l, beta, bound, *exact, bound - *exact});
  }
  if (report.rows.empty())
    throw std::runtime_error("validity_report: no grid point could be evaluated");

  const auto min_row = std::min_element(
      report.rows.begin(), report.rows.end(),
      [](const ValidityRow& a, const ValidityRow& b) { return a.delta < b.delta; });
  report.min_delta = min_row->delta;
  report.argmin_beta = min_row->beta;
  return report;
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string to_csv(const SweepResult& result) {
  std::string out{kCsvHeader};
  out += '\n';
  for (const SweepRow& row : result.rows) {
    out += format_real(row.log10_beta);
    out += ',';
    out += format_real(row.beta);
    out += ',';
    out += std::to_string(row.levels);
    out += ',';
    out += to_string(row.method);
    out += ',';
    out += format_real(row.p_c);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& field) {
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size() || field.empty())
    throw std::invalid_argument("parse_csv: bad numeric field '" + field + "'");
  return value;
}

}  // namespace

SweepResult parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::invalid_argument("parse_csv: missing or unexpected header");
  SweepResult result;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line, ',');
    if (fields.size() != 5)
      throw std::invalid_argument("parse_csv: expected 5 fields per row");
    SweepRow row;
    row.log10_beta = parse_double(fields[0]);
    row.beta = parse_double(fields[1]);
    row.levels = static_cast<int>(parse_double(fields[2]));
    row.method = method_from_string(fields[3]);
    row.p_c = parse_double(fields[4]);
    result.rows.push_back(row);
  }
  return result;
}

std::string to_csv(const ValidityReport& report) {
  std::string out = "log10_beta,beta,levels,bound,exact,delta\n";
  for (const ValidityRow& row : report.rows) {
    out += format_real(row.log10_beta);
    out += ',';
    out += format_real(row.beta);
    out += ',';
    out += std::to_string(report.levels);
    out += ',';
    out += format_real(row.bound);
    out += ',';
    out += format_real(row.exact);
    out += ',';
    out += format_real(row.delta);
    out += '\n';
  }
  return out;
}

std::string gnuplot_script(const SweepResult& result,
                           const std::string& csv_path,
                           const std::string& image_path) {
  std::vector<std::pair<int, Method>> series;
  for (const SweepRow& row : result.rows) {
    const std::pair<int, Method> key{row.levels, row.method};
    if (series.empty() || series.back() != key) {
      if (std::find(series.begin(), series.end(), key) == series.end())
        series.push_back(key);
    }
  }

  bool multiple_levels = false;
  for (const auto& s : series)
    if (s.first != series.front().first) multiple_levels = true;

  std::string out;
  out += "# gnuplot script; render with: gnuplot <this file>\n";
  out += "set terminal pngcairo size 900,600\n";
  out += "set output \"" + image_path + "\"\n";
  out += "set datafile separator \",\"\n";
  out += "set xlabel \"log10(beta)\"\n";
  out += "set ylabel \"P_c\"\n";
  out += "set yrange [0:1.05]\n";
  out += "set key bottom right\n";
  out += "plot \\\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& [levels, method] = series[k];
    std::string title{to_string(method)};
    if (multiple_levels) title += " levels=" + std::to_string(levels);
    out += "  \"" + csv_path + "\" skip 1 using (strcol(4) eq \"" +
           std::string(to_string(method)) + "\" && $3 == " +
           std::to_string(levels) + " ? $1 : NaN):5 with lines title \"" +
           title + "\"";
    out += (k + 1 < series.size()) ? ", \\\n" : "\n";
  }
  return out;
}

}  // namespace mixmeas

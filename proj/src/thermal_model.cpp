#include "mixmeas/thermal_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixmeas {

namespace {

void check_beta(const char* who, double beta) {
  if (!(beta > 0.0))
    throw std::invalid_argument(std::string(who) + ": beta must be positive");
}

}  // namespace

DiagonalEnsemble build_ensemble(const ModelConfig& config) {
  check_beta("build_ensemble", config.beta);
  if (config.levels < 2)
    throw std::invalid_argument("build_ensemble: levels must be >= 2");
  if (config.beta < kMinNumericBeta)
    throw std::domain_error(
        "build_ensemble: beta below the numeric range; use the closed forms");

  Eigen::VectorXd priors = config.priors;
  if (priors.size() == 0)
    priors = Eigen::VectorXd::Constant(config.levels, 1.0 / config.levels);
  if (priors.size() != config.levels)
    throw std::invalid_argument("build_ensemble: priors length must equal levels");

  const DiagonalState base = thermal_state(config.thermal_spec());
  std::vector<DiagonalEnsemble::Member> members;
  members.reserve(static_cast<std::size_t>(config.levels));
  for (int i = 0; i < config.levels; ++i)
    members.emplace_back(priors(i), shift(base, i));
  return DiagonalEnsemble(std::move(members));
}

double two_level_pc_closed_form(double beta) {
  check_beta("two_level_pc_closed_form", beta);
  return 1.0 - 0.5 * std::exp(-beta);
}

double threshold_beta(double target_pc) {
  if (!(target_pc > 0.5) || !(target_pc < 1.0))
    throw std::invalid_argument(
        "threshold_beta: target outside the achievable range (1/2, 1)");
  double lo = 0.0;
  double hi = 1.0;
  while (two_level_pc_closed_form(hi) < target_pc) hi *= 2.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (two_level_pc_closed_form(mid) < target_pc)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double member_entropy_closed_form(double beta) {
  check_beta("member_entropy_closed_form", beta);
  const double q = std::exp(-beta);
  const double one_minus_q = -std::expm1(-beta);  // 1 - e^-beta, stable
  return beta * q / one_minus_q - std::log(one_minus_q);
}

double mixture_entropy_closed_form(double beta, int levels,
                                   double tail_epsilon) {
  check_beta("mixture_entropy_closed_form", beta);
  if (levels < 2)
    throw std::invalid_argument("mixture_entropy_closed_form: levels must be >= 2");
  if (!(tail_epsilon > 0.0) || !(tail_epsilon < 1.0))
    throw std::invalid_argument(
        "mixture_entropy_closed_form: tail_epsilon must be in (0,1)");

  const double q = std::exp(-beta);
  const double one_minus_q = -std::expm1(-beta);
  const int top = levels - 1;  // N

  // Mixture population at level n <= N is (1 - q^{n+1}) / (N+1); the
  // ramp-up terms of the double sum.
  double entropy = 0.0;
  double partial = 0.0;  // sum_{j<=n} q^j
  double qn = 1.0;
  for (int n = 0; n <= top; ++n) {
    partial += qn;
    qn *= q;
    const double a = partial * one_minus_q / levels;
    if (a > 0.0) entropy -= a * std::log(a);
  }

  // Above level N the populations decay geometrically: a_m = c q^m with
  // m = n - N >= 1. Truncate once the mass not yet summed, c q^m/(1-q),
  // drops below tail_epsilon.
  const double c = partial * one_minus_q / levels;
  if (static_cast<double>(kDefaultMaxLevels) * beta <
      std::log(1.0 / tail_epsilon))
    throw std::domain_error(
        "mixture_entropy_closed_form: truncation would exceed max levels");
  double a = c * q;
  long guard = 0;
  while (a > 0.0 && a / one_minus_q >= tail_epsilon) {
    entropy -= a * std::log(a);
    a *= q;
    if (++guard > kDefaultMaxLevels + levels)
      throw std::runtime_error("mixture_entropy_closed_form: tail did not converge");
  }
  return entropy;
}

double low_temperature_approximation(double beta) {
  check_beta("low_temperature_approximation", beta);
  return std::exp(-member_entropy_closed_form(beta));
}

double success_probability_bound_closed_form(double beta, int levels,
                                             double tail_epsilon) {
  const double holevo = mixture_entropy_closed_form(beta, levels, tail_epsilon) -
                        member_entropy_closed_form(beta);
  const double bound = std::exp(holevo - std::log(static_cast<double>(levels)));
  return std::clamp(bound, 0.0, 1.0);
}

}  // namespace mixmeas

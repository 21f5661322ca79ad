#include "mixmeas/discrimination.hpp"

#include <cmath>
#include <stdexcept>

namespace mixmeas {

namespace {

void check_prior(double p0) {
  if (!(p0 >= 0.0 && p0 <= 1.0))
    throw std::invalid_argument("helstrom: p0 must lie in [0, 1]");
}

double abs_sum(const Eigen::VectorXd& v) {
  double s = 0.0;
  for (Eigen::Index n = 0; n < v.size(); ++n) s += std::abs(v(n));
  return s;
}

}  // namespace

double trace_norm_distance(const DiagonalState& rho0,
                           const DiagonalState& rho1) {
  const Eigen::Index common = std::max(rho0.size(), rho1.size());
  return abs_sum(rho0.padded_to(common).probs() -
                 rho1.padded_to(common).probs());
}

double trace_norm_distance(const HermitianState& rho0,
                           const HermitianState& rho1) {
  if (rho0.dim() != rho1.dim())
    throw std::invalid_argument("trace_norm_distance: mismatched dimensions");
  return abs_sum(spectrum(rho0.matrix() - rho1.matrix()));
}

double helstrom(const DiagonalState& rho0, const DiagonalState& rho1,
                double p0) {
  check_prior(p0);
  const Eigen::Index common = std::max(rho0.size(), rho1.size());
  const Eigen::VectorXd diff = p0 * rho0.padded_to(common).probs() -
                               (1.0 - p0) * rho1.padded_to(common).probs();
  return 0.5 + 0.5 * abs_sum(diff);
}

double helstrom(const HermitianState& rho0, const HermitianState& rho1,
                double p0) {
  check_prior(p0);
  if (rho0.dim() != rho1.dim())
    throw std::invalid_argument("helstrom: mismatched dimensions");
  const Eigen::MatrixXcd diff =
      p0 * rho0.matrix() - (1.0 - p0) * rho1.matrix();
  return 0.5 + 0.5 * abs_sum(spectrum(diff));
}

double bayes_optimal_commuting(const DiagonalEnsemble& ensemble) {
  const Eigen::Index levels = ensemble.members().front().second.size();
  double total = 0.0;
  for (Eigen::Index n = 0; n < levels; ++n) {
    double best = 0.0;
    for (const auto& [prior, state] : ensemble.members())
      best = std::max(best, prior * state(n));
    total += best;
  }
  return total;
}

double optimal_success_probability(const DiagonalEnsemble& ensemble) {
  return bayes_optimal_commuting(ensemble);
}

double optimal_success_probability(const HermitianEnsemble& ensemble) {
  if (ensemble.size() == 1) return 1.0;
  if (ensemble.size() > 2)
    throw std::logic_error(
        "optimal_success_probability: not implemented for three or more "
        "noncommuting states");
  const auto& m = ensemble.members();
  return helstrom(m[0].second, m[1].second, m[0].first);
}

}  // namespace mixmeas

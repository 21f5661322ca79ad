#include "mixmeas/infotheory.hpp"

#include <algorithm>
#include <cmath>

namespace mixmeas {

namespace {

constexpr double kEigenvalueFloor = -1e-10;

// Entropy of a spectrum, clamping the tolerated negative round-off.
double entropy_of_spectrum(const Eigen::VectorXd& eigs) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < eigs.size(); ++k) {
    double x = eigs(k);
    if (x < 0.0) {
      if (x < kEigenvalueFloor)
        throw std::invalid_argument(
            "von_neumann_entropy: eigenvalue below tolerance");
      x = 0.0;
    }
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

template <class EnsembleT>
double holevo_impl(const EnsembleT& ensemble) {
  double member_term = 0.0;
  for (const auto& [prior, state] : ensemble.members())
    member_term += prior * von_neumann_entropy(state);
  const double mixture_term = von_neumann_entropy(average_state(ensemble));
  return std::max(mixture_term - member_term, 0.0);
}

template <class EnsembleT>
double bound_impl(const EnsembleT& ensemble) {
  const double h = entropy_kernel(ensemble.priors());
  const double H = holevo_quantity(ensemble);
  return std::clamp(std::exp(H - h), 0.0, 1.0);
}

}  // namespace

double shannon_entropy(const Eigen::Ref<const Eigen::VectorXd>& p) {
  for (Eigen::Index n = 0; n < p.size(); ++n) {
    if (!(p(n) >= 0.0))
      throw std::invalid_argument("shannon_entropy: negative entry");
  }
  if (std::abs(sequential_sum(p) - 1.0) > 1e-9)
    throw std::invalid_argument("shannon_entropy: vector must sum to 1");
  return entropy_kernel(p);
}

double von_neumann_entropy(const DiagonalState& state) {
  return entropy_kernel(state.probs());
}

double von_neumann_entropy(const HermitianState& state) {
  return entropy_of_spectrum(spectrum(state.matrix()));
}

DiagonalState average_state(const DiagonalEnsemble& ensemble) {
  Eigen::VectorXd avg =
      Eigen::VectorXd::Zero(ensemble.members().front().second.size());
  for (const auto& [prior, state] : ensemble.members())
    avg += prior * state.probs();
  return DiagonalState(std::move(avg));
}

HermitianState average_state(const HermitianEnsemble& ensemble) {
  Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(
      ensemble.members().front().second.dim(),
      ensemble.members().front().second.dim());
  for (const auto& [prior, state] : ensemble.members())
    avg += prior * state.matrix();
  return HermitianState(std::move(avg));
}

double holevo_quantity(const DiagonalEnsemble& ensemble) {
  return holevo_impl(ensemble);
}

double holevo_quantity(const HermitianEnsemble& ensemble) {
  return holevo_impl(ensemble);
}

double success_probability_bound(const DiagonalEnsemble& ensemble) {
  return bound_impl(ensemble);
}

double success_probability_bound(const HermitianEnsemble& ensemble) {
  return bound_impl(ensemble);
}

}  // namespace mixmeas

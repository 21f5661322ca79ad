#pragma once

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mixmeas/statespace.hpp"

namespace mixmeas {

// -sum p ln p with the 0 ln 0 = 0 convention. No validation; callers are
// responsible for feeding a nonnegative vector. Accepts any dense Eigen
// expression.
template <class Derived>
double entropy_kernel(const Eigen::DenseBase<Derived>& p) {
  double s = 0.0;
  for (Eigen::Index n = 0; n < p.size(); ++n) {
    const double x = p(n);
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

// Shannon entropy in nats of a probability vector. Rejects negative
// entries and vectors whose sum strays from 1 by more than 1e-9.
double shannon_entropy(const Eigen::Ref<const Eigen::VectorXd>& p);

// Mixed-state ensemble {p_i, rho_i}. The state kind is a template
// parameter, so an ensemble can never mix diagonal and dense members.
// Diagonal members are zero-padded to a common length on construction;
// dense members must share their dimension.
template <class StateT>
class Ensemble {
 public:
  using Member = std::pair<double, StateT>;

  explicit Ensemble(std::vector<Member> members)
      : members_(std::move(members)) {
    if (members_.empty())
      throw std::invalid_argument("Ensemble: at least one member required");
    double total = 0.0;
    for (const auto& [prior, state] : members_) {
      if (!(prior >= 0.0))
        throw std::invalid_argument("Ensemble: negative prior");
      total += prior;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw std::invalid_argument("Ensemble: priors must sum to 1");

    if constexpr (std::is_same_v<StateT, DiagonalState>) {
      Eigen::Index common = 0;
      for (const auto& m : members_) common = std::max(common, m.second.size());
      for (auto& m : members_) m.second = m.second.padded_to(common);
    } else {
      for (const auto& m : members_) {
        if (m.second.dim() != members_.front().second.dim())
          throw std::invalid_argument("Ensemble: mismatched dimensions");
      }
    }
  }

  const std::vector<Member>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  Eigen::VectorXd priors() const {
    Eigen::VectorXd p(static_cast<Eigen::Index>(members_.size()));
    for (std::size_t i = 0; i < members_.size(); ++i)
      p(static_cast<Eigen::Index>(i)) = members_[i].first;
    return p;
  }

 private:
  std::vector<Member> members_;
};

using DiagonalEnsemble = Ensemble<DiagonalState>;
using HermitianEnsemble = Ensemble<HermitianState>;

// Von Neumann entropy S(rho) = -Tr rho ln rho in nats. For diagonal states
// this is the Shannon entropy of the level populations; for dense states,
// of the spectrum. Eigenvalues in [-1e-10, 0) are clamped to zero; more
// negative ones are an error.
double von_neumann_entropy(const DiagonalState& state);
double von_neumann_entropy(const HermitianState& state);

// Prior-weighted average state of an ensemble.
DiagonalState average_state(const DiagonalEnsemble& ensemble);
HermitianState average_state(const HermitianEnsemble& ensemble);

// Holevo quantity H = S(sum_i p_i rho_i) - sum_i p_i S(rho_i), in nats.
// Nonnegative by concavity; tiny negative round-off is clamped to 0.
double holevo_quantity(const DiagonalEnsemble& ensemble);
double holevo_quantity(const HermitianEnsemble& ensemble);

// Success-probability bound e^{H - h(p_0..p_N)} for identifying which
// ensemble member was prepared, clamped to [0, 1].
double success_probability_bound(const DiagonalEnsemble& ensemble);
double success_probability_bound(const HermitianEnsemble& ensemble);

}  // namespace mixmeas

#pragma once

#include <Eigen/Dense>

namespace mixmeas {

// Everything is dimensionless: hbar = omega = k_B = 1, so the inverse
// temperature beta = hbar*omega/(k_B T) is the only temperature parameter.

// Dense Hermitian problems are kept small; the spectral routines refuse
// anything larger.
inline constexpr Eigen::Index kMaxDim = 64;

// Default ceiling on the Fock truncation level. Requests that would need
// more levels are refused so callers fall back to closed forms.
inline constexpr long kDefaultMaxLevels = 1'000'000;

// Probability vector over Fock levels n = 0..n_max. Represents a density
// operator diagonal in the number basis. Entries are >= 0 and sum to 1
// within 1e-12 (thermal states are renormalized after truncation).
class DiagonalState {
 public:
  explicit DiagonalState(Eigen::VectorXd probs);

  const Eigen::VectorXd& probs() const { return probs_; }
  double operator()(Eigen::Index n) const { return probs_(n); }
  Eigen::Index size() const { return probs_.size(); }
  Eigen::Index n_max() const { return probs_.size() - 1; }

  // Zero-pad to `size` levels; the total probability is untouched.
  DiagonalState padded_to(Eigen::Index size) const;

 private:
  Eigen::VectorXd probs_;
};

// Dense d x d complex Hermitian density matrix, d <= kMaxDim.
// Validated on construction: Hermitian within 1e-12, unit trace within
// 1e-10, eigenvalues >= -1e-10.
class HermitianState {
 public:
  explicit HermitianState(Eigen::MatrixXcd matrix);

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  Eigen::MatrixXcd matrix_;
};

// Thermal-state request: occupation weights e^{-beta n}/Z truncated so the
// discarded tail mass e^{-beta (n_max+1)} stays below tail_epsilon.
struct ThermalSpec {
  double beta = 0.0;
  double tail_epsilon = 1e-12;
  int min_levels = 16;
  long max_levels = kDefaultMaxLevels;
};

// Truncation level implied by a spec, before building the state.
// Throws std::domain_error if it would exceed spec.max_levels.
long thermal_truncation_level(const ThermalSpec& spec);

// Truncated, renormalized Gibbs state with weights proportional to
// e^{-beta n}.
DiagonalState thermal_state(const ThermalSpec& spec);

// The shift-type measurement interaction on the apparatus marginal:
// probability at level n moves to level n+i. Output has i leading zeros
// and the same total probability, exactly.
DiagonalState shift(const DiagonalState& state, int i);

struct SpectralDecomposition {
  Eigen::VectorXd values;    // descending
  Eigen::MatrixXcd vectors;  // column k pairs with values(k)
};

// Eigendecomposition of a small Hermitian matrix. Rejects matrices whose
// asymmetry max|M - M^dagger| exceeds 1e-8, and dimensions above kMaxDim.
SpectralDecomposition spectral_decomposition(const Eigen::MatrixXcd& m);

// Eigenvalues in descending order.
Eigen::VectorXd spectrum(const Eigen::MatrixXcd& m);
Eigen::VectorXd spectrum(const HermitianState& state);

// Sequential left-to-right sum. Used wherever "exact" probability
// bookkeeping matters (padding and shifting must not perturb totals).
double sequential_sum(const Eigen::Ref<const Eigen::VectorXd>& v);

}  // namespace mixmeas

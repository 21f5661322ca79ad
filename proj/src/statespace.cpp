#include "mixmeas/statespace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mixmeas {

namespace {

constexpr double kSumTolerance = 1e-12;
constexpr double kHermTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-10;
constexpr double kEigenvalueFloor = -1e-10;
constexpr double kAsymmetryTolerance = 1e-8;

}  // namespace

double sequential_sum(const Eigen::Ref<const Eigen::VectorXd>& v) {
  double total = 0.0;
  for (Eigen::Index n = 0; n < v.size(); ++n) total += v(n);
  return total;
}

DiagonalState::DiagonalState(Eigen::VectorXd probs) : probs_(std::move(probs)) {
  if (probs_.size() == 0)
    throw std::invalid_argument("DiagonalState: empty probability vector");
  for (Eigen::Index n = 0; n < probs_.size(); ++n) {
    if (!(probs_(n) >= 0.0))
      throw std::invalid_argument("DiagonalState: negative probability entry");
  }
  if (std::abs(sequential_sum(probs_) - 1.0) > kSumTolerance)
    throw std::invalid_argument("DiagonalState: probabilities must sum to 1");
}

DiagonalState DiagonalState::padded_to(Eigen::Index size) const {
  if (size < probs_.size())
    throw std::invalid_argument("DiagonalState::padded_to: cannot truncate");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(size);
  out.head(probs_.size()) = probs_;
  return DiagonalState(std::move(out));
}

HermitianState::HermitianState(Eigen::MatrixXcd matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("HermitianState: matrix must be square");
  if (matrix_.rows() < 1 || matrix_.rows() > kMaxDim)
    throw std::invalid_argument("HermitianState: dimension out of range");
  const double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermTolerance)
    throw std::invalid_argument("HermitianState: matrix is not Hermitian");
  const std::complex<double> tr = matrix_.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTolerance ||
      std::abs(tr.imag()) > kTraceTolerance)
    throw std::invalid_argument("HermitianState: trace must equal 1");
  const Eigen::VectorXd eigs = spectrum(matrix_);
  if (eigs(eigs.size() - 1) < kEigenvalueFloor)
    throw std::invalid_argument("HermitianState: negative eigenvalue");
}

long thermal_truncation_level(const ThermalSpec& spec) {
  if (!(spec.beta > 0.0))
    throw std::invalid_argument("thermal_state: beta must be positive");
  if (!(spec.tail_epsilon > 0.0) || !(spec.tail_epsilon < 1.0))
    throw std::invalid_argument("thermal_state: tail_epsilon must be in (0,1)");
  if (spec.min_levels < 0 || spec.min_levels > spec.max_levels)
    throw std::invalid_argument("thermal_state: bad level bounds");
  // For the normalized geometric distribution the mass above n_max is
  // exactly e^{-beta (n_max+1)}, so the smallest admissible level is
  // floor(ln(1/eps)/beta). Compare before narrowing: tiny beta pushes the
  // level far past what a long can hold.
  const double tail_level =
      std::floor(std::log(1.0 / spec.tail_epsilon) / spec.beta);
  if (tail_level > static_cast<double>(spec.max_levels))
    throw std::domain_error(
        "thermal_state: truncation would exceed max_levels; "
        "use the closed forms at this temperature");
  return std::max<long>(static_cast<long>(tail_level), spec.min_levels);
}

DiagonalState thermal_state(const ThermalSpec& spec) {
  const long n_max = thermal_truncation_level(spec);
  Eigen::VectorXd p(n_max + 1);
  for (long n = 0; n <= n_max; ++n) p(n) = std::exp(-spec.beta * n);
  p /= sequential_sum(p);
  return DiagonalState(std::move(p));
}

DiagonalState shift(const DiagonalState& state, int i) {
  if (i < 0) throw std::invalid_argument("shift: level offset must be >= 0");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(state.size() + i);
  out.tail(state.size()) = state.probs();
  return DiagonalState(std::move(out));
}

SpectralDecomposition spectral_decomposition(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("spectrum: matrix must be square");
  if (m.rows() < 1 || m.rows() > kMaxDim)
    throw std::invalid_argument("spectrum: dimension out of range");
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kAsymmetryTolerance)
    throw std::invalid_argument("spectrum: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      ((m + m.adjoint()) * 0.5).eval());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectrum: eigensolver did not converge");
  SpectralDecomposition out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

Eigen::VectorXd spectrum(const Eigen::MatrixXcd& m) {
  return spectral_decomposition(m).values;
}

Eigen::VectorXd spectrum(const HermitianState& state) {
  return spectrum(state.matrix());
}

}  // namespace mixmeas

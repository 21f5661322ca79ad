#include "mixmeas/discrimination.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

using namespace mixmeas;

namespace {

DiagonalState diag2(double a, double b) {
  Eigen::VectorXd p(2);
  p << a, b;
  return DiagonalState(p);
}

DiagonalState basis_state(Eigen::Index level, Eigen::Index size) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(size);
  p(level) = 1.0;
  return DiagonalState(p);
}

HermitianState pure_state(const Eigen::Vector2cd& psi) {
  return HermitianState((psi * psi.adjoint()).eval());
}

// (1, 0) and (c, sqrt(1-c^2)): real overlap c.
std::pair<HermitianState, HermitianState> overlapping_pair(double c) {
  Eigen::Vector2cd psi0(1.0, 0.0);
  Eigen::Vector2cd psi1(c, std::sqrt(1.0 - c * c));
  return {pure_state(psi0), pure_state(psi1)};
}

DiagonalState random_diagonal(std::mt19937& rng, Eigen::Index size) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::VectorXd p(size);
  for (Eigen::Index n = 0; n < size; ++n) p(n) = u(rng);
  p /= sequential_sum(p);
  return DiagonalState(p);
}

}  // namespace

TEST_CASE("trace_norm_distance of identical and orthogonal states") {
  const DiagonalState a = diag2(0.5, 0.5);
  CHECK(trace_norm_distance(a, a) == 0.0);
  CHECK(trace_norm_distance(basis_state(0, 2), basis_state(1, 2)) == 2.0);

  const auto [h0, h1] = overlapping_pair(0.0);
  CHECK(trace_norm_distance(h0, h0) == 0.0);
  CHECK(trace_norm_distance(h0, h1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("trace_norm_distance of the thermal pair matches the braces form") {
  // 1/Z + (e^beta - 1)(Z - 1)/Z with Z = 1/(1 - e^-beta), evaluated
  // literally as the reference.
  for (double beta : {0.3, 1.0, 2.5}) {
    const double Z = 1.0 / (1.0 - std::exp(-beta));
    const double expected = 1.0 / Z + (std::exp(beta) - 1.0) * (Z - 1.0) / Z;
    const DiagonalState base = thermal_state({.beta = beta});
    CHECK(trace_norm_distance(base, shift(base, 1)) ==
          doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("trace_norm_distance handles padding and rejects dim mismatch") {
  // Shorter diagonal states are zero-padded, so unequal lengths compare.
  CHECK(trace_norm_distance(basis_state(0, 2), basis_state(3, 4)) == 2.0);

  const HermitianState q2{0.5 * Eigen::MatrixXcd::Identity(2, 2)};
  const HermitianState q3{Eigen::MatrixXcd::Identity(3, 3) / 3.0};
  CHECK_THROWS_AS(trace_norm_distance(q2, q3), std::invalid_argument);
}

TEST_CASE("helstrom separates orthogonal pure states perfectly") {
  CHECK(helstrom(basis_state(0, 2), basis_state(1, 2), 0.5) == 1.0);
  const auto [h0, h1] = overlapping_pair(0.0);
  CHECK(helstrom(h0, h1, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("helstrom on overlapping pure states via the spectral path") {
  for (double c : {0.0, 0.25, 0.5, 0.9, 1.0}) {
    const auto [h0, h1] = overlapping_pair(c);
    const double expected = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
    CHECK(std::abs(helstrom(h0, h1, 0.5) - expected) < 1e-10);
  }
}

TEST_CASE("helstrom on the thermal pair at beta = 1") {
  const DiagonalState base = thermal_state({.beta = 1.0});
  CHECK(helstrom(base, shift(base, 1), 0.5) ==
        doctest::Approx(0.8160602794142788).epsilon(1e-9));
}

TEST_CASE("helstrom of a state against itself is the best blind guess") {
  const DiagonalState state = diag2(0.5, 0.5);
  CHECK(helstrom(state, state, 0.3) == 0.7);
  CHECK(helstrom(state, state, 0.5) == 0.5);
  CHECK(helstrom(state, state, 0.9) == doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("helstrom validates the prior") {
  const DiagonalState state = diag2(0.5, 0.5);
  CHECK_THROWS_AS(helstrom(state, state, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(helstrom(state, state, 1.1), std::invalid_argument);
}

TEST_CASE("bayes_optimal_commuting pointwise maximum") {
  const DiagonalEnsemble pair{
      {{0.5, diag2(0.7, 0.3)}, {0.5, diag2(0.4, 0.6)}}};
  CHECK(bayes_optimal_commuting(pair) == doctest::Approx(0.65).epsilon(1e-15));
}

TEST_CASE("bayes_optimal_commuting is perfect on disjoint point masses") {
  std::vector<DiagonalEnsemble::Member> members;
  for (int i = 0; i < 5; ++i) members.push_back({0.2, basis_state(i, 5)});
  CHECK(bayes_optimal_commuting(DiagonalEnsemble{std::move(members)}) ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("bayes_optimal_commuting agrees with helstrom on the thermal pair") {
  const DiagonalState base = thermal_state({.beta = 1.0});
  const DiagonalEnsemble pair{{{0.5, base}, {0.5, shift(base, 1)}}};
  CHECK(bayes_optimal_commuting(pair) ==
        doctest::Approx(0.8160602794142788).epsilon(1e-9));
}

TEST_CASE("helstrom equals the Bayes rule on random diagonal pairs") {
  std::mt19937 rng(20240812);
  std::uniform_int_distribution<Eigen::Index> dims(2, 32);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index dim = dims(rng);
    const DiagonalState rho0 = random_diagonal(rng, dim);
    const DiagonalState rho1 = random_diagonal(rng, dim);
    const double p0 = u(rng);
    const DiagonalEnsemble pair{{{p0, rho0}, {1.0 - p0, rho1}}};
    const double hel = helstrom(rho0, rho1, p0);
    const double bayes = bayes_optimal_commuting(pair);
    worst = std::max(worst, std::abs(hel - bayes));
    // Guessing the likelier hypothesis is always available.
    CHECK(hel >= std::max(p0, 1.0 - p0) - 1e-12);
    CHECK(bayes <= 1.0 + 1e-12);
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("trace_norm_distance satisfies the triangle inequality") {
  std::mt19937 rng(31415);
  std::uniform_int_distribution<Eigen::Index> dims(2, 16);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index dim = dims(rng);
    const DiagonalState a = random_diagonal(rng, dim);
    const DiagonalState b = random_diagonal(rng, dim);
    const DiagonalState c = random_diagonal(rng, dim);
    CHECK(trace_norm_distance(a, c) <=
          trace_norm_distance(a, b) + trace_norm_distance(b, c) + 1e-10);
  }
}

TEST_CASE("bayes success never drops when a member moves out of overlap") {
  const DiagonalState base = thermal_state({.beta = 0.8});
  double previous = 0.0;
  for (int offset = 0; offset < 6; ++offset) {
    const DiagonalEnsemble pair{{{0.5, base}, {0.5, shift(base, offset)}}};
    const double value = bayes_optimal_commuting(pair);
    CHECK(value >= previous - 1e-12);
    previous = value;
  }
}

TEST_CASE("optimal_success_probability dispatches by ensemble kind") {
  const DiagonalState base = thermal_state({.beta = 1.0});
  const DiagonalEnsemble diag{{{0.5, base}, {0.5, shift(base, 1)}}};
  CHECK(optimal_success_probability(diag) == bayes_optimal_commuting(diag));

  const auto [h0, h1] = overlapping_pair(0.5);
  const HermitianEnsemble two{{{0.5, h0}, {0.5, h1}}};
  CHECK(optimal_success_probability(two) == helstrom(h0, h1, 0.5));

  const auto [g0, g1] = overlapping_pair(0.25);
  const HermitianEnsemble three{
      {{0.4, g0}, {0.3, g1}, {0.3, pure_state({0.0, 1.0})}}};
  CHECK_THROWS_WITH_AS(optimal_success_probability(three),
                       doctest::Contains("not implemented"), std::logic_error);
}

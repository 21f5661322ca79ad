#pragma once

#include <Eigen/Dense>

#include "mixmeas/infotheory.hpp"
#include "mixmeas/statespace.hpp"

namespace mixmeas {

// Below this beta the Fock truncation grows past what the numeric paths
// are willing to handle (levels scale like ln(1/eps)/beta); callers get
// the closed forms instead.
inline constexpr double kMinNumericBeta = 0.01;

// An (N+1)-level system read out by a harmonic-oscillator apparatus that
// starts in a thermal state: system state |i> shifts the apparatus up by
// i levels.
struct ModelConfig {
  double beta = 0.0;
  int levels = 2;                 // N + 1
  Eigen::VectorXd priors{};       // empty means uniform
  double tail_epsilon = 1e-12;
  int min_levels = 16;
  long max_levels = kDefaultMaxLevels;

  ThermalSpec thermal_spec() const {
    return ThermalSpec{beta, tail_epsilon, min_levels, max_levels};
  }
};

// Post-measurement apparatus ensemble: member i is the initial thermal
// state shifted up by i levels, all members padded to a common length.
// Refuses beta below kMinNumericBeta.
DiagonalEnsemble build_ensemble(const ModelConfig& config);

// Two-level success probability
//   P_c = 1/2 + 1/4 { 1/Z + (e^beta - 1)(Z - 1)/Z },  Z = 1/(1 - e^-beta),
// evaluated in the algebraically equal and numerically stable form
// 1 - e^-beta / 2. Monotone increasing, 1/2 at beta -> 0, 1 at
// beta -> infinity.
double two_level_pc_closed_form(double beta);

// Inverse of two_level_pc_closed_form by bisection to |dbeta| < 1e-9.
// Valid targets lie strictly between 1/2 and 1.
double threshold_beta(double target_pc);

// Entropy of each post-measurement apparatus state (shift-invariant):
//   S = beta <n> + ln Z,  <n> = e^-beta / (1 - e^-beta).
double member_entropy_closed_form(double beta);

// Entropy of the uniform mixture of the N+1 shifted thermal states, by
// direct summation over the mixture's level populations. The geometric
// tail is truncated by the same policy as thermal_state.
double mixture_entropy_closed_form(double beta, int levels,
                                   double tail_epsilon = 1e-12);

// Low-temperature approximation to the success bound: e^{-S(member)}.
// Intended for beta > 1, where it lands within a few percent.
double low_temperature_approximation(double beta);

// e^{H - ln(N+1)} for the uniform model ensemble, computed entirely from
// the closed-form entropies. Works at any beta > 0, including the region
// where the numeric ensemble is refused.
double success_probability_bound_closed_form(double beta, int levels,
                                             double tail_epsilon = 1e-12);

}  // namespace mixmeas

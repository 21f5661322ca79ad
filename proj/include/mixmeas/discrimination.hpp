#pragma once

#include "mixmeas/infotheory.hpp"
#include "mixmeas/statespace.hpp"

namespace mixmeas {

// Tr|rho0 - rho1|, in [0, 2]. Diagonal inputs are zero-padded to a common
// length; dense inputs must share their dimension.
double trace_norm_distance(const DiagonalState& rho0, const DiagonalState& rho1);
double trace_norm_distance(const HermitianState& rho0, const HermitianState& rho1);

// Optimal two-state discrimination success probability
//   P_c = 1/2 + 1/2 Tr|p0 rho0 - (1-p0) rho1|,
// which at p0 = 1/2 reduces to 1/2 + 1/4 Tr|rho0 - rho1|.
double helstrom(const DiagonalState& rho0, const DiagonalState& rho1, double p0);
double helstrom(const HermitianState& rho0, const HermitianState& rho1, double p0);

// Exact optimum for commuting (diagonal) ensembles: the Bayes rule
//   P_c = sum_n max_i p_i rho_i(n).
double bayes_optimal_commuting(const DiagonalEnsemble& ensemble);

// Exact optimal success probability where one is known: the Bayes rule for
// any diagonal ensemble, Helstrom for two dense states. Three or more
// noncommuting states would need a POVM optimizer and are rejected.
double optimal_success_probability(const DiagonalEnsemble& ensemble);
double optimal_success_probability(const HermitianEnsemble& ensemble);

}  // namespace mixmeas

#pragma once

#include <vector>

#include "rumor/chain.hpp"
#include "rumor/distribution.hpp"
#include "rumor/rational.hpp"
#include "rumor/scaled_real.hpp"

namespace rumor {

struct QsdResult {
  Distribution dist;               // normalized
  std::vector<ScaledReal> weight;  // unnormalized masses; weight[0] = 1 at the start state
  ScaledReal normalizer;           // C_N = sum of weights
  double lambda = 0.0;             // lambda_0, exit rate of the start state
};

struct Normalized {
  std::vector<double> prob;
  ScaledReal normalizer;
};

// Probabilities summing to 1 plus the normalizing constant.
// Throws std::invalid_argument when every weight is zero.
Normalized normalize(const std::vector<ScaledReal>& weights);

// Non-trivial QSD as the left eigenvector nu*Q = -lambda*nu, solved by
// back-substitution in topological order:
//   nu(s0) = 1,   nu(v) = sum_{u->v} nu(u) q(u,v) / (lambda_v - lambda_0).
// Requires lambda_v > lambda_0 for every v != s0 (otherwise the QSD is trivial
// or the chain sits on the SIR boundary case); throws std::domain_error.
QsdResult qsd_dp(const ChainSpec& spec, const StateSpace& space);

// Same back-substitution in exact rational arithmetic (MT/DK only: their rates
// are integers). Returns the unnormalized weights.
std::vector<Rational> qsd_dp_rational(const ChainSpec& spec, const StateSpace& space);

// Literal path-sum for one target:
//   sum over paths of [lambda_0/(lambda_L - lambda_0)] prod_j rho_j/(lambda_j - lambda_0),
// with the (N,1) and (N-1,2) branches returned directly. Exponential in n;
// refuses n > n_guard.
ScaledReal qsd_path_enum(const ChainSpec& spec, const StateSpace& space, State target,
                         int n_guard = 12);

// Path-sum route over every transient state, normalized.
QsdResult qsd_path_enum_all(const ChainSpec& spec, const StateSpace& space,
                            int n_guard = 12);

}  // namespace rumor

#pragma once

#include <cstdint>
#include <vector>

#include "rumor/chain.hpp"
#include "rumor/distribution.hpp"
#include "rumor/scaled_real.hpp"

namespace rumor {

// One realization of the jump chain: state[i] is entered at time[i], the last
// state is absorbing. time[0] = 0 at the initial state.
struct Trajectory {
  std::vector<double> time;
  std::vector<State> state;
};

// Law of X_t conditioned on survival, P_init(X_t = . | tau > t), by
// uniformization at rate Lambda = max total rate with sub-steps of length
// <= 1/Lambda, Poisson series truncated at tail mass 1e-13, and
// renormalization after every sub-step.
Distribution conditioned_distribution(const ChainSpec& spec, const StateSpace& space,
                                      const std::vector<double>& init, double t);

// P_init(tau > t), accumulated in the log domain so that survival at large t
// does not underflow.
ScaledReal survival_probability(const ChainSpec& spec, const StateSpace& space,
                                const std::vector<double>& init, double t);

// Gillespie simulation; deterministic replay for a fixed seed.
Trajectory simulate(const ChainSpec& spec, State init, std::uint64_t seed);

struct McQsdEstimate {
  Distribution dist;
  std::vector<double> std_error;  // per state
  double acceptance_rate = 0.0;
  std::int64_t survivors = 0;
};

// Rejection-sampled law of X_t among trajectories from (N,1) surviving past t.
// Replications use independent substreams derived from (seed, replication).
// Throws std::runtime_error when no trajectory survives.
McQsdEstimate estimate_qsd_mc(const ChainSpec& spec, const StateSpace& space, double t,
                              std::int64_t reps, std::uint64_t seed);

struct McSojournEstimate {
  std::vector<double> mean;       // time spent per state
  std::vector<double> std_error;
  double total_mean = 0.0;
  double total_std_error = 0.0;
};

McSojournEstimate estimate_sojourn_mc(const ChainSpec& spec, const StateSpace& space,
                                      State init, std::int64_t reps,
                                      std::uint64_t seed);

// Sum of independent exponentials with rates rate[0..n], rate[0] strictly
// minimal. The density satisfies f(t) ~ pi_n e^{-rate[0] t} with
// pi_n = rate[0] prod_{j>=1} rate[j]/(rate[j] - rate[0]).
struct HypoexpSpec {
  std::vector<double> rate;
};

struct HypoexpCheck {
  double exact = 0.0;      // density at t: partial fractions, or adaptive-Simpson
                           // convolution when rates repeat
  double asymptote = 0.0;  // pi_n e^{-rate[0] t}
  double ratio = 0.0;      // exact / asymptote, -> 1 as t grows
};

HypoexpCheck hypoexp_check(const HypoexpSpec& spec, double t);

}  // namespace rumor

#pragma once

#include <vector>

#include "rumor/chain.hpp"
#include "rumor/distribution.hpp"
#include "rumor/rational.hpp"

namespace rumor {

// First-step quantities for the absorbing chain started at one state:
// reach(v) = P(ever visit v), sojourn(v) = E[time in v] = reach(v)/lambda_v
// (each state is visited at most once), total = E[absorption time].
template <class Real>
struct SojournTableT {
  std::vector<Real> reach;
  std::vector<Real> sojourn;
  Real total{};
  int init_index = 0;
};

using SojournTable = SojournTableT<double>;
using RationalSojournTable = SojournTableT<Rational>;

SojournTable sojourn_table(const ChainSpec& spec, const StateSpace& space, State init);

// Exact arithmetic (MT/DK only; rates are integers).
RationalSojournTable sojourn_table_rational(const ChainSpec& spec,
                                            const StateSpace& space, State init);

// Ratio-of-expectations distribution r_j = sojourn(j) / total.
Distribution re_distribution(const SojournTable& table);
std::vector<Rational> re_distribution_rational(const RationalSojournTable& table);

// Mixture form over several initial states:
// r_j = sum_i mix_i sojourn_i(j) / sum_i mix_i total_i.
Distribution re_distribution_mixture(const std::vector<SojournTable>& tables,
                                     const std::vector<double>& mix);

// Asymptotic mean absorption time (2.68 ln(N+1) + 1.38)/N.
double svensson_mean_time(int n);

}  // namespace rumor

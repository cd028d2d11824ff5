#pragma once

#include <vector>

namespace rumor {

enum class Method { dp, path_enum, monte_carlo, uniformization, sojourn_ratio };

// Probability vector aligned with StateSpace::transient(), tagged with the
// producing method and the decay parameter of the underlying chain.
struct Distribution {
  std::vector<double> prob;
  double lambda = 0.0;
  Method method = Method::dp;
};

double tv_distance(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace rumor

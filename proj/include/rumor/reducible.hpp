#pragma once

#include <stdexcept>
#include <vector>

#include "rumor/chain.hpp"

namespace rumor {

class classification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Class structure of the reducible chain. Strictly evolutionary chains have
// singleton communicating classes, so classes are identified with transient
// state indices; the topological order of StateSpace is an accessibility
// order (S_i accessible from S_j implies pos(i) >= pos(j)).
struct ClassStructure {
  std::vector<double> class_rate;  // lambda_k: total exit rate of class k
  double lambda = 0.0;             // min_k lambda_k, the decay parameter
  std::vector<int> maximal;        // I(lambda), in topological order
  int last_maximal = -1;           // a(lambda): maximal class accessible from all others
  bool linearly_ordered = true;    // recorded check: {S_k, k in I(lambda)} is a chain
};

// Throws classification_error when |I(lambda)| > 1 and the maximal classes are
// not linearly ordered (geometric multiplicity may then exceed one).
ClassStructure class_structure(const ChainSpec& spec, const StateSpace& space);

// Outcome of conditioning on survival, for the chain restricted to the states
// reachable from the support of the initial distribution (the Yaglom limit of
// the conditioned process):
//   trivial_point_mass: the limit is a point mass at `state`
//   non_trivial:        positive mass on every reachable state; `state` is the
//                       minimal-rate start state
//   not_accessible:     the minimal class reaches only part of the reachable
//                       set; the classification does not apply
struct QsdClassification {
  enum class Kind { trivial_point_mass, non_trivial, not_accessible };
  Kind kind = Kind::not_accessible;
  State state{};
  // Set when several classes attain the minimal rate on the reachable part
  // (e.g. the SIR boundary mu = beta*N, where the eigenvalue is degenerate).
  bool degenerate_tie = false;
};

QsdClassification classify_qsd(const ClassStructure& structure, const ChainSpec& spec,
                               const StateSpace& space,
                               const std::vector<double>& initial);

}  // namespace rumor

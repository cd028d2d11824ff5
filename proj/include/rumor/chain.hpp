#pragma once

#include <utility>
#include <vector>

#include "rumor/state.hpp"

namespace rumor {

// Model, population parameter and absorption mode. Transition rates follow the
// classical tables:
//
//   MT:  (-1,+1) at X*Y         (0,-1) at Y*(N-X)
//   DK:  (-1,+1) at X*Y         (0,-1) at Y*(N+1-X-Y)   (0,-2) at Y*(Y-1)/2
//   SIR: (-1,+1) at beta*S*I    (0,-1) at mu*I
//
// n is the usual N: population size N+1 with one initial spreader at (N, 1).
// The mode does not change the rates, only which states count as transient:
// standard mode absorbs at y = 0, modified mode additionally absorbs at
// (x, 1) for x < N, i.e. the process is killed on returning to level y = 1.
struct ChainSpec {
  Model model = Model::mt;
  int n = 2;
  AbsorptionMode mode = AbsorptionMode::standard;
  double beta = 0.0;  // SIR only
  double mu = 0.0;    // SIR only
};

ChainSpec build_chain(Model model, int n, AbsorptionMode mode, double beta = 0.0,
                      double mu = 0.0);

// Outgoing transitions per the rate table (zero rates omitted). Absorption is
// not applied here: a move into an absorbing state is still emitted.
TransitionSet transitions(const ChainSpec& spec, State s);

// Sum of outgoing rates. MT: N*y; DK: y*(2N+1-y)/2; SIR: y*(beta*x + mu).
// Throws std::domain_error on absorbing states.
double total_rate(const ChainSpec& spec, State s);

bool in_state_space(const ChainSpec& spec, State s);  // member of S'
bool is_transient(const ChainSpec& spec, State s);
bool is_absorbing(const ChainSpec& spec, State s);

// Transient states in topological order (decreasing Phi = 2x + y, larger x
// first on ties) with O(1) index lookup. Every transition goes from an earlier
// to a later position.
class StateSpace {
 public:
  explicit StateSpace(const ChainSpec& spec);

  const ChainSpec& spec() const { return spec_; }
  const std::vector<State>& transient() const { return transient_; }
  int size() const { return static_cast<int>(transient_.size()); }
  State state(int i) const { return transient_[i]; }

  // -1 when s is not transient.
  int index_of(State s) const;
  bool absorbing(State s) const;

 private:
  ChainSpec spec_;
  std::vector<State> transient_;
  std::vector<int> index_;  // flat (n+1) x (n+2) lookup
};

StateSpace build_state_space(const ChainSpec& spec);

// Sparse view of the generator restricted to the transient set.
struct TransitionTable {
  std::vector<double> exit_rate;                         // lambda_v
  std::vector<std::vector<std::pair<int, double>>> out;  // transient -> transient edges
  std::vector<std::vector<std::pair<int, double>>> in;   // reversed
  double max_rate = 0.0;
  double min_rate = 0.0;
};

TransitionTable build_transition_table(const ChainSpec& spec, const StateSpace& space);

}  // namespace rumor

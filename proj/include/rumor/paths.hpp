#pragma once

#include <set>
#include <vector>

#include "rumor/chain.hpp"
#include "rumor/rational.hpp"

namespace rumor {

// Lattice path from (N,1) to a target, steps in the model's step set.
struct Path {
  std::vector<State> vertices;
};

// Ballot-problem count of MT paths (N,1) -> (x,y) inside the modified
// transient set: (y-1)/L * C(L, N-x) with L = 2N - 2x - y + 1.
BigInt count_paths_mt(int n, int x, int y);

// Exhaustive DFS with fixed step order (-1,+1), (0,-1), (0,-2); output is
// duplicate-free and lexicographic in the step sequence. Refuses n > n_guard.
std::vector<Path> enumerate_paths(const ChainSpec& spec, const StateSpace& space,
                                  State target, int n_guard = 12);

// Admissible DK path lengths to (x,y). Boundary targets y = N+1-x have the
// single length y-1; targets with exactly one stifler (z = 1) are unreachable
// and get the empty set.
std::set<int> dk_path_lengths(int n, int x, int y);

}  // namespace rumor

#include "rumor/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rumor {

ChainSpec build_chain(Model model, int n, AbsorptionMode mode, double beta, double mu) {
  if (n < 2) throw std::invalid_argument("build_chain: n must be >= 2");
  if (model == Model::sir) {
    if (!(beta > 0.0) || !(mu > 0.0) || !std::isfinite(beta) || !std::isfinite(mu))
      throw std::invalid_argument("build_chain: SIR requires beta > 0 and mu > 0");
  } else if (beta != 0.0 || mu != 0.0) {
    throw std::invalid_argument("build_chain: beta/mu are SIR parameters");
  }
  return ChainSpec{model, n, mode, beta, mu};
}

bool in_state_space(const ChainSpec& spec, State s) {
  return s.x >= 0 && s.x <= spec.n && s.y >= 0 && s.y <= spec.n + 1 - s.x;
}

bool is_transient(const ChainSpec& spec, State s) {
  if (!in_state_space(spec, s) || s.y < 1) return false;
  if (spec.mode == AbsorptionMode::standard) return true;
  return s.y >= 2 || (s.x == spec.n && s.y == 1);
}

bool is_absorbing(const ChainSpec& spec, State s) {
  return in_state_space(spec, s) && !is_transient(spec, s);
}

TransitionSet transitions(const ChainSpec& spec, State s) {
  if (!in_state_space(spec, s))
    throw std::domain_error("transitions: state outside S'");
  double up = 0.0, down1 = 0.0, down2 = 0.0;
  switch (spec.model) {
    case Model::mt:
      up = static_cast<double>(s.x) * s.y;
      down1 = static_cast<double>(s.y) * (spec.n - s.x);
      break;
    case Model::dk:
      up = static_cast<double>(s.x) * s.y;
      down1 = static_cast<double>(s.y) * (spec.n + 1 - s.x - s.y);
      down2 = 0.5 * s.y * (s.y - 1);  // C(y,2); y(y-1) is even, so exact
      break;
    case Model::sir:
      up = spec.beta * s.x * s.y;
      down1 = spec.mu * s.y;
      break;
  }
  TransitionSet out;
  if (up > 0.0) out.push({{s.x - 1, s.y + 1}, up});
  if (down1 > 0.0) out.push({{s.x, s.y - 1}, down1});
  if (down2 > 0.0) out.push({{s.x, s.y - 2}, down2});
  return out;
}

double total_rate(const ChainSpec& spec, State s) {
  if (!is_transient(spec, s))
    throw std::domain_error("total_rate: state is absorbing or outside S'");
  switch (spec.model) {
    case Model::mt:
      return static_cast<double>(spec.n) * s.y;
    case Model::dk:
      return 0.5 * s.y * (2 * spec.n + 1 - s.y);  // y(2N+1)/2 - y^2/2
    case Model::sir:
      return s.y * (spec.beta * s.x + spec.mu);
  }
  return 0.0;
}

StateSpace::StateSpace(const ChainSpec& spec) : spec_(spec) {
  const int n = spec.n;
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n + 1 - x; ++y)
      if (is_transient(spec, {x, y})) transient_.push_back({x, y});
  std::sort(transient_.begin(), transient_.end(), [](State a, State b) {
    if (potential(a) != potential(b)) return potential(a) > potential(b);
    return a.x > b.x;
  });
  index_.assign(static_cast<std::size_t>(n + 1) * (n + 2), -1);
  for (int i = 0; i < size(); ++i) {
    const State s = transient_[i];
    index_[static_cast<std::size_t>(s.x) * (n + 2) + s.y] = i;
  }
}

int StateSpace::index_of(State s) const {
  if (!in_state_space(spec_, s)) return -1;
  return index_[static_cast<std::size_t>(s.x) * (spec_.n + 2) + s.y];
}

bool StateSpace::absorbing(State s) const { return is_absorbing(spec_, s); }

StateSpace build_state_space(const ChainSpec& spec) { return StateSpace(spec); }

TransitionTable build_transition_table(const ChainSpec& spec, const StateSpace& space) {
  const int m = space.size();
  TransitionTable tbl;
  tbl.exit_rate.resize(m);
  tbl.out.resize(m);
  tbl.in.resize(m);
  tbl.max_rate = 0.0;
  tbl.min_rate = std::numeric_limits<double>::infinity();
  for (int u = 0; u < m; ++u) {
    const State s = space.state(u);
    tbl.exit_rate[u] = total_rate(spec, s);
    tbl.max_rate = std::max(tbl.max_rate, tbl.exit_rate[u]);
    tbl.min_rate = std::min(tbl.min_rate, tbl.exit_rate[u]);
    for (const Transition& tr : transitions(spec, s)) {
      const int v = space.index_of(tr.to);
      if (v >= 0) {
        tbl.out[u].push_back({v, tr.rate});
        tbl.in[v].push_back({u, tr.rate});
      }
    }
  }
  return tbl;
}

}  // namespace rumor

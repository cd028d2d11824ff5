#pragma once

#include <array>
#include <compare>

namespace rumor {

// Population state: x ignorants (susceptibles), y spreaders (infectives).
// Stiflers/removed are implicit: z = N + 1 - x - y.
struct State {
  int x = 0;
  int y = 0;

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;
};

// Phi = 2x + y strictly decreases along every transition, which is what makes
// these chains strictly evolutionary (no revisits) and the generator triangular.
inline int potential(State s) { return 2 * s.x + s.y; }

enum class Model { mt, dk, sir };
enum class AbsorptionMode { standard, modified };

struct Transition {
  State to;
  double rate = 0.0;
};

// Outgoing transitions of one state. At most 3 (DK); zero-rate moves are never emitted.
class TransitionSet {
 public:
  void push(Transition t) { v_[n_++] = t; }
  int size() const { return n_; }
  const Transition& operator[](int i) const { return v_[i]; }
  const Transition* begin() const { return v_.data(); }
  const Transition* end() const { return v_.data() + n_; }

 private:
  std::array<Transition, 3> v_{};
  int n_ = 0;
};

}  // namespace rumor

#pragma once

#include <vector>

#include "cdk/pseudo.hpp"

namespace cdk {

// Bounded prefix of the history forest of a pseudo-model: all walks from
// the root whose steps follow stored group relations.
struct History {
  std::vector<std::size_t> states;  // s0, s1, ..., sn
  std::vector<Group> labels;        // B1, ..., Bn
};

struct Forest {
  std::vector<History> histories;  // histories[0] is the root
  std::vector<std::size_t> last;   // last state per history

  struct Edge {
    std::size_t from, to;
    Group label;
  };
  // h →_B h': h' extends h by one B-step.
  std::vector<Edge> one_step;
  // h ∼̃→_B h': some one-step h →_{B'} h' with B'⪯B true at last(h).
  std::vector<Edge> tilde;
};

Forest unravel(const PseudoModel& pm, std::size_t root, std::size_t depth);

}  // namespace cdk

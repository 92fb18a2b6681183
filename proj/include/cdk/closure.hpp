#pragma once

#include <vector>

#include "cdk/formula.hpp"

namespace cdk {

// Finite closure of a static formula: subformulas, every comparative over
// the universe, D-prefixed unfoldings of every non-singleton Cd member,
// and single negations. The unfolding wrappers D_C(Cd_B ψ) carry singleton
// families, so one pass reaches the fixpoint; iterating D over D is
// deliberately not generated.
class FLClosure {
 public:
  FLClosure(const Formula& seed, Group universe, std::size_t cap = 4096);

  const Formula& seed() const { return seed_; }  // desugared
  const Group& universe() const { return universe_; }

  // All members (negations included), ordered by size then rendering.
  const std::vector<Formula>& members() const { return members_; }

  // Decision bits of an atom: atomic propositions, comparatives and Cd
  // formulas occurring in the closure, in assignment order (props, then
  // comparatives, then Cd by ascending size).
  const std::vector<Formula>& generators() const { return generators_; }

 private:
  Formula seed_;
  Group universe_;
  std::vector<Formula> members_;
  std::vector<Formula> generators_;
};

}  // namespace cdk

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cdk/eliminate.hpp"
#include "cdk/event_model.hpp"
#include "cdk/formula.hpp"
#include "cdk/pseudo.hpp"

namespace cdk {

struct DecisionLimits {
  std::size_t max_closure = 4096;
  std::size_t max_atoms = 200000;
  bool parallel = true;
};

struct SatResult {
  bool satisfiable = false;
  std::shared_ptr<PseudoModel> witness;  // verified before being returned
  std::string state;                     // designated witness state
};

// Satisfiability of f (after reduction to the static fragment) over the
// given agents, by atom enumeration and type elimination. Every Sat
// verdict is re-verified mechanically: the witness must pass
// validate_pseudo and check_pseudo; a failure aborts with an internal
// error instead of returning a wrong answer.
SatResult sat(const Formula& f, const Group& agents = Group{},
              const EventRegistry& registry = {}, const DecisionLimits& limits = {});

// valid(φ) iff sat(¬φ) is Unsat.
bool valid(const Formula& f, const Group& agents = Group{}, const EventRegistry& registry = {},
           const DecisionLimits& limits = {});

// Concrete instances of the axiom schemas over the given agents, with
// pseudo-random filler formulas. `schemas` selects by name ("s5",
// "comparative", "common", "cd", "reduction", "composition"; empty list =
// all); `budget` caps the number of instances.
std::vector<Formula> instantiate_axioms(const Group& agents,
                                        const std::vector<std::string>& schemas = {},
                                        std::size_t budget = 256, uint64_t seed = 1);

}  // namespace cdk

#pragma once

#include <cstdint>
#include <vector>

#include "cdk/bits.hpp"
#include "cdk/closure.hpp"

namespace cdk {

// A locally consistent candidate state: one decision per closure
// generator; every other member's truth follows by evaluation. Local
// consistency covers the comparative axioms (inclusion, additivity,
// transitivity), the Cd fixed-point unfolding, and knowledge transfer.
struct HAtom {
  Bits bits;  // over FLClosure::generators()
};

class AtomUniverse {
 public:
  AtomUniverse(const FLClosure& closure, std::size_t max_atoms = 200000);

  const FLClosure& closure() const { return closure_; }
  const std::vector<HAtom>& atoms() const { return atoms_; }

  // Truth of an arbitrary closure member in an atom.
  bool holds(const HAtom& atom, const Formula& member) const;
  bool holds(std::size_t atom_index, const Formula& member) const;

  // Generator index of a formula, or -1.
  int generator_index(const Formula& f) const;

 private:
  void enumerate(std::size_t max_atoms);
  bool eval(const Bits& bits, const Formula& f) const;

  const FLClosure& closure_;
  std::vector<HAtom> atoms_;

  struct HornRule {
    // premises (generator indices) all true forces the conclusion true.
    std::vector<int> premises;
    int conclusion;
  };
  std::vector<int> forced_true_;           // inclusion comparatives
  std::vector<HornRule> rules_;            // additivity, transitivity, transfer, unfolding
  std::vector<std::pair<int, Formula>> veracity_;  // Cd generator -> its body
};

}  // namespace cdk

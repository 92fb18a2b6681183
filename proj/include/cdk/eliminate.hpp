#pragma once

#include <map>
#include <vector>

#include "cdk/atoms.hpp"
#include "cdk/group.hpp"

namespace cdk {

// Per-group equivalences between atoms and the type-elimination loop.
//
// Two atoms are ∼_B-related when their B-profiles coincide: the
// comparatives and D-formulas owned by any group that B dominates in the
// atom. Dominated groups carry their comparative pattern along, which is
// exactly what makes comparative truth constant on ∼_B-classes in the
// resulting structure.
class AtomGraph {
 public:
  explicit AtomGraph(const AtomUniverse& universe);

  const AtomUniverse& universe() const { return universe_; }
  const std::vector<Group>& groups() const { return groups_; }

  // Class id of an atom under ∼_B (intrinsic, not survivor-relative).
  int cls(const Group& B, std::size_t atom) const;

  // Deletes atoms whose ¬Cd demands cannot be met by atoms reachable
  // through surviving ⋃_B∼_B chains; repeats until stable. The parallel
  // kernel checks demands across atoms concurrently within a round;
  // deletions apply between rounds, so results match the serial path.
  Bits eliminate(bool parallel = true);

  // Straight-line reference: per-demand breadth-first search, no
  // component bookkeeping. Kept for differential testing.
  Bits eliminate_serial_reference() const;

  std::size_t rounds() const { return rounds_; }

 private:
  const AtomUniverse& universe_;
  std::vector<Group> groups_;
  std::map<Group, std::size_t> group_index_;
  // classes_[g][atom] = class id under group g
  std::vector<std::vector<int>> classes_;

  struct Demand {
    std::size_t generator;       // Cd generator index
    std::vector<std::size_t> group_ids;  // family members
    Bits body_false;             // atoms where the body fails
  };
  std::vector<Demand> demands_;
  std::size_t rounds_ = 0;
};

}  // namespace cdk

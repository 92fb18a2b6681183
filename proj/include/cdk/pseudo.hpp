#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdk/bits.hpp"
#include "cdk/group.hpp"
#include "cdk/model.hpp"
#include "cdk/partition.hpp"

namespace cdk {

// Relational structure where each group's knowledge relation is primitive
// and comparatives are valuated atoms. Only the groups needed by the
// formulas under analysis are stored; querying a missing group is an
// error rather than a silent default.
class PseudoModel {
 public:
  PseudoModel(Group universe, std::vector<std::string> states, std::map<Group, Partition> grel,
              std::map<std::string, Bits> atom_val,
              std::map<std::pair<Group, Group>, Bits> comp_val);

  const Group& universe() const { return universe_; }
  std::size_t num_states() const { return states_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& state_name(std::size_t i) const { return states_[i]; }
  std::size_t state_index(const std::string& id) const;

  bool has_group(const Group& B) const { return grel_.count(B) > 0; }
  const Partition& group_rel(const Group& B) const;  // throws UnknownGroup
  Partition family_rel(const GroupFamily& fam) const;
  const std::map<Group, Partition>& grel() const { return grel_; }

  bool atom_true(std::size_t state, const std::string& prop) const;
  Bits atom_extension(const std::string& prop) const;
  const std::map<std::string, Bits>& atom_val() const { return atom_val_; }

  bool comp_true(std::size_t state, const Group& B, const Group& C) const;  // throws if missing
  const std::map<std::pair<Group, Group>, Bits>& comp_val() const { return comp_val_; }

  // Mutators used by tests that corrupt a witness on purpose.
  void set_comp(const Group& B, const Group& C, Bits ext);
  void set_group_rel(const Group& B, Partition p);

 private:
  Group universe_;
  std::vector<std::string> states_;
  std::map<std::string, std::size_t> state_index_;
  std::map<Group, Partition> grel_;
  std::map<std::string, Bits> atom_val_;
  std::map<std::pair<Group, Group>, Bits> comp_val_;
};

using PseudoPtr = std::shared_ptr<const PseudoModel>;

struct PseudoViolation {
  int condition;  // 1..5
  std::string message;
};

// Checks conditions 1-5 over the stored groups and comparatives; returns
// the first violation found, or nothing if the structure is a pseudo-model.
std::optional<PseudoViolation> validate_pseudo(const PseudoModel& pm);

// Derives the full pseudo-model of an epistemic model: grel for every
// nonempty subgroup, comparatives from class inclusion.
PseudoModel model_as_pseudo(const EpistemicModel& m);

// All nonempty subsets of the universe (by name order, subsets of
// increasing size). Guarded: throws ResourceError past `cap` groups.
std::vector<Group> all_nonempty_subgroups(const Group& universe, std::size_t cap = 4096);

PseudoPtr load_pseudo_json(const std::string& text);
PseudoPtr load_pseudo_file(const std::string& path);
std::string pseudo_to_json(const PseudoModel& pm, const std::string& designated_state = "");

}  // namespace cdk

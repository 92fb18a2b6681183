#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdk/bits.hpp"
#include "cdk/group.hpp"
#include "cdk/partition.hpp"

namespace cdk {

// Finite S5 epistemic model: one equivalence relation per agent over a
// shared state set, plus an atomic valuation. Immutable after
// construction; updates produce fresh models.
class EpistemicModel {
 public:
  EpistemicModel(Group universe, std::vector<std::string> states,
                 std::map<Sym, Partition> relations,
                 std::map<std::string, Bits> valuation);

  const Group& universe() const { return universe_; }
  std::size_t num_states() const { return states_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& state_name(std::size_t i) const { return states_[i]; }
  std::size_t state_index(const std::string& id) const;  // throws SemanticError
  bool has_state(const std::string& id) const;

  const Partition& relation(Sym agent) const;  // throws on unknown agent
  const std::map<std::string, Bits>& valuation() const { return valuation_; }
  bool atom_true(std::size_t state, const std::string& prop) const;
  Bits atom_extension(const std::string& prop) const;

  // ∼_B: meet of the member relations.
  Partition group_rel(const Group& B) const;
  // ∼^𝓑: join over the groups' meets (reflexive-transitive closure of the
  // union), computed by block merging.
  Partition family_rel(const GroupFamily& fam) const;

  // Identity token for memoization keys.
  uint64_t uid() const { return uid_; }

  // Set when this model is a product: product state i came from
  // (source state, event index).
  struct Provenance {
    std::vector<std::pair<std::size_t, std::size_t>> origin;
    std::map<std::string, std::size_t> event_index;
  };
  const std::optional<Provenance>& provenance() const { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

  friend bool operator==(const EpistemicModel& a, const EpistemicModel& b);

 private:
  Group universe_;
  std::vector<std::string> states_;
  std::map<std::string, std::size_t> state_index_;
  std::map<Sym, Partition> relations_;
  std::map<std::string, Bits> valuation_;
  std::optional<Provenance> provenance_;
  uint64_t uid_;
  mutable std::map<Group, Partition> group_rel_cache_;
};

using ModelPtr = std::shared_ptr<const EpistemicModel>;

// JSON document I/O (schema in the README). Throws SemanticError with a
// PartitionError-style message when a relation is not a partition.
ModelPtr load_model_json(const std::string& text);
ModelPtr load_model_file(const std::string& path);
std::string model_to_json(const EpistemicModel& m);

}  // namespace cdk

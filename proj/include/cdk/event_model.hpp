#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdk/group.hpp"
#include "cdk/partition.hpp"
#include "cdk/reading.hpp"

namespace cdk {

// Relational model over events; each event carries a reading map and
// agents cannot read different bases at events they cannot distinguish.
class ReadingEventModel {
 public:
  ReadingEventModel(Group universe, std::vector<std::string> events,
                    std::map<Sym, Partition> relations, std::vector<ReadingMap> reads);

  const Group& universe() const { return universe_; }
  std::size_t num_events() const { return events_.size(); }
  const std::vector<std::string>& events() const { return events_; }
  const std::string& event_name(std::size_t i) const { return events_[i]; }
  std::size_t event_index(const std::string& id) const;  // throws SemanticError
  bool has_event(const std::string& id) const;

  const Partition& relation(Sym agent) const;
  const ReadingMap& reads(std::size_t event) const { return reads_[event]; }

  // ∼_B over events: meet of the member relations.
  Partition group_rel(const Group& B) const;

  // Composition provenance, when this model is E1;E2.
  struct Provenance {
    std::vector<std::pair<std::size_t, std::size_t>> origin;
  };
  const std::optional<Provenance>& provenance() const { return provenance_; }

  friend ReadingEventModel compose_events(const ReadingEventModel& e1,
                                          const ReadingEventModel& e2);

 private:
  Group universe_;
  std::vector<std::string> events_;
  std::map<std::string, std::size_t> event_index_;
  std::map<Sym, Partition> relations_;
  std::vector<ReadingMap> reads_;
  std::optional<Provenance> provenance_;
};

using EventModelPtr = std::shared_ptr<const ReadingEventModel>;
using EventRegistry = std::map<std::string, EventModelPtr>;

// JSON loader. `reads` entries are deltas from identity; a listed group
// missing its reader is repaired with a warning, or rejected when strict.
EventModelPtr load_event_model_json(const std::string& text, bool strict = false,
                                    std::string* warnings = nullptr);
EventModelPtr load_event_model_file(const std::string& path, bool strict = false,
                                    std::string* warnings = nullptr);

}  // namespace cdk

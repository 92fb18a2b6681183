#include "cdk/event_model.hpp"

#include <fstream>
#include <sstream>

#include "cdk/errors.hpp"
#include "json.hpp"

namespace cdk {

ReadingEventModel::ReadingEventModel(Group universe, std::vector<std::string> events,
                                     std::map<Sym, Partition> relations,
                                     std::vector<ReadingMap> reads)
    : universe_(std::move(universe)),
      events_(std::move(events)),
      relations_(std::move(relations)),
      reads_(std::move(reads)) {
  if (universe_.empty()) throw SemanticError("event model needs at least one agent");
  if (events_.empty()) throw SemanticError("event model needs at least one event");
  if (reads_.size() != events_.size())
    throw SemanticError("event model needs one reading map per event");
  for (std::size_t i = 0; i < events_.size(); ++i)
    if (!event_index_.emplace(events_[i], i).second)
      throw SemanticError("duplicate event id: " + events_[i]);
  for (Sym a : universe_) {
    auto it = relations_.find(a);
    if (it == relations_.end())
      throw SemanticError("missing event relation for agent " + name_of(a));
    if (it->second.size() != events_.size())
      throw SemanticError("event relation for agent " + name_of(a) +
                          " does not cover all events");
  }
  for (std::size_t e = 0; e < events_.size(); ++e) {
    if (!reads_[e].mentioned().empty() && !reads_[e].mentioned().subset_of(universe_))
      throw SemanticError("reading map of event " + events_[e] +
                          " mentions agents outside the universe");
    for (Sym a : universe_)
      if (!reads_[e].read(a).contains(a))
        throw SemanticError("event " + events_[e] + ": agent " + name_of(a) +
                            " must read its own base");
  }
  // Agents know what they read: indistinguishable events carry the same
  // reading assignment for that agent.
  for (Sym a : universe_) {
    const Partition& rel = relations_.at(a);
    for (std::size_t e = 0; e < events_.size(); ++e)
      for (std::size_t f = e + 1; f < events_.size(); ++f)
        if (rel.same(e, f) && reads_[e].read(a) != reads_[f].read(a))
          throw SemanticError("agent " + name_of(a) + " cannot distinguish events " + events_[e] +
                              " and " + events_[f] + " but reads different bases there");
  }
}

std::size_t ReadingEventModel::event_index(const std::string& id) const {
  auto it = event_index_.find(id);
  if (it == event_index_.end()) throw SemanticError("unknown event: " + id);
  return it->second;
}

bool ReadingEventModel::has_event(const std::string& id) const {
  return event_index_.count(id) > 0;
}

const Partition& ReadingEventModel::relation(Sym agent) const {
  auto it = relations_.find(agent);
  if (it == relations_.end()) throw SemanticError("unknown agent: " + name_of(agent));
  return it->second;
}

Partition ReadingEventModel::group_rel(const Group& B) const {
  if (!B.subset_of(universe_)) throw SemanticError("unknown agent in group " + B.to_string());
  Partition acc = relation(*B.begin());
  for (auto a = std::next(B.begin()); a != B.end(); ++a) acc = meet(acc, relation(*a));
  return acc;
}

ReadingEventModel compose_events(const ReadingEventModel& e1, const ReadingEventModel& e2) {
  if (e1.universe() != e2.universe())
    throw SemanticError("compose_events: mismatched agent universes");
  const Group& A = e1.universe();
  const std::size_t n1 = e1.num_events(), n2 = e2.num_events();

  std::vector<std::string> events;
  std::vector<ReadingMap> reads;
  ReadingEventModel::Provenance prov;
  events.reserve(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      events.push_back(e1.event_name(i) + ";" + e2.event_name(j));
      // (e;f)(a) = e(f(a)): first-stage reads lifted through the second.
      reads.push_back(compose_reading(e1.reads(i), e2.reads(j), A));
      prov.origin.emplace_back(i, j);
    }

  // e;f ~a e';f' iff e ~_{f(a)} e' and f ~a f'.
  std::map<Sym, Partition> rels;
  for (Sym a : A) {
    const Partition& second = e2.relation(a);
    std::vector<int> block_of(n1 * n2, -1);
    int next_block = 0;
    std::map<std::pair<int, int>, int> ids;  // (block in e1 stage, block of f) -> block
    for (std::size_t j = 0; j < n2; ++j) {
      Partition first_stage = e1.group_rel(e2.reads(j).read(a));
      for (std::size_t i = 0; i < n1; ++i) {
        auto key = std::make_pair(first_stage.block_of(i), second.block_of(j));
        auto [it, fresh] = ids.emplace(key, next_block);
        if (fresh) ++next_block;
        block_of[i * n2 + j] = it->second;
      }
    }
    rels.emplace(a, Partition(std::move(block_of), next_block));
  }

  ReadingEventModel out(A, std::move(events), std::move(rels), std::move(reads));
  out.provenance_ = std::move(prov);
  return out;
}

namespace {

using nlohmann::json;

Partition parse_event_partition(const json& blocks_json, const std::vector<std::string>& events,
                                const std::map<std::string, std::size_t>& index,
                                const std::string& what) {
  std::vector<int> block_of(events.size(), -1);
  int k = 0;
  for (const auto& blk : blocks_json) {
    for (const auto& s : blk) {
      auto it = index.find(s.get<std::string>());
      if (it == index.end())
        throw SemanticError("event partition for " + what + " mentions unknown event " +
                            s.get<std::string>());
      if (block_of[it->second] != -1)
        throw SemanticError("partition error: event " + s.get<std::string>() +
                            " appears in two blocks of " + what);
      block_of[it->second] = k;
    }
    ++k;
  }
  for (std::size_t i = 0; i < block_of.size(); ++i)
    if (block_of[i] == -1)
      throw SemanticError("partition error: event " + events[i] + " missing from " + what);
  return Partition(std::move(block_of), k);
}

}  // namespace

EventModelPtr load_event_model_json(const std::string& text, bool strict, std::string* warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SemanticError(std::string("schema: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("agents") || !doc.contains("events") ||
      !doc.contains("relations"))
    throw SemanticError("schema: event model needs agents/events/relations");

  Group universe = Group::parse_names(doc["agents"].get<std::vector<std::string>>());
  std::vector<std::string> events = doc["events"].get<std::vector<std::string>>();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < events.size(); ++i)
    if (!index.emplace(events[i], i).second)
      throw SemanticError("schema: duplicate event " + events[i]);

  std::map<Sym, Partition> rels;
  for (const auto& [agent, blocks] : doc["relations"].items()) {
    Sym a = intern(agent);
    if (!universe.contains(a))
      throw SemanticError("event relation for undeclared agent " + agent);
    rels.emplace(a, parse_event_partition(blocks, events, index, "agent " + agent));
  }

  std::vector<ReadingMap> reads;
  reads.reserve(events.size());
  for (const auto& ev : events) {
    std::map<std::string, Group> entries;
    if (doc.contains("reads") && doc["reads"].contains(ev)) {
      for (const auto& [agent, arr] : doc["reads"][ev].items()) {
        Group g = Group::parse_names(arr.get<std::vector<std::string>>());
        if (g.empty()) throw SemanticError("empty read group for agent " + agent);
        if (!g.contains(intern(agent))) {
          if (strict)
            throw SemanticError("event " + ev + ": read group of " + agent +
                                " must contain the reader");
          if (warnings)
            *warnings += "note: event " + ev + ": added reader " + agent +
                         " to its own read group\n";
        }
        entries.emplace(agent, std::move(g));
      }
    }
    reads.push_back(entries.empty() ? ReadingMap::identity(universe)
                                    : ReadingMap::table(std::move(entries)));
  }

  return std::make_shared<ReadingEventModel>(std::move(universe), std::move(events),
                                             std::move(rels), std::move(reads));
}

EventModelPtr load_event_model_file(const std::string& path, bool strict, std::string* warnings) {
  std::ifstream in(path);
  if (!in) throw SemanticError("cannot open event model file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_event_model_json(ss.str(), strict, warnings);
}

}  // namespace cdk

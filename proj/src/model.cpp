#include "cdk/model.hpp"

#include <fstream>
#include <sstream>

#include "cdk/errors.hpp"
#include "json.hpp"

namespace cdk {

namespace {
std::atomic<uint64_t> next_uid{1};
}

EpistemicModel::EpistemicModel(Group universe, std::vector<std::string> states,
                               std::map<Sym, Partition> relations,
                               std::map<std::string, Bits> valuation)
    : universe_(std::move(universe)),
      states_(std::move(states)),
      relations_(std::move(relations)),
      valuation_(std::move(valuation)),
      uid_(next_uid.fetch_add(1)) {
  if (universe_.empty()) throw SemanticError("model needs at least one agent");
  if (states_.empty()) throw SemanticError("model needs at least one state");
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (!state_index_.emplace(states_[i], i).second)
      throw SemanticError("duplicate state id: " + states_[i]);
  }
  for (Sym a : universe_) {
    auto it = relations_.find(a);
    if (it == relations_.end()) throw SemanticError("missing relation for agent " + name_of(a));
    if (it->second.size() != states_.size())
      throw SemanticError("relation for agent " + name_of(a) + " does not cover all states");
  }
  for (const auto& [prop, ext] : valuation_) {
    if (ext.size() != states_.size())
      throw SemanticError("valuation for " + prop + " does not match state count");
  }
}

std::size_t EpistemicModel::state_index(const std::string& id) const {
  auto it = state_index_.find(id);
  if (it == state_index_.end()) throw SemanticError("unknown state: " + id);
  return it->second;
}

bool EpistemicModel::has_state(const std::string& id) const { return state_index_.count(id) > 0; }

const Partition& EpistemicModel::relation(Sym agent) const {
  auto it = relations_.find(agent);
  if (it == relations_.end()) throw SemanticError("unknown agent: " + name_of(agent));
  return it->second;
}

bool EpistemicModel::atom_true(std::size_t state, const std::string& prop) const {
  auto it = valuation_.find(prop);
  return it != valuation_.end() && it->second.test(state);
}

Bits EpistemicModel::atom_extension(const std::string& prop) const {
  auto it = valuation_.find(prop);
  if (it != valuation_.end()) return it->second;
  return Bits(states_.size());  // unlisted atoms are false everywhere
}

Partition EpistemicModel::group_rel(const Group& B) const {
  if (!B.subset_of(universe_)) throw SemanticError("unknown agent in group " + B.to_string());
  auto it = group_rel_cache_.find(B);
  if (it != group_rel_cache_.end()) return it->second;
  Partition acc = relation(*B.begin());
  for (auto a = std::next(B.begin()); a != B.end(); ++a) acc = meet(acc, relation(*a));
  group_rel_cache_.emplace(B, acc);
  return acc;
}

Partition EpistemicModel::family_rel(const GroupFamily& fam) const {
  Partition acc = group_rel(fam.groups().front());
  for (std::size_t i = 1; i < fam.size(); ++i) acc = join(acc, group_rel(fam.groups()[i]));
  return acc;
}

bool operator==(const EpistemicModel& a, const EpistemicModel& b) {
  return a.universe_ == b.universe_ && a.states_ == b.states_ && a.relations_ == b.relations_ &&
         a.valuation_ == b.valuation_;
}

namespace {

using nlohmann::json;

Partition parse_partition(const json& blocks_json, const std::vector<std::string>& states,
                          const std::map<std::string, std::size_t>& index,
                          const std::string& what) {
  std::vector<int> block_of(states.size(), -1);
  int k = 0;
  for (const auto& blk : blocks_json) {
    if (!blk.is_array()) throw SemanticError("schema: blocks of " + what + " must be arrays");
    for (const auto& s : blk) {
      auto it = index.find(s.get<std::string>());
      if (it == index.end())
        throw SemanticError("partition for " + what + " mentions unknown state " +
                            s.get<std::string>());
      if (block_of[it->second] != -1)
        throw SemanticError("partition error: state " + s.get<std::string>() +
                            " appears in two blocks of " + what);
      block_of[it->second] = k;
    }
    ++k;
  }
  for (std::size_t i = 0; i < block_of.size(); ++i)
    if (block_of[i] == -1)
      throw SemanticError("partition error: state " + states[i] + " missing from " + what);
  return Partition(std::move(block_of), k);
}

json partition_to_json(const Partition& p, const std::vector<std::string>& states) {
  json out = json::array();
  for (const auto& blk : p.block_lists()) {
    json b = json::array();
    for (std::size_t i : blk) b.push_back(states[i]);
    out.push_back(b);
  }
  return out;
}

}  // namespace

ModelPtr load_model_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SemanticError(std::string("schema: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("agents") || !doc.contains("states") ||
      !doc.contains("relations"))
    throw SemanticError("schema: model document needs agents/states/relations");

  std::vector<std::string> agent_names = doc["agents"].get<std::vector<std::string>>();
  Group universe = Group::parse_names(agent_names);
  std::vector<std::string> states = doc["states"].get<std::vector<std::string>>();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!index.emplace(states[i], i).second)
      throw SemanticError("schema: duplicate state " + states[i]);
  }

  std::map<Sym, Partition> rels;
  for (const auto& [agent, blocks] : doc["relations"].items()) {
    Sym a = intern(agent);
    if (!universe.contains(a)) throw SemanticError("relation for undeclared agent " + agent);
    rels.emplace(a, parse_partition(blocks, states, index, "agent " + agent));
  }

  std::map<std::string, Bits> valuation;
  if (doc.contains("valuation")) {
    for (const auto& [prop, arr] : doc["valuation"].items()) {
      Bits ext(states.size());
      for (const auto& s : arr) {
        auto it = index.find(s.get<std::string>());
        if (it == index.end())
          throw SemanticError("valuation of " + prop + " mentions unknown state " +
                              s.get<std::string>());
        ext.set(it->second);
      }
      valuation.emplace(prop, std::move(ext));
    }
  }

  return std::make_shared<EpistemicModel>(std::move(universe), std::move(states), std::move(rels),
                                          std::move(valuation));
}

ModelPtr load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SemanticError("cannot open model file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model_json(ss.str());
}

std::string model_to_json(const EpistemicModel& m) {
  nlohmann::ordered_json doc;
  doc["agents"] = json::array();
  for (Sym a : m.universe()) doc["agents"].push_back(name_of(a));
  doc["states"] = m.states();
  nlohmann::ordered_json rels;
  for (Sym a : m.universe()) rels[name_of(a)] = partition_to_json(m.relation(a), m.states());
  doc["relations"] = std::move(rels);
  nlohmann::ordered_json val;
  for (const auto& [prop, ext] : m.valuation()) {
    json arr = json::array();
    for (std::size_t i : ext.indices()) arr.push_back(m.state_name(i));
    val[prop] = std::move(arr);
  }
  doc["valuation"] = std::move(val);
  return doc.dump(2) + "\n";
}

}  // namespace cdk

#include "cdk/pseudo.hpp"

#include <fstream>
#include <sstream>

#include "cdk/errors.hpp"
#include "json.hpp"

namespace cdk {

PseudoModel::PseudoModel(Group universe, std::vector<std::string> states,
                         std::map<Group, Partition> grel, std::map<std::string, Bits> atom_val,
                         std::map<std::pair<Group, Group>, Bits> comp_val)
    : universe_(std::move(universe)),
      states_(std::move(states)),
      grel_(std::move(grel)),
      atom_val_(std::move(atom_val)),
      comp_val_(std::move(comp_val)) {
  if (universe_.empty()) throw SemanticError("pseudo-model needs at least one agent");
  if (states_.empty()) throw SemanticError("pseudo-model needs at least one state");
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (!state_index_.emplace(states_[i], i).second)
      throw SemanticError("duplicate state id: " + states_[i]);
  for (const auto& [g, p] : grel_) {
    if (g.empty()) throw SemanticError("empty group stored in pseudo-model");
    if (!g.subset_of(universe_))
      throw SemanticError("group " + g.to_string() + " outside the universe");
    if (p.size() != states_.size())
      throw SemanticError("relation for " + g.to_string() + " does not cover all states");
  }
  for (const auto& [prop, ext] : atom_val_)
    if (ext.size() != states_.size())
      throw SemanticError("valuation for " + prop + " does not match state count");
  for (const auto& [pair, ext] : comp_val_)
    if (ext.size() != states_.size())
      throw SemanticError("comparative valuation does not match state count");
}

std::size_t PseudoModel::state_index(const std::string& id) const {
  auto it = state_index_.find(id);
  if (it == state_index_.end()) throw SemanticError("unknown state: " + id);
  return it->second;
}

const Partition& PseudoModel::group_rel(const Group& B) const {
  auto it = grel_.find(B);
  if (it == grel_.end()) throw SemanticError("unknown group in pseudo-model: " + B.to_string());
  return it->second;
}

Partition PseudoModel::family_rel(const GroupFamily& fam) const {
  Partition acc = group_rel(fam.groups().front());
  for (std::size_t i = 1; i < fam.size(); ++i) acc = join(acc, group_rel(fam.groups()[i]));
  return acc;
}

bool PseudoModel::atom_true(std::size_t state, const std::string& prop) const {
  auto it = atom_val_.find(prop);
  return it != atom_val_.end() && it->second.test(state);
}

Bits PseudoModel::atom_extension(const std::string& prop) const {
  auto it = atom_val_.find(prop);
  if (it != atom_val_.end()) return it->second;
  return Bits(states_.size());
}

bool PseudoModel::comp_true(std::size_t state, const Group& B, const Group& C) const {
  auto it = comp_val_.find({B, C});
  if (it == comp_val_.end())
    throw SemanticError("unknown comparative in pseudo-model: " + B.to_string() +
                        " <= " + C.to_string());
  return it->second.test(state);
}

void PseudoModel::set_comp(const Group& B, const Group& C, Bits ext) {
  comp_val_[{B, C}] = std::move(ext);
}

void PseudoModel::set_group_rel(const Group& B, Partition p) { grel_[B] = std::move(p); }

std::optional<PseudoViolation> validate_pseudo(const PseudoModel& pm) {
  const std::size_t n = pm.num_states();
  // Condition 1 holds by representation (partitions are equivalences),
  // but the constructor already rejected malformed blocks at load time.

  // Condition 2: comparative truth propagates along ∼_B into ∼_C.
  for (const auto& [pair, ext] : pm.comp_val()) {
    const auto& [B, C] = pair;
    if (!pm.has_group(B) || !pm.has_group(C)) continue;
    const Partition& rb = pm.group_rel(B);
    const Partition& rc = pm.group_rel(C);
    for (std::size_t s = 0; s < n; ++s) {
      if (!ext.test(s)) continue;
      for (std::size_t t = 0; t < n; ++t) {
        if (!rb.same(s, t)) continue;
        if (!rc.same(s, t))
          return PseudoViolation{2, "state " + pm.state_name(s) + " satisfies " + B.to_string() +
                                        "<=" + C.to_string() + " and is " + B.to_string() +
                                        "-linked to " + pm.state_name(t) + " but not " +
                                        C.to_string() + "-linked"};
        if (!ext.test(t))
          return PseudoViolation{2, "comparative " + B.to_string() + "<=" + C.to_string() +
                                        " not constant on the " + B.to_string() + "-class of " +
                                        pm.state_name(s)};
      }
    }
  }

  // Condition 3: B <= C is universally true when C ⊆ B.
  for (const auto& [pair, ext] : pm.comp_val()) {
    const auto& [B, C] = pair;
    if (C.subset_of(B) && !ext.all())
      return PseudoViolation{3, "comparative " + B.to_string() + "<=" + C.to_string() +
                                    " must hold everywhere since " + C.to_string() +
                                    " is a subgroup"};
  }

  // Condition 4: additivity over stored triples.
  for (const auto& [pair1, ext1] : pm.comp_val()) {
    const auto& [B, C] = pair1;
    for (const auto& [pair2, ext2] : pm.comp_val()) {
      if (!(pair2.first == B)) continue;
      const Group& E = pair2.second;
      auto it = pm.comp_val().find({B, C.union_with(E)});
      if (it == pm.comp_val().end()) continue;
      Bits both = ext1 & ext2;
      if (!both.subset_of(it->second))
        return PseudoViolation{4, "additivity fails for " + B.to_string() + " with " +
                                      C.to_string() + " and " + E.to_string()};
    }
  }

  // Condition 5: transitivity over stored triples.
  for (const auto& [pair1, ext1] : pm.comp_val()) {
    const auto& [B, C] = pair1;
    for (const auto& [pair2, ext2] : pm.comp_val()) {
      if (!(pair2.first == C)) continue;
      const Group& E = pair2.second;
      auto it = pm.comp_val().find({B, E});
      if (it == pm.comp_val().end()) continue;
      Bits both = ext1 & ext2;
      if (!both.subset_of(it->second))
        return PseudoViolation{5, "transitivity fails for " + B.to_string() + " <= " +
                                      C.to_string() + " <= " + E.to_string()};
    }
  }

  return std::nullopt;
}

std::vector<Group> all_nonempty_subgroups(const Group& universe, std::size_t cap) {
  const auto& members = universe.members();
  const std::size_t n = members.size();
  if (n >= 8 * sizeof(std::size_t) - 1 || ((std::size_t{1} << n) - 1) > cap)
    throw ResourceError("too many subgroups of " + universe.to_string());
  std::vector<Group> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Sym> ms;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) ms.push_back(members[i]);
    out.push_back(Group(std::move(ms)));
  }
  std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

PseudoModel model_as_pseudo(const EpistemicModel& m) {
  std::vector<Group> groups = all_nonempty_subgroups(m.universe());
  std::map<Group, Partition> grel;
  for (const auto& g : groups) grel.emplace(g, m.group_rel(g));

  std::map<std::string, Bits> atom_val = m.valuation();

  // s satisfies B <= C iff the ∼_B-class of s is included in its ∼_C-class.
  std::map<std::pair<Group, Group>, Bits> comp_val;
  const std::size_t n = m.num_states();
  for (const auto& B : groups) {
    const Partition& rb = grel.at(B);
    for (const auto& C : groups) {
      const Partition& rc = grel.at(C);
      Bits ext(n);
      for (std::size_t s = 0; s < n; ++s) {
        bool ok = true;
        for (std::size_t t = 0; t < n && ok; ++t)
          if (rb.same(s, t) && !rc.same(s, t)) ok = false;
        if (ok) ext.set(s);
      }
      comp_val.emplace(std::make_pair(B, C), std::move(ext));
    }
  }

  return PseudoModel(m.universe(), m.states(), std::move(grel), std::move(atom_val),
                     std::move(comp_val));
}

namespace {

using nlohmann::json;

Group group_from_key(const std::string& key) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : key) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  names.push_back(cur);
  return Group::parse_names(names);
}

}  // namespace

PseudoPtr load_pseudo_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SemanticError(std::string("schema: invalid JSON: ") + e.what());
  }
  // A pseudo-model document is a model document plus group relations and
  // comparative valuations.
  ModelPtr base = load_model_json(text);
  std::map<Group, Partition> grel;
  for (Sym a : base->universe()) grel.emplace(Group{a}, base->relation(a));
  if (doc.contains("groups")) {
    for (const auto& [key, blocks] : doc["groups"].items()) {
      Group g = group_from_key(key);
      if (!g.subset_of(base->universe()))
        throw SemanticError("group " + g.to_string() + " outside declared agents");
      std::vector<int> block_of(base->num_states(), -1);
      int k = 0;
      for (const auto& blk : blocks) {
        for (const auto& s : blk) {
          std::size_t i = base->state_index(s.get<std::string>());
          if (block_of[i] != -1)
            throw SemanticError("partition error: state " + s.get<std::string>() +
                                " appears twice for group " + key);
          block_of[i] = k;
        }
        ++k;
      }
      for (std::size_t i = 0; i < block_of.size(); ++i)
        if (block_of[i] == -1)
          throw SemanticError("partition error: state " + base->state_name(i) +
                              " missing for group " + key);
      grel.emplace(std::move(g), Partition(std::move(block_of), k));
    }
  }
  std::map<std::pair<Group, Group>, Bits> comp_val;
  if (doc.contains("comparatives")) {
    for (const auto& [key, arr] : doc["comparatives"].items()) {
      auto pos = key.find("<=");
      if (pos == std::string::npos)
        throw SemanticError("schema: comparative key must look like \"a,b<=c\": " + key);
      Group B = group_from_key(key.substr(0, pos));
      Group C = group_from_key(key.substr(pos + 2));
      Bits ext(base->num_states());
      for (const auto& s : arr) ext.set(base->state_index(s.get<std::string>()));
      comp_val.emplace(std::make_pair(std::move(B), std::move(C)), std::move(ext));
    }
  }
  std::map<std::string, Bits> atom_val = base->valuation();
  return std::make_shared<PseudoModel>(base->universe(), base->states(), std::move(grel),
                                       std::move(atom_val), std::move(comp_val));
}

PseudoPtr load_pseudo_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SemanticError("cannot open pseudo-model file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_pseudo_json(ss.str());
}

std::string pseudo_to_json(const PseudoModel& pm, const std::string& designated_state) {
  nlohmann::ordered_json doc;
  doc["agents"] = json::array();
  for (Sym a : pm.universe()) doc["agents"].push_back(name_of(a));
  doc["states"] = pm.states();

  auto blocks_json = [&](const Partition& p) {
    json out = json::array();
    for (const auto& blk : p.block_lists()) {
      json b = json::array();
      for (std::size_t i : blk) b.push_back(pm.state_name(i));
      out.push_back(b);
    }
    return out;
  };

  nlohmann::ordered_json rels;
  for (Sym a : pm.universe()) {
    Group g{a};
    if (pm.has_group(g)) rels[name_of(a)] = blocks_json(pm.group_rel(g));
  }
  doc["relations"] = std::move(rels);

  nlohmann::ordered_json val;
  for (const auto& [prop, ext] : pm.atom_val()) {
    json arr = json::array();
    for (std::size_t i : ext.indices()) arr.push_back(pm.state_name(i));
    val[prop] = std::move(arr);
  }
  doc["valuation"] = std::move(val);

  nlohmann::ordered_json groups;
  for (const auto& [g, p] : pm.grel()) {
    if (g.size() == 1) continue;
    groups[g.key()] = blocks_json(p);
  }
  doc["groups"] = std::move(groups);

  nlohmann::ordered_json comps;
  for (const auto& [pair, ext] : pm.comp_val()) {
    json arr = json::array();
    for (std::size_t i : ext.indices()) arr.push_back(pm.state_name(i));
    comps[pair.first.key() + "<=" + pair.second.key()] = std::move(arr);
  }
  doc["comparatives"] = std::move(comps);

  if (!designated_state.empty()) doc["state"] = designated_state;
  return doc.dump(2) + "\n";
}

}  // namespace cdk

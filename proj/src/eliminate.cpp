#include "cdk/eliminate.hpp"

#include <algorithm>
#include <numeric>

#include "cdk/errors.hpp"
#include "cdk/pseudo.hpp"

namespace cdk {

AtomGraph::AtomGraph(const AtomUniverse& universe) : universe_(universe) {
  const FLClosure& cl = universe_.closure();
  const auto& gens = cl.generators();
  const auto& atoms = universe_.atoms();
  const std::size_t na = atoms.size();

  groups_ = all_nonempty_subgroups(cl.universe());
  for (std::size_t i = 0; i < groups_.size(); ++i) group_index_.emplace(groups_[i], i);

  // Ownership tables: comparatives by left group, D-formulas by group.
  std::vector<std::vector<int>> comps_of(groups_.size());
  std::vector<std::vector<int>> dforms_of(groups_.size());
  // comp_idx[b][c] = generator index of (B <= C)
  std::vector<std::vector<int>> comp_idx(groups_.size(), std::vector<int>(groups_.size(), -1));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].kind() == FKind::Comp) {
      std::size_t b = group_index_.at(gens[i]->group);
      std::size_t c = group_index_.at(gens[i]->group2);
      comps_of[b].push_back(static_cast<int>(i));
      comp_idx[b][c] = static_cast<int>(i);
    } else if (gens[i].kind() == FKind::Cd && gens[i]->family.is_singleton()) {
      dforms_of[group_index_.at(gens[i]->family.groups().front())].push_back(
          static_cast<int>(i));
    }
  }

  classes_.assign(groups_.size(), std::vector<int>(na, 0));
  for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
    std::map<std::vector<int>, int> ids;
    for (std::size_t a = 0; a < na; ++a) {
      const Bits& bits = atoms[a].bits;
      std::vector<int> profile;
      for (std::size_t ci = 0; ci < groups_.size(); ++ci) {
        int cmp = comp_idx[gi][ci];
        if (cmp < 0 || !bits.test(static_cast<std::size_t>(cmp))) continue;
        // group ci is dominated here: its comparatives and D-formulas
        // become part of what ∼_B preserves
        for (int idx : comps_of[ci])
          if (bits.test(static_cast<std::size_t>(idx))) profile.push_back(idx);
        for (int idx : dforms_of[ci])
          if (bits.test(static_cast<std::size_t>(idx))) profile.push_back(idx);
      }
      std::sort(profile.begin(), profile.end());
      profile.erase(std::unique(profile.begin(), profile.end()), profile.end());
      auto [it, fresh] = ids.emplace(std::move(profile), static_cast<int>(ids.size()));
      classes_[gi][a] = it->second;
    }
  }

  // Existential demands: one per Cd generator; active in atoms where the
  // generator is false.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].kind() != FKind::Cd) continue;
    Demand d;
    d.generator = i;
    for (const auto& g : gens[i]->family) d.group_ids.push_back(group_index_.at(g));
    d.body_false = Bits(na);
    for (std::size_t a = 0; a < na; ++a)
      if (!universe_.holds(a, gens[i]->lhs)) d.body_false.set(a);
    demands_.push_back(std::move(d));
  }
}

int AtomGraph::cls(const Group& B, std::size_t atom) const {
  auto it = group_index_.find(B);
  if (it == group_index_.end())
    throw SemanticError("unknown group in atom graph: " + B.to_string());
  return classes_[it->second][atom];
}

namespace {

struct DSU {
  std::vector<int> parent;
  explicit DSU(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Bits AtomGraph::eliminate(bool parallel) {
  const auto& atoms = universe_.atoms();
  const std::size_t na = atoms.size();
  Bits alive(na, true);
  rounds_ = 0;

  bool changed = true;
  while (changed) {
    changed = false;
    ++rounds_;

    // Component roots of the survivor graph, one table per distinct family.
    std::map<std::vector<std::size_t>, std::vector<int>> family_root;
    for (const auto& d : demands_) {
      if (family_root.count(d.group_ids)) continue;
      DSU dsu(na);
      for (std::size_t gid : d.group_ids) {
        std::map<int, int> first_in_class;
        for (std::size_t a = 0; a < na; ++a) {
          if (!alive.test(a)) continue;
          auto [it, fresh] = first_in_class.emplace(classes_[gid][a], static_cast<int>(a));
          if (!fresh) dsu.unite(static_cast<int>(a), it->second);
        }
      }
      std::vector<int> root(na);
      for (std::size_t a = 0; a < na; ++a) root[a] = dsu.find(static_cast<int>(a));
      family_root.emplace(d.group_ids, std::move(root));
    }

    // Components containing a surviving counterexample to the body.
    std::vector<std::vector<char>> component_ok(demands_.size());
    std::vector<const std::vector<int>*> demand_root(demands_.size());
    for (std::size_t di = 0; di < demands_.size(); ++di) {
      const std::vector<int>& root = family_root.at(demands_[di].group_ids);
      demand_root[di] = &root;
      std::vector<char> ok(na, 0);
      for (std::size_t a = 0; a < na; ++a)
        if (alive.test(a) && demands_[di].body_false.test(a)) ok[root[a]] = 1;
      component_ok[di] = std::move(ok);
    }

    std::vector<char> kill(na, 0);
    const long long na_ll = static_cast<long long>(na);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (long long a = 0; a < na_ll; ++a) {
      if (!alive.test(static_cast<std::size_t>(a))) continue;
      for (std::size_t di = 0; di < demands_.size(); ++di) {
        const Demand& d = demands_[di];
        if (atoms[a].bits.test(d.generator)) continue;  // Cd holds: no demand
        if (!component_ok[di][(*demand_root[di])[a]]) {
          kill[a] = 1;
          break;
        }
      }
    }
    for (std::size_t a = 0; a < na; ++a)
      if (kill[a]) {
        alive.reset(a);
        changed = true;
      }
  }
  return alive;
}

Bits AtomGraph::eliminate_serial_reference() const {
  const auto& atoms = universe_.atoms();
  const std::size_t na = atoms.size();
  Bits alive(na, true);

  auto demand_met = [&](std::size_t start, const Demand& d) {
    // Breadth-first through surviving atoms connected by any family member
    // relation, looking for an atom where the body fails.
    std::vector<char> seen(na, 0);
    std::vector<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      std::size_t cur = queue.back();
      queue.pop_back();
      if (d.body_false.test(cur)) return true;
      for (std::size_t next = 0; next < na; ++next) {
        if (seen[next] || !alive.test(next)) continue;
        bool linked = false;
        for (std::size_t gid : d.group_ids)
          if (classes_[gid][cur] == classes_[gid][next]) {
            linked = true;
            break;
          }
        if (linked) {
          seen[next] = 1;
          queue.push_back(next);
        }
      }
    }
    return false;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> doomed;
    for (std::size_t a = 0; a < na; ++a) {
      if (!alive.test(a)) continue;
      for (const auto& d : demands_) {
        if (atoms[a].bits.test(d.generator)) continue;
        if (!demand_met(a, d)) {
          doomed.push_back(a);
          break;
        }
      }
    }
    for (std::size_t a : doomed) {
      alive.reset(a);
      changed = true;
    }
  }
  return alive;
}

}  // namespace cdk

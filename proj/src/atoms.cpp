#include "cdk/atoms.hpp"

#include <functional>
#include <map>

#include "cdk/errors.hpp"

namespace cdk {

namespace {

struct GenIndex {
  std::map<std::size_t, std::vector<std::pair<Formula, int>>> by_hash;
  void add(const Formula& f, int i) { by_hash[f.hash()].emplace_back(f, i); }
  int find(const Formula& f) const {
    auto it = by_hash.find(f.hash());
    if (it == by_hash.end()) return -1;
    for (const auto& [g, i] : it->second)
      if (g == f) return i;
    return -1;
  }
};

}  // namespace

AtomUniverse::AtomUniverse(const FLClosure& closure, std::size_t max_atoms) : closure_(closure) {
  const auto& gens = closure_.generators();
  GenIndex index;
  for (std::size_t i = 0; i < gens.size(); ++i) index.add(gens[i], static_cast<int>(i));

  // Inclusion: B <= C is forced whenever C is a subgroup of B.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (g.kind() == FKind::Comp && g->group2.subset_of(g->group))
      forced_true_.push_back(static_cast<int>(i));
  }

  // Additivity and transitivity over the comparative generators.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].kind() != FKind::Comp) continue;
    const Group& B = gens[i]->group;
    const Group& C = gens[i]->group2;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (gens[j].kind() != FKind::Comp) continue;
      if (gens[j]->group == B) {
        const Group& E = gens[j]->group2;
        int k = index.find(mk_comp(B, C.union_with(E)));
        if (k >= 0 && k != static_cast<int>(i) && k != static_cast<int>(j))
          rules_.push_back({{static_cast<int>(i), static_cast<int>(j)}, k});
      }
      if (gens[j]->group == C) {
        const Group& E = gens[j]->group2;
        int k = index.find(mk_comp(B, E));
        if (k >= 0 && k != static_cast<int>(i) && k != static_cast<int>(j))
          rules_.push_back({{static_cast<int>(i), static_cast<int>(j)}, k});
      }
    }
  }

  // Cd structure: veracity of the body, fixed-point unfolding into the
  // D-wrappers, and knowledge transfer between D generators.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].kind() != FKind::Cd) continue;
    veracity_.emplace_back(static_cast<int>(i), gens[i]->lhs);
    for (const Group& b : gens[i]->family) {
      int w = index.find(mk_Cd(GroupFamily{b}, gens[i]));
      if (w >= 0) rules_.push_back({{static_cast<int>(i)}, w});
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].kind() != FKind::Cd || !gens[i]->family.is_singleton()) continue;
    const Group& C = gens[i]->family.groups().front();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j == i || gens[j].kind() != FKind::Cd || !gens[j]->family.is_singleton()) continue;
      if (!(gens[j]->lhs == gens[i]->lhs)) continue;
      const Group& B = gens[j]->family.groups().front();
      int comp = index.find(mk_comp(B, C));
      if (comp >= 0)
        rules_.push_back({{comp, static_cast<int>(i)}, static_cast<int>(j)});
    }
  }

  enumerate(max_atoms);
}

int AtomUniverse::generator_index(const Formula& f) const {
  const auto& gens = closure_.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == f) return static_cast<int>(i);
  return -1;
}

bool AtomUniverse::eval(const Bits& bits, const Formula& f) const {
  switch (f.kind()) {
    case FKind::True:
      return true;
    case FKind::False:
      return false;
    case FKind::Not:
      return !eval(bits, f->lhs);
    case FKind::And:
      return eval(bits, f->lhs) && eval(bits, f->rhs);
    case FKind::Atom:
    case FKind::Comp:
    case FKind::Cd: {
      int i = generator_index(f);
      if (i < 0) throw InternalError("formula outside the closure: generator lookup failed");
      return bits.test(static_cast<std::size_t>(i));
    }
    default:
      throw InternalError("atom evaluation over non-kernel formula");
  }
}

bool AtomUniverse::holds(const HAtom& atom, const Formula& member) const {
  return eval(atom.bits, member);
}

bool AtomUniverse::holds(std::size_t atom_index, const Formula& member) const {
  return holds(atoms_[atom_index], member);
}

void AtomUniverse::enumerate(std::size_t max_atoms) {
  const auto& gens = closure_.generators();
  const std::size_t n = gens.size();

  std::vector<signed char> assign(n, -1);
  for (int i : forced_true_) assign[i] = 1;

  // Rules indexed by their last variable in assignment order: a rule can
  // be verified as soon as all of its variables have values.
  std::vector<std::vector<const HornRule*>> rules_at(n);
  for (const auto& r : rules_) {
    int last = r.conclusion;
    for (int p : r.premises) last = std::max(last, p);
    rules_at[last].push_back(&r);
  }
  // Veracity checks at the Cd generator itself: its body only mentions
  // generators of strictly smaller size, which are assigned earlier.
  std::vector<std::vector<const std::pair<int, Formula>*>> veracity_at(n);
  for (const auto& v : veracity_) veracity_at[v.first].push_back(&v);

  Bits current(n);
  auto consistent_at = [&](std::size_t level) {
    for (const HornRule* r : rules_at[level]) {
      bool all = true;
      for (int p : r->premises)
        if (assign[p] != 1) {
          all = false;
          break;
        }
      if (all && assign[r->conclusion] != 1) return false;
    }
    for (const auto* v : veracity_at[level])
      if (assign[v->first] == 1 && !eval(current, v->second)) return false;
    return true;
  };

  std::size_t budget = max_atoms;
  std::vector<std::size_t> stack;
  // Depth-first over generator decisions in closure order.
  std::function<void(std::size_t)> walk = [&](std::size_t level) {
    if (level == n) {
      if (atoms_.size() >= budget)
        throw ResourceError("atom enumeration exceeded the cap of " + std::to_string(budget));
      atoms_.push_back(HAtom{current});
      return;
    }
    signed char preset = assign[level];
    for (signed char value : {1, 0}) {
      if (preset != -1 && value != preset) continue;
      assign[level] = value;
      current.assign(level, value == 1);
      if (consistent_at(level)) walk(level + 1);
    }
    current.reset(level);
    assign[level] = preset;
  };
  walk(0);
}

}  // namespace cdk

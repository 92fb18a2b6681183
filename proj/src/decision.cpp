#include "cdk/decision.hpp"

#include <algorithm>
#include <random>

#include "cdk/checker.hpp"
#include "cdk/errors.hpp"
#include "cdk/printer.hpp"
#include "cdk/reducer.hpp"

namespace cdk {

namespace {

std::shared_ptr<PseudoModel> build_witness(const AtomGraph& graph, const Bits& alive) {
  const AtomUniverse& au = graph.universe();
  const FLClosure& cl = au.closure();
  const auto& gens = cl.generators();

  std::vector<std::size_t> survivors = alive.indices();
  std::vector<std::string> states;
  states.reserve(survivors.size());
  for (std::size_t i = 0; i < survivors.size(); ++i) states.push_back("t" + std::to_string(i));

  std::map<Group, Partition> grel;
  for (const auto& g : graph.groups()) {
    std::vector<int> block_of(survivors.size());
    std::map<int, int> remap;
    for (std::size_t i = 0; i < survivors.size(); ++i) {
      int c = graph.cls(g, survivors[i]);
      auto [it, fresh] = remap.emplace(c, static_cast<int>(remap.size()));
      block_of[i] = it->second;
    }
    grel.emplace(g, Partition(std::move(block_of), static_cast<int>(remap.size())));
  }

  std::map<std::string, Bits> atom_val;
  std::map<std::pair<Group, Group>, Bits> comp_val;
  for (const auto& gen : gens) {
    if (gen.kind() == FKind::Atom) {
      Bits ext(survivors.size());
      for (std::size_t i = 0; i < survivors.size(); ++i)
        if (au.holds(survivors[i], gen)) ext.set(i);
      atom_val.emplace(gen->name, std::move(ext));
    } else if (gen.kind() == FKind::Comp) {
      Bits ext(survivors.size());
      for (std::size_t i = 0; i < survivors.size(); ++i)
        if (au.holds(survivors[i], gen)) ext.set(i);
      comp_val.emplace(std::make_pair(gen->group, gen->group2), std::move(ext));
    }
  }

  return std::make_shared<PseudoModel>(cl.universe(), std::move(states), std::move(grel),
                                       std::move(atom_val), std::move(comp_val));
}

}  // namespace

SatResult sat(const Formula& f, const Group& agents, const EventRegistry& registry,
              const DecisionLimits& limits) {
  Formula reduced = desugar(reduce(f, registry));

  Group universe = agents.empty() ? agents_of(reduced) : agents.union_with(agents_of(reduced));
  if (universe.empty()) universe = Group{intern("a")};
  if (!agents.empty() && !agents_of(reduced).subset_of(universe))
    throw SemanticError("formula mentions agents outside the declared universe");

  FLClosure closure(reduced, universe, limits.max_closure);
  AtomUniverse atoms(closure, limits.max_atoms);
  AtomGraph graph(atoms);
  Bits alive = graph.eliminate(limits.parallel);

  // First surviving atom containing the reduced formula, in enumeration
  // order, keeps results deterministic.
  std::vector<std::size_t> survivors = alive.indices();
  std::size_t designated = survivors.size();
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    if (atoms.holds(survivors[i], reduced)) {
      designated = i;
      break;
    }
  }

  SatResult out;
  if (designated == survivors.size()) return out;  // Unsat

  out.satisfiable = true;
  out.witness = build_witness(graph, alive);
  out.state = out.witness->state_name(designated);

  // Mandatory verification: a gap between the atom construction and the
  // pseudo-model conditions must fail loudly, never return a bad witness.
  if (auto violation = validate_pseudo(*out.witness))
    throw InternalError("witness verification failed (condition " +
                        std::to_string(violation->condition) + "): " + violation->message);
  if (!check_pseudo(*out.witness, designated, reduced))
    throw InternalError("witness verification failed: designated state does not satisfy " +
                        render_formula(reduced));
  return out;
}

bool valid(const Formula& f, const Group& agents, const EventRegistry& registry,
           const DecisionLimits& limits) {
  return !sat(mk_not(f), agents, registry, limits).satisfiable;
}

namespace {

class AxiomFactory {
 public:
  AxiomFactory(const Group& agents, uint64_t seed) : agents_(agents), rng_(seed) {
    groups_ = all_nonempty_subgroups(agents_);
  }

  Group random_group() { return groups_[rng_() % groups_.size()]; }

  GroupFamily random_family() {
    std::size_t count = 1 + rng_() % std::min<std::size_t>(3, groups_.size());
    std::vector<Group> gs;
    for (std::size_t i = 0; i < count; ++i) gs.push_back(random_group());
    return GroupFamily(std::move(gs));
  }

  Formula filler(int depth = 2) {
    switch (rng_() % (depth > 0 ? 7 : 3)) {
      case 0:
        return mk_atom("p");
      case 1:
        return mk_atom("q");
      case 2:
        return mk_comp(random_group(), random_group());
      case 3:
        return mk_not(filler(depth - 1));
      case 4:
        return mk_and(filler(depth - 1), filler(depth - 1));
      case 5:
        return mk_D(random_group(), filler(depth - 1));
      default:
        return mk_Cd(random_family(), filler(depth - 1));
    }
  }

  ReadingMap random_map() {
    switch (rng_() % 4) {
      case 0:
        return ReadingMap::pub(random_group());
      case 1:
        return ReadingMap::res(random_group());
      case 2:
        return ReadingMap::grp({random_group(), random_group()});
      default:
        return ReadingMap::share(random_group(), random_group());
    }
  }

  std::vector<Sym> agent_list() const {
    return std::vector<Sym>(agents_.begin(), agents_.end());
  }

  const std::vector<Group>& groups() const { return groups_; }

 private:
  Group agents_;
  std::vector<Group> groups_;
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<Formula> instantiate_axioms(const Group& agents,
                                        const std::vector<std::string>& schemas,
                                        std::size_t budget, uint64_t seed) {
  AxiomFactory fx(agents, seed);
  auto want = [&](const std::string& s) {
    return schemas.empty() || std::find(schemas.begin(), schemas.end(), s) != schemas.end();
  };
  std::vector<Formula> out;
  auto emit = [&](Formula f) {
    if (out.size() < budget) out.push_back(std::move(f));
  };

  std::size_t variants = std::max<std::size_t>(1, budget / 24);
  for (std::size_t v = 0; v < variants && out.size() < budget; ++v) {
    Formula phi = fx.filler();
    Formula psi = fx.filler();
    Group B = fx.random_group();
    Group C = fx.random_group();
    Group E = fx.random_group();
    GroupFamily fam = fx.random_family();

    if (want("classical")) {
      emit(mk_implies(phi, phi));
      emit(mk_iff(mk_not(mk_not(phi)), phi));
    }
    if (want("s5")) {
      emit(mk_implies(mk_D(B, mk_implies(phi, psi)), mk_implies(mk_D(B, phi), mk_D(B, psi))));
      emit(mk_implies(mk_D(B, phi), phi));                    // veracity
      emit(mk_implies(mk_D(B, phi), mk_D(B, mk_D(B, phi))));  // positive introspection
      emit(mk_implies(mk_not(mk_D(B, phi)), mk_D(B, mk_not(mk_D(B, phi)))));
      if (B.subset_of(C)) emit(mk_implies(mk_D(B, phi), mk_D(C, phi)));  // monotonicity
      emit(mk_implies(mk_D(B, phi), mk_D(B.union_with(C), phi)));
    }
    if (want("comparative")) {
      if (C.subset_of(B)) emit(mk_comp(B, C));  // inclusion
      emit(mk_implies(mk_and(mk_comp(B, C), mk_comp(B, E)), mk_comp(B, C.union_with(E))));
      emit(mk_implies(mk_and(mk_comp(B, C), mk_comp(C, E)), mk_comp(B, E)));
      emit(mk_implies(mk_comp(B, C), mk_D(B, mk_comp(B, C))));  // known superiority
      emit(mk_implies(mk_comp(B, C), mk_implies(mk_D(C, phi), mk_D(B, phi))));
    }
    if (want("common")) {
      std::vector<Formula> fixpoint;
      fixpoint.push_back(phi);
      for (Sym b : B) fixpoint.push_back(mk_K(b, mk_C(B, phi)));
      emit(mk_implies(mk_C(B, phi), mk_and_all(fixpoint)));
      emit(mk_implies(mk_C(B, mk_implies(phi, psi)), mk_implies(mk_C(B, phi), mk_C(B, psi))));
      std::vector<Formula> everyone;
      for (Sym b : B) everyone.push_back(mk_K(b, phi));
      emit(mk_implies(mk_C(B, mk_implies(phi, mk_and_all(everyone))),
                      mk_implies(phi, mk_C(B, phi))));
    }
    if (want("cd")) {
      emit(mk_implies(mk_Cd(fam, mk_implies(phi, psi)),
                      mk_implies(mk_Cd(fam, phi), mk_Cd(fam, psi))));
      std::vector<Formula> fixpoint;
      fixpoint.push_back(phi);
      for (const Group& g : fam) fixpoint.push_back(mk_D(g, mk_Cd(fam, phi)));
      emit(mk_implies(mk_Cd(fam, phi), mk_and_all(fixpoint)));
      std::vector<Formula> everyone;
      for (const Group& g : fam) everyone.push_back(mk_D(g, phi));
      emit(mk_implies(mk_Cd(fam, mk_implies(phi, mk_and_all(everyone))),
                      mk_implies(phi, mk_Cd(fam, phi))));
      emit(mk_implies(mk_not(mk_Cd(fam, phi)), mk_Cd(fam, mk_not(mk_Cd(fam, phi)))));
    }
    if (want("reduction")) {
      ReadingMap alpha = fx.random_map();
      emit(mk_iff(mk_semipub(alpha, mk_atom("p")), mk_atom("p")));
      emit(mk_iff(mk_semipub(alpha, mk_not(phi)), mk_not(mk_semipub(alpha, phi))));
      emit(mk_iff(mk_semipub(alpha, mk_and(phi, psi)),
                  mk_and(mk_semipub(alpha, phi), mk_semipub(alpha, psi))));
      emit(mk_iff(mk_semipub(alpha, mk_comp(B, C)),
                  mk_comp(alpha.read_set(B), alpha.read_set(C))));
      emit(mk_iff(mk_semipub(alpha, mk_D(B, phi)),
                  mk_D(alpha.read_set(B), mk_semipub(alpha, phi))));
      std::vector<Group> lifted;
      for (const Group& g : fam) lifted.push_back(alpha.read_set(g));
      emit(mk_iff(mk_semipub(alpha, mk_Cd(fam, phi)),
                  mk_Cd(GroupFamily(std::move(lifted)), mk_semipub(alpha, phi))));
      // Public-sharing and resolution special cases.
      emit(mk_iff(mk_semipub(ReadingMap::pub(C), mk_D(B, phi)),
                  mk_D(B.union_with(C), mk_semipub(ReadingMap::pub(C), phi))));
      Group res_target = B.intersects(C) ? B.union_with(C) : B;
      emit(mk_iff(mk_semipub(ReadingMap::res(C), mk_D(B, phi)),
                  mk_D(res_target, mk_semipub(ReadingMap::res(C), phi))));
    }
    if (want("composition")) {
      ReadingMap alpha = fx.random_map();
      ReadingMap beta = fx.random_map();
      emit(mk_iff(mk_semipub(alpha, mk_semipub(beta, phi)),
                  mk_semipub(compose_reading(alpha, beta, agents), phi)));
      emit(mk_iff(mk_semipub(ReadingMap::pub(B), mk_semipub(ReadingMap::pub(C), phi)),
                  mk_semipub(ReadingMap::pub(B.union_with(C)), phi)));
    }
  }
  return out;
}

}  // namespace cdk

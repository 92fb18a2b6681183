#include "cdk/closure.hpp"

#include <algorithm>

#include "cdk/errors.hpp"
#include "cdk/printer.hpp"
#include "cdk/pseudo.hpp"

namespace cdk {

FLClosure::FLClosure(const Formula& seed, Group universe, std::size_t cap)
    : seed_(desugar(seed)), universe_(std::move(universe)) {
  if (!is_static(seed_))
    throw FragmentError("closure is defined for static formulas; reduce first");
  if (universe_.empty()) throw SemanticError("closure needs a nonempty agent universe");
  if (!agents_of(seed_).empty() && !agents_of(seed_).subset_of(universe_))
    throw SemanticError("formula mentions agents outside the declared universe");

  FormulaSet members = subformulas(seed_);

  std::vector<Group> groups = all_nonempty_subgroups(universe_);
  for (const auto& b : groups)
    for (const auto& c : groups) members.insert(mk_comp(b, c));

  // D_C-unfoldings of non-singleton Cd members. The wrappers have
  // singleton families, so this cannot cascade.
  std::vector<Formula> wrappers;
  for (const auto& f : members)
    if (f.kind() == FKind::Cd && !f->family.is_singleton())
      for (const auto& c : groups) wrappers.push_back(mk_D(c, f));
  for (auto& w : wrappers) members.insert(desugar(w));

  std::vector<Formula> negs;
  negs.reserve(members.size());
  for (const auto& f : members) negs.push_back(single_negation(f));
  for (auto& n : negs) members.insert(n);

  if (members.size() > cap)
    throw ResourceError("closure has " + std::to_string(members.size()) +
                        " members, over the cap of " + std::to_string(cap));

  members_.assign(members.begin(), members.end());
  std::sort(members_.begin(), members_.end(), [](const Formula& a, const Formula& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return render_formula(a) < render_formula(b);
  });

  std::vector<Formula> props, comps, cds;
  for (const auto& f : members_) {
    switch (f.kind()) {
      case FKind::Atom:
        props.push_back(f);
        break;
      case FKind::Comp:
        comps.push_back(f);
        break;
      case FKind::Cd:
        cds.push_back(f);
        break;
      default:
        break;
    }
  }
  generators_.reserve(props.size() + comps.size() + cds.size());
  generators_.insert(generators_.end(), props.begin(), props.end());
  generators_.insert(generators_.end(), comps.begin(), comps.end());
  generators_.insert(generators_.end(), cds.begin(), cds.end());
}

}  // namespace cdk

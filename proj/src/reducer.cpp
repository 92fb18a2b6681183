#include "cdk/reducer.hpp"

#include "cdk/errors.hpp"

namespace cdk {

namespace {

constexpr std::size_t kStepBudget = std::size_t{1} << 24;

class Rewriter {
 public:
  Rewriter(const EventRegistry& registry, ReduceStats* stats)
      : registry_(registry), stats_(stats) {}

  Formula rewrite(const Formula& f) {
    const FormulaNode& n = f.node();
    switch (n.kind) {
      case FKind::True:
      case FKind::False:
      case FKind::Atom:
      case FKind::Comp:
        return f;
      case FKind::Not: {
        Formula l = rewrite(n.lhs);
        return l == n.lhs ? f : mk_not(l);
      }
      case FKind::And:
      case FKind::Or:
      case FKind::Implies:
      case FKind::Iff: {
        Formula l = rewrite(n.lhs), r = rewrite(n.rhs);
        if (l == n.lhs && r == n.rhs) return f;
        switch (n.kind) {
          case FKind::And: return mk_and(l, r);
          case FKind::Or: return mk_or(l, r);
          case FKind::Implies: return mk_implies(l, r);
          default: return mk_iff(l, r);
        }
      }
      case FKind::K: {
        Formula l = rewrite(n.lhs);
        return l == n.lhs ? f : mk_K(n.agent, l);
      }
      case FKind::D: {
        Formula l = rewrite(n.lhs);
        return l == n.lhs ? f : mk_D(n.group, l);
      }
      case FKind::C: {
        Formula l = rewrite(n.lhs);
        return l == n.lhs ? f : mk_C(n.group, l);
      }
      case FKind::Cd: {
        Formula l = rewrite(n.lhs);
        return l == n.lhs ? f : mk_Cd(n.family, l);
      }
      case FKind::SemiPub:
        return push_semipub(n.rmap, rewrite(n.lhs));
      case FKind::Event: {
        auto it = registry_.find(n.name);
        if (it == registry_.end()) throw SemanticError("unknown event model: " + n.name);
        return push_event(*it->second, it->second->event_index(n.name2), rewrite(n.lhs));
      }
    }
    return f;
  }

 private:
  void step() {
    if (stats_) ++stats_->steps;
    if (++steps_ > kStepBudget)
      throw InternalError("reduction exceeded its step budget; rewriting diverged");
  }

  // [!α]ψ for static ψ. Updates are total and deterministic, so the box
  // commutes with every Boolean connective.
  Formula push_semipub(const ReadingMap& alpha, const Formula& body) {
    step();
    const FormulaNode& n = body.node();
    switch (n.kind) {
      case FKind::True:
      case FKind::False:
      case FKind::Atom:
        return body;
      case FKind::Comp:
        return mk_comp(alpha.read_set(n.group), alpha.read_set(n.group2));
      case FKind::Not:
        return mk_not(push_semipub(alpha, n.lhs));
      case FKind::And:
        return mk_and(push_semipub(alpha, n.lhs), push_semipub(alpha, n.rhs));
      case FKind::Or:
        return mk_or(push_semipub(alpha, n.lhs), push_semipub(alpha, n.rhs));
      case FKind::Implies:
        return mk_implies(push_semipub(alpha, n.lhs), push_semipub(alpha, n.rhs));
      case FKind::Iff:
        return mk_iff(push_semipub(alpha, n.lhs), push_semipub(alpha, n.rhs));
      case FKind::K:
        return mk_D(alpha.read(n.agent), push_semipub(alpha, n.lhs));
      case FKind::D:
        return mk_D(alpha.read_set(n.group), push_semipub(alpha, n.lhs));
      case FKind::C: {
        std::vector<Group> lifted;
        bool untouched = true;
        for (Sym b : n.group) {
          Group g = alpha.read(b);
          if (g.size() != 1) untouched = false;
          lifted.push_back(std::move(g));
        }
        Formula inner = push_semipub(alpha, n.lhs);
        if (untouched) return mk_C(n.group, std::move(inner));
        return mk_Cd(GroupFamily(std::move(lifted)), std::move(inner));
      }
      case FKind::Cd: {
        std::vector<Group> lifted;
        for (const auto& g : n.family) lifted.push_back(alpha.read_set(g));
        return mk_Cd(GroupFamily(std::move(lifted)), push_semipub(alpha, n.lhs));
      }
      case FKind::SemiPub:
      case FKind::Event:
        throw InternalError("push_semipub received a dynamic body");
    }
    return body;
  }

  // [e]ψ for static ψ in the D-fragment.
  Formula push_event(const ReadingEventModel& em, std::size_t e, const Formula& body) {
    step();
    const FormulaNode& n = body.node();
    switch (n.kind) {
      case FKind::True:
      case FKind::False:
      case FKind::Atom:
        return body;
      case FKind::Comp: {
        // Side condition: every event B considers possible here, C does too.
        Partition rb = em.group_rel(n.group);
        Partition rc = em.group_rel(n.group2);
        for (std::size_t f = 0; f < em.num_events(); ++f)
          if (rb.same(f, e) && !rc.same(f, e)) return mk_false();
        return mk_comp(em.reads(e).read_set(n.group), em.reads(e).read_set(n.group2));
      }
      case FKind::Not:
        return mk_not(push_event(em, e, n.lhs));
      case FKind::And:
        return mk_and(push_event(em, e, n.lhs), push_event(em, e, n.rhs));
      case FKind::Or:
        return mk_or(push_event(em, e, n.lhs), push_event(em, e, n.rhs));
      case FKind::Implies:
        return mk_implies(push_event(em, e, n.lhs), push_event(em, e, n.rhs));
      case FKind::Iff:
        return mk_iff(push_event(em, e, n.lhs), push_event(em, e, n.rhs));
      case FKind::K:
        return event_d_law(em, e, Group{n.agent}, n.lhs);
      case FKind::D:
        return event_d_law(em, e, n.group, n.lhs);
      case FKind::C:
        if (n.group.size() == 1) return event_d_law(em, e, n.group, n.lhs);
        throw FragmentError(
            "no reduction law for common knowledge after an arbitrary reading event");
      case FKind::Cd:
        if (n.family.is_singleton())
          return event_d_law(em, e, n.family.groups().front(), n.lhs);
        throw FragmentError(
            "no reduction law for common distributed knowledge after an arbitrary reading event");
      case FKind::SemiPub:
      case FKind::Event:
        throw InternalError("push_event received a dynamic body");
    }
    return body;
  }

  // [e]D_B φ  ->  conjunction of D_{e(B)}[f]φ over events f ~_B e.
  Formula event_d_law(const ReadingEventModel& em, std::size_t e, const Group& B,
                      const Formula& body) {
    Partition rb = em.group_rel(B);
    Group read = em.reads(e).read_set(B);
    std::vector<Formula> conjuncts;
    for (std::size_t f = 0; f < em.num_events(); ++f)
      if (rb.same(f, e)) conjuncts.push_back(mk_D(read, push_event(em, f, body)));
    Formula out = conjuncts.front();
    for (std::size_t i = 1; i < conjuncts.size(); ++i) out = mk_and(out, conjuncts[i]);
    return out;
  }

  const EventRegistry& registry_;
  ReduceStats* stats_;
  std::size_t steps_ = 0;
};

bool contains_kind(const Formula& f, FKind k) {
  if (f.kind() == k) return true;
  if (f->lhs.valid() && contains_kind(f->lhs, k)) return true;
  if (f->rhs.valid() && contains_kind(f->rhs, k)) return true;
  return false;
}

}  // namespace

Formula reduce(const Formula& f, const EventRegistry& registry, ReduceStats* stats) {
  Rewriter rw(registry, stats);
  return rw.rewrite(f);
}

Formula reduce_semipublic(const Formula& f, ReduceStats* stats) {
  if (contains_kind(f, FKind::Event))
    throw FragmentError("event modality present; use reduce() with a registry");
  EventRegistry empty;
  Rewriter rw(empty, stats);
  return rw.rewrite(f);
}

Formula reduce_event(const Formula& f, const EventRegistry& registry, ReduceStats* stats) {
  if (contains_kind(f, FKind::SemiPub))
    throw FragmentError("semi-public modality present; use reduce()");
  Rewriter rw(registry, stats);
  return rw.rewrite(f);
}

}  // namespace cdk

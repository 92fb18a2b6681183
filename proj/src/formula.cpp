#include "cdk/formula.hpp"

#include <functional>

namespace cdk {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::size_t hash_group(const Group& g) {
  std::size_t h = 0x9e37;
  for (Sym a : g) h = mix(h, std::hash<std::string>()(name_of(a)));
  return h;
}

std::size_t hash_family(const GroupFamily& f) {
  std::size_t h = 0xfa411;
  for (const auto& g : f) h = mix(h, hash_group(g));
  return h;
}

std::size_t hash_rmap(const ReadingMap& m) {
  std::size_t h = mix(0x4ead, static_cast<std::size_t>(m.form()));
  for (const auto& g : m.form_groups()) h = mix(h, hash_group(g));
  for (const auto& [a, g] : m.entries()) {
    h = mix(h, std::hash<std::string>()(name_of(a)));
    h = mix(h, hash_group(g));
  }
  return h;
}

Formula finish(FormulaNode n) {
  std::size_t h = mix(0xc0ffee, static_cast<std::size_t>(n.kind));
  h = mix(h, std::hash<std::string>()(n.name));
  h = mix(h, std::hash<std::string>()(n.name2));
  h = mix(h, std::hash<std::string>()(name_of(n.agent)));
  h = mix(h, hash_group(n.group));
  h = mix(h, hash_group(n.group2));
  h = mix(h, hash_family(n.family));
  h = mix(h, hash_rmap(n.rmap));
  std::size_t size = 1;
  if (n.lhs.valid()) {
    h = mix(h, n.lhs.hash());
    size += n.lhs.size();
  }
  if (n.rhs.valid()) {
    h = mix(h, n.rhs.hash());
    size += n.rhs.size();
  }
  n.hash = h;
  n.size = size;
  return Formula(std::make_shared<const FormulaNode>(std::move(n)));
}

}  // namespace

FKind Formula::kind() const { return node_->kind; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const FormulaNode& x = *a.node_;
  const FormulaNode& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind) return false;
  if (x.name != y.name || x.name2 != y.name2 || x.agent != y.agent) return false;
  if (x.group != y.group || x.group2 != y.group2 || x.family != y.family) return false;
  if (x.rmap != y.rmap) return false;
  if (x.lhs.valid() != y.lhs.valid() || x.rhs.valid() != y.rhs.valid()) return false;
  if (x.lhs.valid() && !(x.lhs == y.lhs)) return false;
  if (x.rhs.valid() && !(x.rhs == y.rhs)) return false;
  return true;
}

Formula mk_true() {
  FormulaNode n;
  n.kind = FKind::True;
  return finish(std::move(n));
}

Formula mk_false() {
  FormulaNode n;
  n.kind = FKind::False;
  return finish(std::move(n));
}

Formula mk_atom(const std::string& name) {
  FormulaNode n;
  n.kind = FKind::Atom;
  n.name = name;
  return finish(std::move(n));
}

Formula mk_comp(Group b, Group c) {
  FormulaNode n;
  n.kind = FKind::Comp;
  n.group = require_nonempty(std::move(b), "comparative");
  n.group2 = require_nonempty(std::move(c), "comparative");
  return finish(std::move(n));
}

Formula mk_not(Formula f) {
  FormulaNode n;
  n.kind = FKind::Not;
  n.lhs = std::move(f);
  return finish(std::move(n));
}

static Formula binary(FKind k, Formula f, Formula g) {
  FormulaNode n;
  n.kind = k;
  n.lhs = std::move(f);
  n.rhs = std::move(g);
  return finish(std::move(n));
}

Formula mk_and(Formula f, Formula g) { return binary(FKind::And, std::move(f), std::move(g)); }
Formula mk_or(Formula f, Formula g) { return binary(FKind::Or, std::move(f), std::move(g)); }
Formula mk_implies(Formula f, Formula g) {
  return binary(FKind::Implies, std::move(f), std::move(g));
}
Formula mk_iff(Formula f, Formula g) { return binary(FKind::Iff, std::move(f), std::move(g)); }

Formula mk_K(Sym a, Formula f) {
  FormulaNode n;
  n.kind = FKind::K;
  n.agent = a;
  n.lhs = std::move(f);
  return finish(std::move(n));
}

Formula mk_D(Group b, Formula f) {
  FormulaNode n;
  n.kind = FKind::D;
  n.group = require_nonempty(std::move(b), "D operator");
  n.lhs = std::move(f);
  return finish(std::move(n));
}

Formula mk_C(Group b, Formula f) {
  FormulaNode n;
  n.kind = FKind::C;
  n.group = require_nonempty(std::move(b), "C operator");
  n.lhs = std::move(f);
  return finish(std::move(n));
}

Formula mk_Cd(GroupFamily fam, Formula f) {
  if (fam.empty()) throw SemanticError("empty family in Cd operator");
  FormulaNode n;
  n.kind = FKind::Cd;
  n.family = std::move(fam);
  n.lhs = std::move(f);
  return finish(std::move(n));
}

Formula mk_semipub(ReadingMap alpha, Formula f) {
  FormulaNode n;
  n.kind = FKind::SemiPub;
  n.rmap = std::move(alpha);
  n.lhs = std::move(f);
  return finish(std::move(n));
}

Formula mk_event(const std::string& model, const std::string& event, Formula f) {
  FormulaNode n;
  n.kind = FKind::Event;
  n.name = model;
  n.name2 = event;
  n.lhs = std::move(f);
  return finish(std::move(n));
}

Formula mk_and_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return mk_true();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = mk_and(out, fs[i]);
  return out;
}

Formula single_negation(const Formula& f) {
  if (f.kind() == FKind::Not) return f->lhs;
  return mk_not(f);
}

Formula desugar(const Formula& f) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FKind::True:
    case FKind::False:
    case FKind::Atom:
    case FKind::Comp:
      return f;
    case FKind::Not: {
      Formula l = desugar(n.lhs);
      return l == n.lhs ? f : mk_not(l);
    }
    case FKind::And: {
      Formula l = desugar(n.lhs), r = desugar(n.rhs);
      return (l == n.lhs && r == n.rhs) ? f : mk_and(l, r);
    }
    case FKind::Or: {
      Formula l = desugar(n.lhs), r = desugar(n.rhs);
      return mk_not(mk_and(mk_not(l), mk_not(r)));
    }
    case FKind::Implies: {
      Formula l = desugar(n.lhs), r = desugar(n.rhs);
      return mk_not(mk_and(l, mk_not(r)));
    }
    case FKind::Iff: {
      Formula l = desugar(n.lhs), r = desugar(n.rhs);
      return mk_and(mk_not(mk_and(l, mk_not(r))), mk_not(mk_and(r, mk_not(l))));
    }
    case FKind::K:
      return mk_Cd(GroupFamily{Group{n.agent}}, desugar(n.lhs));
    case FKind::D:
      return mk_Cd(GroupFamily{n.group}, desugar(n.lhs));
    case FKind::C: {
      std::vector<Group> singletons;
      for (Sym a : n.group) singletons.push_back(Group{a});
      return mk_Cd(GroupFamily(std::move(singletons)), desugar(n.lhs));
    }
    case FKind::Cd: {
      Formula l = desugar(n.lhs);
      return l == n.lhs ? f : mk_Cd(n.family, l);
    }
    case FKind::SemiPub: {
      Formula l = desugar(n.lhs);
      return l == n.lhs ? f : mk_semipub(n.rmap, l);
    }
    case FKind::Event: {
      Formula l = desugar(n.lhs);
      return l == n.lhs ? f : mk_event(n.name, n.name2, l);
    }
  }
  return f;
}

bool is_desugared(const Formula& f) {
  switch (f.kind()) {
    case FKind::Or:
    case FKind::Implies:
    case FKind::Iff:
    case FKind::K:
    case FKind::D:
    case FKind::C:
      return false;
    default:
      break;
  }
  if (f->lhs.valid() && !is_desugared(f->lhs)) return false;
  if (f->rhs.valid() && !is_desugared(f->rhs)) return false;
  return true;
}

bool is_static(const Formula& f) {
  if (f.kind() == FKind::SemiPub || f.kind() == FKind::Event) return false;
  if (f->lhs.valid() && !is_static(f->lhs)) return false;
  if (f->rhs.valid() && !is_static(f->rhs)) return false;
  return true;
}

static void collect_subformulas(const Formula& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  if (f->lhs.valid()) collect_subformulas(f->lhs, out);
  if (f->rhs.valid()) collect_subformulas(f->rhs, out);
}

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  collect_subformulas(f, out);
  return out;
}

static void collect_agents(const Formula& f, std::vector<Sym>& out) {
  const FormulaNode& n = f.node();
  auto add_group = [&](const Group& g) {
    for (Sym a : g) out.push_back(a);
  };
  switch (n.kind) {
    case FKind::Comp:
      add_group(n.group);
      add_group(n.group2);
      break;
    case FKind::K:
      out.push_back(n.agent);
      break;
    case FKind::D:
    case FKind::C:
      add_group(n.group);
      break;
    case FKind::Cd:
      for (const auto& g : n.family) add_group(g);
      break;
    case FKind::SemiPub:
      add_group(n.rmap.mentioned());
      break;
    default:
      break;
  }
  if (n.lhs.valid()) collect_agents(n.lhs, out);
  if (n.rhs.valid()) collect_agents(n.rhs, out);
}

Group agents_of(const Formula& f) {
  std::vector<Sym> ms;
  collect_agents(f, ms);
  return Group(std::move(ms));
}

static void collect_event_refs(const Formula& f, std::vector<std::string>& out) {
  if (f.kind() == FKind::Event) out.push_back(f->name);
  if (f->lhs.valid()) collect_event_refs(f->lhs, out);
  if (f->rhs.valid()) collect_event_refs(f->rhs, out);
}

std::vector<std::string> event_refs(const Formula& f) {
  std::vector<std::string> out;
  collect_event_refs(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cdk

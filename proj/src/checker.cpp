#include "cdk/checker.hpp"

#include "cdk/errors.hpp"
#include "cdk/update.hpp"

namespace cdk {

namespace {

// Product states were materialized s-major: index = s * |E| + e.
std::size_t product_index(std::size_t state, std::size_t event, std::size_t num_events) {
  return state * num_events + event;
}

}  // namespace

ModelPtr Checker::apply_semipub(const ModelPtr& m, const ReadingMap& alpha) {
  auto key = std::make_pair(m->uid(), "!" + alpha.to_string());
  auto it = update_cache_.find(key);
  if (it != update_cache_.end()) return it->second;
  ModelPtr out = semi_public_update(*m, alpha);
  update_cache_.emplace(std::move(key), out);
  return out;
}

ModelPtr Checker::apply_event(const ModelPtr& m, const std::string& model_id) {
  auto reg = registry_.find(model_id);
  if (reg == registry_.end()) throw SemanticError("unknown event model: " + model_id);
  auto key = std::make_pair(m->uid(), "@" + model_id);
  auto it = update_cache_.find(key);
  if (it != update_cache_.end()) return it->second;
  ModelPtr out = product_update(*m, *reg->second);
  update_cache_.emplace(std::move(key), out);
  return out;
}

bool Checker::check(const ModelPtr& m, const std::string& state, const Formula& f) {
  return check_at(m, m->state_index(state), f);
}

bool Checker::check_at(const ModelPtr& m, std::size_t state, const Formula& f) {
  if (state >= m->num_states()) throw SemanticError("state index out of range");
  if (!agents_of(f).empty() && !agents_of(f).subset_of(m->universe()))
    throw SemanticError("formula mentions agents outside the model universe");
  return check_rec(m, state, desugar(f));
}

bool Checker::check_rec(const ModelPtr& m, std::size_t state, const Formula& f) {
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FKind::True:
      return true;
    case FKind::False:
      return false;
    case FKind::Atom:
      return m->atom_true(state, n.name);
    case FKind::Comp: {
      const Partition& rb = m->group_rel(n.group);
      const Partition& rc = m->group_rel(n.group2);
      for (std::size_t t = 0; t < m->num_states(); ++t)
        if (rb.same(state, t) && !rc.same(state, t)) return false;
      return true;
    }
    case FKind::Not:
      return !check_rec(m, state, n.lhs);
    case FKind::And:
      return check_rec(m, state, n.lhs) && check_rec(m, state, n.rhs);
    case FKind::Cd: {
      Partition closure = m->family_rel(n.family);
      for (std::size_t t = 0; t < m->num_states(); ++t)
        if (closure.same(state, t) && !check_rec(m, t, n.lhs)) return false;
      return true;
    }
    case FKind::SemiPub:
      // Same state set, so the index carries over.
      return check_rec(apply_semipub(m, n.rmap), state, n.lhs);
    case FKind::Event: {
      ModelPtr prod = apply_event(m, n.name);
      std::size_t e = registry_.at(n.name)->event_index(n.name2);
      return check_rec(prod, product_index(state, e, registry_.at(n.name)->num_events()), n.lhs);
    }
    default:
      // Sugar was removed by desugar() above.
      throw InternalError("check_rec reached sugar node");
  }
}

Bits Checker::extension(const ModelPtr& m, const Formula& f) {
  if (!agents_of(f).empty() && !agents_of(f).subset_of(m->universe()))
    throw SemanticError("formula mentions agents outside the model universe");
  return extension_rec(m, desugar(f));
}

Bits Checker::extension_rec(const ModelPtr& m, const Formula& f) {
  auto key = std::make_pair(m->uid(), f.hash());
  auto hit = extension_cache_.find(key);
  if (hit != extension_cache_.end()) return hit->second;

  const FormulaNode& n = f.node();
  const std::size_t ns = m->num_states();
  Bits out(ns);
  switch (n.kind) {
    case FKind::True:
      out = Bits(ns, true);
      break;
    case FKind::False:
      break;
    case FKind::Atom:
      out = m->atom_extension(n.name);
      break;
    case FKind::Comp: {
      // A whole ∼_B-block either satisfies B <= C or misses it.
      const Partition& rb = m->group_rel(n.group);
      const Partition& rc = m->group_rel(n.group2);
      for (const auto& block : rb.block_lists()) {
        bool inside_one_c_block = true;
        for (std::size_t i = 1; i < block.size(); ++i)
          if (!rc.same(block[0], block[i])) {
            inside_one_c_block = false;
            break;
          }
        if (inside_one_c_block)
          for (std::size_t s : block) out.set(s);
      }
      break;
    }
    case FKind::Not:
      out = ~extension_rec(m, n.lhs);
      break;
    case FKind::And:
      out = extension_rec(m, n.lhs) & extension_rec(m, n.rhs);
      break;
    case FKind::Cd: {
      Bits body = extension_rec(m, n.lhs);
      Partition closure = m->family_rel(n.family);
      for (const auto& block : closure.block_lists()) {
        bool all_true = true;
        for (std::size_t s : block)
          if (!body.test(s)) {
            all_true = false;
            break;
          }
        if (all_true)
          for (std::size_t s : block) out.set(s);
      }
      break;
    }
    case FKind::SemiPub:
      out = extension_rec(apply_semipub(m, n.rmap), n.lhs);
      break;
    case FKind::Event: {
      ModelPtr prod = apply_event(m, n.name);
      std::size_t e = registry_.at(n.name)->event_index(n.name2);
      std::size_t ne = registry_.at(n.name)->num_events();
      Bits inner = extension_rec(prod, n.lhs);
      for (std::size_t s = 0; s < ns; ++s)
        if (inner.test(product_index(s, e, ne))) out.set(s);
      break;
    }
    default:
      throw InternalError("extension_rec reached sugar node");
  }

  extension_cache_.emplace(std::move(key), out);
  return out;
}

bool Checker::valid_on(const ModelPtr& m, const Formula& f) { return extension(m, f).all(); }

namespace {

Bits extension_pseudo_rec(const PseudoModel& pm, const Formula& f) {
  const FormulaNode& n = f.node();
  const std::size_t ns = pm.num_states();
  Bits out(ns);
  switch (n.kind) {
    case FKind::True:
      return Bits(ns, true);
    case FKind::False:
      return out;
    case FKind::Atom:
      return pm.atom_extension(n.name);
    case FKind::Comp: {
      for (std::size_t s = 0; s < ns; ++s)
        if (pm.comp_true(s, n.group, n.group2)) out.set(s);
      return out;
    }
    case FKind::Not:
      return ~extension_pseudo_rec(pm, n.lhs);
    case FKind::And:
      return extension_pseudo_rec(pm, n.lhs) & extension_pseudo_rec(pm, n.rhs);
    case FKind::Cd: {
      Bits body = extension_pseudo_rec(pm, n.lhs);
      Partition closure = pm.family_rel(n.family);
      for (const auto& block : closure.block_lists()) {
        bool all_true = true;
        for (std::size_t s : block)
          if (!body.test(s)) {
            all_true = false;
            break;
          }
        if (all_true)
          for (std::size_t s : block) out.set(s);
      }
      return out;
    }
    case FKind::SemiPub:
    case FKind::Event:
      throw SemanticError("dynamic operator cannot be evaluated on a pseudo-model");
    default:
      throw InternalError("extension_pseudo reached sugar node");
  }
}

}  // namespace

Bits extension_pseudo(const PseudoModel& pm, const Formula& f) {
  return extension_pseudo_rec(pm, desugar(f));
}

bool check_pseudo(const PseudoModel& pm, std::size_t state, const Formula& f) {
  if (state >= pm.num_states()) throw SemanticError("state index out of range");
  return extension_pseudo(pm, f).test(state);
}

}  // namespace cdk

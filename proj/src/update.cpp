#include "cdk/update.hpp"

#include <cassert>

#include "cdk/errors.hpp"

namespace cdk {

ModelPtr semi_public_update(const EpistemicModel& m, const ReadingMap& alpha) {
  if (!alpha.mentioned().empty() && !alpha.mentioned().subset_of(m.universe()))
    throw SemanticError("reading map mentions agents outside the model universe: " +
                        alpha.to_string());
  std::map<Sym, Partition> rels;
  for (Sym b : m.universe()) rels.emplace(b, m.group_rel(alpha.read(b)));
  return std::make_shared<EpistemicModel>(m.universe(), m.states(), std::move(rels),
                                          m.valuation());
}

std::string product_state_name(const std::string& state, const std::string& event) {
  return state + "@" + event;
}

ModelPtr product_update(const EpistemicModel& m, const ReadingEventModel& em) {
  if (m.universe() != em.universe())
    throw SemanticError("product update: mismatched agent universes");
  const std::size_t ns = m.num_states(), ne = em.num_events();

  std::vector<std::string> states;
  states.reserve(ns * ne);
  EpistemicModel::Provenance prov;
  prov.origin.reserve(ns * ne);
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t e = 0; e < ne; ++e) {
      states.push_back(product_state_name(m.state_name(s), em.event_name(e)));
      prov.origin.emplace_back(s, e);
    }
  for (std::size_t e = 0; e < ne; ++e) prov.event_index.emplace(em.event_name(e), e);

  std::map<Sym, Partition> rels;
  for (Sym a : m.universe()) {
    const Partition& erel = em.relation(a);
    std::vector<int> block_of(ns * ne, -1);
    int next_block = 0;
    std::map<std::pair<int, int>, int> ids;
    for (std::size_t e = 0; e < ne; ++e) {
      // Events an agent cannot tell apart carry the same read set, so the
      // state-side relation only depends on the event's block. Checked by
      // the event-model invariant; assert here as well.
      Partition srel = m.group_rel(em.reads(e).read(a));
      for (std::size_t e2 = 0; e2 < ne; ++e2)
        if (erel.same(e, e2)) assert(em.reads(e).read(a) == em.reads(e2).read(a));
      for (std::size_t s = 0; s < ns; ++s) {
        auto key = std::make_pair(srel.block_of(s), erel.block_of(e));
        auto [it, fresh] = ids.emplace(key, next_block);
        if (fresh) ++next_block;
        block_of[s * ne + e] = it->second;
      }
    }
    rels.emplace(a, Partition(std::move(block_of), next_block));
  }

  std::map<std::string, Bits> valuation;
  for (const auto& [prop, ext] : m.valuation()) {
    Bits lifted(ns * ne);
    for (std::size_t s = 0; s < ns; ++s)
      if (ext.test(s))
        for (std::size_t e = 0; e < ne; ++e) lifted.set(s * ne + e);
    valuation.emplace(prop, std::move(lifted));
  }

  std::shared_ptr<EpistemicModel> out = std::make_shared<EpistemicModel>(
      m.universe(), std::move(states), std::move(rels), std::move(valuation));
  out->set_provenance(std::move(prov));
  return out;
}

}  // namespace cdk

#include "cdk/unravel.hpp"

#include "cdk/errors.hpp"

namespace cdk {

Forest unravel(const PseudoModel& pm, std::size_t root, std::size_t depth) {
  if (root >= pm.num_states()) throw SemanticError("unravel: root state out of range");

  std::vector<Group> groups;
  for (const auto& [g, p] : pm.grel()) groups.push_back(g);

  Forest out;
  out.histories.push_back(History{{root}, {}});
  out.last.push_back(root);

  std::size_t level_begin = 0, level_end = 1;
  for (std::size_t d = 0; d < depth; ++d) {
    for (std::size_t h = level_begin; h < level_end; ++h) {
      std::size_t tail = out.last[h];
      for (const auto& B : groups) {
        const Partition& rel = pm.group_rel(B);
        for (std::size_t s = 0; s < pm.num_states(); ++s) {
          if (!rel.same(tail, s)) continue;
          History child = out.histories[h];
          child.states.push_back(s);
          child.labels.push_back(B);
          out.histories.push_back(std::move(child));
          out.last.push_back(s);
          out.one_step.push_back({h, out.histories.size() - 1, B});
        }
      }
    }
    level_begin = level_end;
    level_end = out.histories.size();
  }

  // h ∼̃→_B h' collects one-step edges whose label is at least as
  // knowledgeable as B at the edge's source.
  for (const auto& e : out.one_step) {
    std::size_t src = out.last[e.from];
    for (const auto& B : groups) {
      auto it = pm.comp_val().find({e.label, B});
      if (it != pm.comp_val().end() && it->second.test(src))
        out.tilde.push_back({e.from, e.to, B});
    }
  }

  return out;
}

}  // namespace cdk

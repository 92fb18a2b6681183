#include "cdk/reading.hpp"

#include <set>

namespace cdk {

ReadingMap as_table(const ReadingMap& m, const Group& universe) {
  std::map<std::string, Group> entries;
  for (Sym a : universe) entries[name_of(a)] = m.read(a);
  return ReadingMap::table(std::move(entries));
}

ReadingMap compose_reading(const ReadingMap& alpha, const ReadingMap& beta,
                           const Group& universe) {
  if (!alpha.mentioned().subset_of(universe) || !beta.mentioned().subset_of(universe))
    throw SemanticError("compose_reading: maps mention agents outside the universe");
  std::map<std::string, Group> entries;
  for (Sym a : universe) entries[name_of(a)] = alpha.read_set(beta.read(a));
  return ReadingMap::table(std::move(entries));
}

std::vector<ReadingMap> reading_closure(const std::vector<ReadingMap>& maps,
                                        const Group& universe) {
  std::set<ReadingMap> closed;
  for (const auto& m : maps) closed.insert(as_table(m, universe));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ReadingMap> snapshot(closed.begin(), closed.end());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot) {
        ReadingMap c = compose_reading(a, b, universe);
        if (closed.insert(c).second) grew = true;
      }
  }
  return std::vector<ReadingMap>(closed.begin(), closed.end());
}

}  // namespace cdk

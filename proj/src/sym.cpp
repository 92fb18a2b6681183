#include "cdk/sym.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace cdk {

namespace {

struct Table {
  std::shared_mutex mutex;
  std::deque<std::string> names{""};  // id 0 reserved for the empty symbol
  std::unordered_map<std::string_view, uint32_t> index;
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

Sym intern(std::string_view name) {
  Table& t = table();
  {
    std::shared_lock lock(t.mutex);
    auto it = t.index.find(name);
    if (it != t.index.end()) return Sym(it->second);
  }
  std::unique_lock lock(t.mutex);
  auto it = t.index.find(name);
  if (it != t.index.end()) return Sym(it->second);
  t.names.emplace_back(name);
  uint32_t id = static_cast<uint32_t>(t.names.size() - 1);
  t.index.emplace(t.names.back(), id);
  return Sym(id);
}

const std::string& name_of(Sym s) {
  Table& t = table();
  std::shared_lock lock(t.mutex);
  return t.names[s.id()];
}

bool sym_less(Sym a, Sym b) {
  if (a == b) return false;
  return name_of(a) < name_of(b);
}

}  // namespace cdk

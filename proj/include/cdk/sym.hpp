#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cdk {

// Interned identifier (agent names, mostly). Cheap to copy and compare;
// the backing table is process-wide and safe for concurrent readers.
class Sym {
 public:
  Sym() : id_(0) {}
  explicit Sym(uint32_t id) : id_(id) {}
  uint32_t id() const { return id_; }
  friend bool operator==(Sym a, Sym b) { return a.id_ == b.id_; }
  friend bool operator!=(Sym a, Sym b) { return a.id_ != b.id_; }
  // Intern-order comparison, for container internals only; use sym_less
  // wherever the order must be stable across runs.
  friend bool operator<(Sym a, Sym b) { return a.id_ < b.id_; }

 private:
  uint32_t id_;
};

Sym intern(std::string_view name);
const std::string& name_of(Sym s);

// Orders by name, so that sorted containers are deterministic across runs.
bool sym_less(Sym a, Sym b);

}  // namespace cdk

template <>
struct std::hash<cdk::Sym> {
  std::size_t operator()(cdk::Sym s) const noexcept { return s.id(); }
};

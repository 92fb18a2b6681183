#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "cdk/errors.hpp"
#include "cdk/sym.hpp"

namespace cdk {

// Nonempty set of agents, stored sorted by name. Groups appearing anywhere
// in a formula or model are canonical, so {b,a} and {a,b} coincide.
class Group {
 public:
  Group() = default;  // empty only as a transient; validate() before use
  explicit Group(std::vector<Sym> members) : members_(std::move(members)) { normalize(); }
  Group(std::initializer_list<Sym> members) : members_(members) { normalize(); }

  static Group parse_names(const std::vector<std::string>& names) {
    std::vector<Sym> ms;
    ms.reserve(names.size());
    for (const auto& n : names) ms.push_back(intern(n));
    return Group(std::move(ms));
  }

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Sym>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(Sym a) const {
    return std::binary_search(members_.begin(), members_.end(), a,
                              [](Sym x, Sym y) { return sym_less(x, y); });
  }
  bool subset_of(const Group& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end(), [](Sym x, Sym y) { return sym_less(x, y); });
  }
  bool intersects(const Group& other) const {
    for (Sym a : members_)
      if (other.contains(a)) return true;
    return false;
  }

  Group union_with(const Group& other) const {
    std::vector<Sym> ms = members_;
    ms.insert(ms.end(), other.members_.begin(), other.members_.end());
    return Group(std::move(ms));
  }
  Group with(Sym a) const {
    std::vector<Sym> ms = members_;
    ms.push_back(a);
    return Group(std::move(ms));
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) out += ',';
      out += name_of(members_[i]);
    }
    out += '}';
    return out;
  }
  // Key form used in pseudo-model documents: sorted comma-joined names.
  std::string key() const {
    std::string out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) out += ',';
      out += name_of(members_[i]);
    }
    return out;
  }

  friend bool operator==(const Group& a, const Group& b) { return a.members_ == b.members_; }
  friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }
  friend bool operator<(const Group& a, const Group& b) {
    return std::lexicographical_compare(
        a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
        [](Sym x, Sym y) { return sym_less(x, y); });
  }

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end(), [](Sym x, Sym y) { return sym_less(x, y); });
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }
  std::vector<Sym> members_;
};

inline Group require_nonempty(Group g, const char* where) {
  if (g.empty()) throw SemanticError(std::string("empty group in ") + where);
  return g;
}

// Nonempty set of nonempty groups, canonical (sorted, deduplicated).
class GroupFamily {
 public:
  GroupFamily() = default;
  explicit GroupFamily(std::vector<Group> groups) : groups_(std::move(groups)) {
    for (const auto& g : groups_)
      if (g.empty()) throw SemanticError("empty group in family");
    std::sort(groups_.begin(), groups_.end());
    groups_.erase(std::unique(groups_.begin(), groups_.end()), groups_.end());
  }
  GroupFamily(std::initializer_list<Group> groups) : GroupFamily(std::vector<Group>(groups)) {}

  bool empty() const { return groups_.empty(); }
  std::size_t size() const { return groups_.size(); }
  const std::vector<Group>& groups() const { return groups_; }
  auto begin() const { return groups_.begin(); }
  auto end() const { return groups_.end(); }

  bool is_singleton() const { return groups_.size() == 1; }

  Group member_union() const {
    Group u = groups_.front();
    for (std::size_t i = 1; i < groups_.size(); ++i) u = u.union_with(groups_[i]);
    return u;
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < groups_.size(); ++i) {
      if (i) out += ',';
      out += groups_[i].to_string();
    }
    out += '}';
    return out;
  }

  friend bool operator==(const GroupFamily& a, const GroupFamily& b) {
    return a.groups_ == b.groups_;
  }
  friend bool operator!=(const GroupFamily& a, const GroupFamily& b) { return !(a == b); }
  friend bool operator<(const GroupFamily& a, const GroupFamily& b) {
    return std::lexicographical_compare(a.groups_.begin(), a.groups_.end(), b.groups_.begin(),
                                        b.groups_.end());
  }

 private:
  std::vector<Group> groups_;
};

}  // namespace cdk

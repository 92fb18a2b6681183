#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdk/group.hpp"

namespace cdk {

// Who reads whose knowledge base during a semi-public event. Every agent
// always reads itself. The symbolic forms (pub/res/grp/share) are
// universe-polymorphic: they evaluate pointwise on any agent set. The
// table form lists entries verbatim, with unlisted agents reading only
// themselves.
class ReadingMap {
 public:
  enum class Form { Pub, Res, Grp, Share, Table };

  // Identity map (an empty table): placeholder default, every agent reads
  // only itself.
  ReadingMap() : form_(Form::Table) {}

  static ReadingMap pub(Group g) {
    ReadingMap m(Form::Pub);
    m.groups_.push_back(require_nonempty(std::move(g), "pub"));
    return m;
  }
  static ReadingMap res(Group g) {
    ReadingMap m(Form::Res);
    m.groups_.push_back(require_nonempty(std::move(g), "res"));
    return m;
  }
  static ReadingMap grp(std::vector<Group> gs) {
    if (gs.empty()) throw SemanticError("grp needs at least one group");
    ReadingMap m(Form::Grp);
    for (auto& g : gs) m.groups_.push_back(require_nonempty(std::move(g), "grp"));
    return m;
  }
  static ReadingMap share(Group readers, Group sources) {
    ReadingMap m(Form::Share);
    m.groups_.push_back(require_nonempty(std::move(readers), "share"));
    m.groups_.push_back(require_nonempty(std::move(sources), "share"));
    return m;
  }
  // Entries are kept as written (after inserting the reader itself);
  // agents without an entry read only themselves.
  static ReadingMap table(std::map<std::string, Group> entries) {
    ReadingMap m(Form::Table);
    for (auto& [name, g] : entries) {
      Sym a = intern(name);
      m.entries_.emplace_back(a, require_nonempty(g, "map").with(a));
    }
    std::sort(m.entries_.begin(), m.entries_.end(),
              [](const auto& x, const auto& y) { return sym_less(x.first, y.first); });
    return m;
  }
  static ReadingMap identity(const Group& universe) {
    std::map<std::string, Group> entries;
    entries[name_of(*universe.begin())] = Group{*universe.begin()};
    return table(std::move(entries));
  }

  Form form() const { return form_; }
  const std::vector<Group>& form_groups() const { return groups_; }
  const std::vector<std::pair<Sym, Group>>& entries() const { return entries_; }

  // α(a): the set of agents whose base a reads.
  Group read(Sym a) const {
    switch (form_) {
      case Form::Pub:
        return groups_[0].with(a);
      case Form::Res:
        return groups_[0].contains(a) ? groups_[0] : Group{a};
      case Form::Grp: {
        Group out{a};
        bool hit = false;
        for (const auto& g : groups_)
          if (g.contains(a)) {
            out = out.union_with(g);
            hit = true;
          }
        return hit ? out : Group{a};
      }
      case Form::Share:
        return groups_[0].contains(a) ? groups_[1].with(a) : Group{a};
      case Form::Table:
        for (const auto& [b, g] : entries_)
          if (b == a) return g;
        return Group{a};
    }
    return Group{a};
  }

  // α(B) := union of α(b) over b in B. Always contains B.
  Group read_set(const Group& B) const {
    Group out = read(*B.begin());
    for (auto it = std::next(B.begin()); it != B.end(); ++it)
      out = out.union_with(read(*it));
    return out;
  }

  // Agents this map mentions explicitly; callers validate them against a
  // model's universe before applying the map.
  Group mentioned() const {
    std::vector<Sym> ms;
    for (const auto& g : groups_)
      for (Sym a : g) ms.push_back(a);
    for (const auto& [a, g] : entries_) {
      ms.push_back(a);
      for (Sym b : g) ms.push_back(b);
    }
    return ms.empty() ? Group{} : Group(std::move(ms));
  }

  bool pointwise_equal(const ReadingMap& other, const Group& universe) const {
    for (Sym a : universe)
      if (read(a) != other.read(a)) return false;
    return true;
  }

  std::string to_string() const {
    switch (form_) {
      case Form::Pub:
        return "pub" + groups_[0].to_string();
      case Form::Res:
        return "res" + groups_[0].to_string();
      case Form::Grp: {
        std::string out = "grp(";
        for (std::size_t i = 0; i < groups_.size(); ++i) {
          if (i) out += ';';
          out += groups_[i].to_string();
        }
        return out + ")";
      }
      case Form::Share:
        return "share(" + groups_[0].to_string() + ":" + groups_[1].to_string() + ")";
      case Form::Table: {
        std::string out = "map(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
          if (i) out += ',';
          out += name_of(entries_[i].first) + ":" + entries_[i].second.to_string();
        }
        return out + ")";
      }
    }
    return "";
  }

  friend bool operator==(const ReadingMap& a, const ReadingMap& b) {
    return a.form_ == b.form_ && a.groups_ == b.groups_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const ReadingMap& a, const ReadingMap& b) { return !(a == b); }
  friend bool operator<(const ReadingMap& a, const ReadingMap& b) {
    if (a.form_ != b.form_) return a.form_ < b.form_;
    if (a.groups_ != b.groups_) return a.groups_ < b.groups_;
    return std::lexicographical_compare(
        a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
        [](const auto& x, const auto& y) {
          if (x.first != y.first) return sym_less(x.first, y.first);
          return x.second < y.second;
        });
  }

 private:
  explicit ReadingMap(Form f) : form_(f) {}
  Form form_;
  std::vector<Group> groups_;                   // pub/res/grp/share payload
  std::vector<std::pair<Sym, Group>> entries_;  // table payload
};

// Functional composition over an explicit universe: (α∘β)(a) = α(β(a)).
// The result is a full table, one entry per agent of the universe.
ReadingMap compose_reading(const ReadingMap& alpha, const ReadingMap& beta, const Group& universe);

// Least composition-closed superset of the given maps over the universe.
// Maps are compared pointwise; results are returned as full tables.
std::vector<ReadingMap> reading_closure(const std::vector<ReadingMap>& maps, const Group& universe);

// Full-table rendering of any map over a universe (used for canonical
// comparisons and JSON output).
ReadingMap as_table(const ReadingMap& m, const Group& universe);

}  // namespace cdk

#pragma once

#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "cdk/group.hpp"
#include "cdk/reading.hpp"

namespace cdk {

enum class FKind {
  True,
  False,
  Atom,     // atomic proposition
  Comp,     // B <= C
  Not,
  And,
  Or,       // sugar
  Implies,  // sugar
  Iff,      // sugar
  K,        // sugar: K a φ  = Cd{{{a}}} φ
  D,        // sugar: D B φ  = Cd{{B}} φ
  C,        // sugar: C B φ  = Cd{{{b}:b∈B}} φ
  Cd,
  SemiPub,  // [!α] φ
  Event,    // [E.e] φ
};

struct FormulaNode;

class Formula {
 public:
  Formula() = default;
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  bool valid() const { return node_ != nullptr; }
  const FormulaNode& node() const { return *node_; }
  const FormulaNode* operator->() const { return node_.get(); }

  FKind kind() const;
  std::size_t hash() const;
  std::size_t size() const;  // node count

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};
using FormulaSet = std::unordered_set<Formula, FormulaHash>;

struct FormulaNode {
  FKind kind;
  std::string name;    // Atom: proposition; Event: model id
  std::string name2;   // Event: event id
  Sym agent{};         // K
  Group group;         // D/C; Comp: left
  Group group2;        // Comp: right
  GroupFamily family;  // Cd
  ReadingMap rmap;     // SemiPub
  Formula lhs, rhs;    // children
  std::size_t hash = 0;
  std::size_t size = 1;
};

Formula mk_true();
Formula mk_false();
Formula mk_atom(const std::string& name);
Formula mk_comp(Group b, Group c);
Formula mk_not(Formula f);
Formula mk_and(Formula f, Formula g);
Formula mk_or(Formula f, Formula g);
Formula mk_implies(Formula f, Formula g);
Formula mk_iff(Formula f, Formula g);
Formula mk_K(Sym a, Formula f);
Formula mk_D(Group b, Formula f);
Formula mk_C(Group b, Formula f);
Formula mk_Cd(GroupFamily fam, Formula f);
Formula mk_semipub(ReadingMap alpha, Formula f);
Formula mk_event(const std::string& model, const std::string& event, Formula f);

// Big conjunction; empty input yields true.
Formula mk_and_all(const std::vector<Formula>& fs);

// ~φ: strips a leading negation instead of stacking a second one.
Formula single_negation(const Formula& f);

// Rewrites sugar (Or/Implies/Iff/K/D/C) into the kernel connectives
// {True,False,Atom,Comp,Not,And,Cd,SemiPub,Event}. Idempotent.
Formula desugar(const Formula& f);

bool is_desugared(const Formula& f);
bool is_static(const Formula& f);  // no SemiPub/Event anywhere

// All syntactic subformulas of f, including f itself.
FormulaSet subformulas(const Formula& f);

// Agents mentioned anywhere (groups, families, reading maps, K).
Group agents_of(const Formula& f);

// Event-model ids referenced by [E.e] nodes.
std::vector<std::string> event_refs(const Formula& f);

}  // namespace cdk

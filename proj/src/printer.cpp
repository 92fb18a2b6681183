#include "cdk/printer.hpp"

namespace cdk {

namespace {

// Grammar levels: 0 iff, 1 impl, 2 disj, 3 conj, 4 unary.
int natural_level(const Formula& f) {
  switch (f.kind()) {
    case FKind::Iff:
      return 0;
    case FKind::Implies:
      return 1;
    case FKind::Or:
      return 2;
    case FKind::And:
      return 3;
    default:
      return 4;
  }
}

void render(const Formula& f, int ctx, std::string& out) {
  if (natural_level(f) < ctx) {
    out += '(';
    render(f, 0, out);
    out += ')';
    return;
  }
  const FormulaNode& n = f.node();
  switch (n.kind) {
    case FKind::True:
      out += "true";
      break;
    case FKind::False:
      out += "false";
      break;
    case FKind::Atom:
      out += n.name;
      break;
    case FKind::Comp:
      out += n.group.to_string() + " <= " + n.group2.to_string();
      break;
    case FKind::Not:
      out += '~';
      render(n.lhs, 4, out);
      break;
    case FKind::And:
      render(n.lhs, 3, out);
      out += " & ";
      render(n.rhs, 4, out);
      break;
    case FKind::Or:
      render(n.lhs, 2, out);
      out += " | ";
      render(n.rhs, 3, out);
      break;
    case FKind::Implies:
      render(n.lhs, 2, out);
      out += " -> ";
      render(n.rhs, 1, out);
      break;
    case FKind::Iff:
      render(n.lhs, 0, out);
      out += " <-> ";
      render(n.rhs, 1, out);
      break;
    case FKind::K:
      out += "K " + name_of(n.agent) + " ";
      render(n.lhs, 4, out);
      break;
    case FKind::D:
      out += "D" + n.group.to_string() + " ";
      render(n.lhs, 4, out);
      break;
    case FKind::C:
      out += "C" + n.group.to_string() + " ";
      render(n.lhs, 4, out);
      break;
    case FKind::Cd:
      out += "Cd" + n.family.to_string() + " ";
      render(n.lhs, 4, out);
      break;
    case FKind::SemiPub:
      out += "[!" + n.rmap.to_string() + "] ";
      render(n.lhs, 4, out);
      break;
    case FKind::Event:
      out += "[" + n.name + "." + n.name2 + "] ";
      render(n.lhs, 4, out);
      break;
  }
}

}  // namespace

std::string render_formula(const Formula& f) {
  std::string out;
  render(f, 0, out);
  return out;
}

}  // namespace cdk

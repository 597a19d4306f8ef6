#pragma once

#include <string>

#include "qmlstt/qml/formula.hpp"

namespace qmlstt::qml {

// Prints core connectives only; sugar introduced by the parser stays
// expanded.  Output reparses to a structurally identical formula:
// disjunction is rendered left associative, quantifier bodies extend
// maximally, everything tighter is parenthesized as needed.

namespace detail {

// Binding strength: quantifiers 1, disjunction 2, unary 4, atoms 5.
inline int strength(const FormulaRef& f) {
  switch (f->kind()) {
    case Formula::Kind::ForallInd:
    case Formula::Kind::ForallProp:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::Not:
    case Formula::Kind::Box:
      return 4;
    default:
      return 5;
  }
}

inline void print_rec(const FormulaRef& f, int min_strength, bool full_parens,
                      std::string& out) {
  bool parens = full_parens ? strength(f) < 5 : strength(f) < min_strength;
  if (parens) out += '(';
  switch (f->kind()) {
    case Formula::Kind::PropVar:
      out += f->name();
      break;
    case Formula::Kind::Atom:
      out += f->name();
      if (!f->args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f->args().size(); ++i) {
          if (i) out += ", ";
          out += f->args()[i];
        }
        out += ')';
      }
      break;
    case Formula::Kind::Not:
      out += '~';
      print_rec(f->child(), 4, full_parens, out);
      break;
    case Formula::Kind::Box:
      out += '[' + f->name() + ']';
      print_rec(f->child(), 4, full_parens, out);
      break;
    case Formula::Kind::Or:
      print_rec(f->lhs(), 2, full_parens, out);
      out += " | ";
      print_rec(f->rhs(), 3, full_parens, out);
      break;
    case Formula::Kind::ForallInd:
      out += "forall " + f->name() + ":ind. ";
      print_rec(f->child(), 1, full_parens, out);
      break;
    case Formula::Kind::ForallProp:
      out += "forall " + f->name() + ":prop. ";
      print_rec(f->child(), 1, full_parens, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline std::string print_formula(const FormulaRef& f, bool full_parens = false) {
  std::string out;
  detail::print_rec(f, 1, full_parens, out);
  return out;
}

}  // namespace qmlstt::qml

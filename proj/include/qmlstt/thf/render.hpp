#pragma once

#include <string>

#include "qmlstt/errors.hpp"
#include "qmlstt/thf/problem.hpp"

namespace qmlstt::thf {

// Canonical typed higher-order concrete syntax.  Every compound term is
// parenthesized, applications are rendered as binary '@' chains, and binders
// carry explicit types, so the output reparses without precedence rules.

inline std::string render_type(const stt::TypeRef& ty) {
  if (ty->is_base()) {
    switch (ty->base_name()) {
      case stt::BaseName::O: return "$o";
      case stt::BaseName::Iota: return "$i";
      case stt::BaseName::Mu: return "mu";
    }
  }
  std::string dom = render_type(ty->domain());
  if (ty->domain()->is_arrow()) dom = "(" + dom + ")";
  return dom + " > " + render_type(ty->codomain());
}

inline std::string render_term(const stt::TermRef& t) {
  using K = stt::Term::Kind;
  switch (t->kind()) {
    case K::Const:
    case K::Var:
      return t->name();
    case K::Lam:
      return "(^ [" + t->name() + ": " + render_type(t->ty()) + "]: " +
             render_term(t->body()) + ")";
    case K::App:
      return "(" + render_term(t->fn()) + " @ " + render_term(t->arg()) + ")";
    case K::Neg:
      return "(~ " + render_term(t->operand()) + ")";
    case K::Or:
      return "(" + render_term(t->lhs()) + " | " + render_term(t->rhs()) + ")";
    case K::Eq:
      return "(" + render_term(t->lhs()) + " = " + render_term(t->rhs()) + ")";
    case K::Pi: {
      const stt::TermRef& f = t->operand();
      if (f->kind() == K::Lam)
        return "(! [" + f->name() + ": " + render_type(f->ty()) + "]: " +
               render_term(f->body()) + ")";
      throw Error("cannot render a quantifier applied to a non-abstraction");
    }
  }
  throw Error("unreachable term kind");
}

inline std::string render_entry(const ThfEntry& e) {
  std::string out = "thf(" + e.name + ", " + to_string(e.role) + ", ";
  switch (e.role) {
    case ThfRole::TypeDecl:
      out += e.symbol + ": " +
             (e.declared_type ? render_type(e.declared_type) : std::string("$tType"));
      break;
    case ThfRole::Definition:
      out += "(" + e.symbol + " = " + render_term(e.formula) + ")";
      break;
    case ThfRole::Axiom:
    case ThfRole::Conjecture:
      out += render_term(e.formula);
      break;
  }
  out += ").";
  return out;
}

inline std::string render_problem(const ThfProblem& p) {
  std::string out;
  for (const auto& line : p.header) out += "% " + line + "\n";
  if (!p.header.empty()) out += "\n";
  for (const auto& e : p.entries) out += render_entry(e) + "\n";
  return out;
}

}  // namespace qmlstt::thf

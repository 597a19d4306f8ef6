#pragma once

#include <string>
#include <vector>

#include "qmlstt/embedding/embed.hpp"
#include "qmlstt/embedding/operators.hpp"
#include "qmlstt/qml/formula.hpp"
#include "qmlstt/thf/problem.hpp"

namespace qmlstt::thf {

// Closes a formula universally: individual quantifiers innermost, then
// propositional quantifiers, each sort's variables in ascending name order
// reading outside-in.
inline qml::FormulaRef universal_closure(const qml::FormulaRef& f) {
  qml::FreeVars fv = qml::free_vars(f);
  qml::FormulaRef out = f;
  for (auto it = fv.ind.rbegin(); it != fv.ind.rend(); ++it)
    out = qml::Formula::forall_ind(*it, out);
  for (auto it = fv.prop.rbegin(); it != fv.prop.rend(); ++it)
    out = qml::Formula::forall_prop(*it, out);
  return out;
}

// The fixed prelude every emitted file starts from: the world type, then
// each lifted connective declared and immediately defined, in dependency
// order.
inline void append_operator_entries(ThfProblem& p) {
  p.entries.push_back({ThfRole::TypeDecl, "mu_type", "mu", nullptr, nullptr});
  for (const auto& def : embedding::operator_table()) {
    if (!def.in_thf) continue;
    p.entries.push_back({ThfRole::TypeDecl, def.name + "_type", def.name, def.type, nullptr});
    p.entries.push_back({ThfRole::Definition, def.name + "_def", def.name, nullptr,
                         def.definiens});
  }
}

// Assembles a complete problem: the world type, the lifted connectives (each
// declared and then defined), the signature's relations and predicates, the
// axioms, and the single conjecture.  Axioms and conjecture are closed
// universally, embedded unexpanded (the definitions carry the meaning), and
// asserted under the validity wrapper.
inline ThfProblem make_problem(const qml::Signature& sig,
                               const std::vector<qml::FormulaRef>& axioms,
                               const qml::FormulaRef& conjecture,
                               std::vector<std::string> header = {}) {
  sig.validate();
  ThfProblem p;
  p.header = std::move(header);
  append_operator_entries(p);

  for (const auto& r : sig.rels)
    p.entries.push_back({ThfRole::TypeDecl, r + "_type", r, stt::rel_type(), nullptr});
  for (const auto& [k, arity] : sig.preds)
    p.entries.push_back(
        {ThfRole::TypeDecl, k + "_type", k, stt::pred_type(arity), nullptr});

  stt::TermRef mvalid = embedding::operator_const("mvalid");
  int n = 0;
  for (const auto& ax : axioms) {
    stt::TermRef t = embedding::embed(universal_closure(ax), sig);
    p.entries.push_back({ThfRole::Axiom, "ax" + std::to_string(++n), "", nullptr,
                         stt::app(mvalid, t)});
  }
  stt::TermRef goal = embedding::embed(universal_closure(conjecture), sig);
  p.entries.push_back(
      {ThfRole::Conjecture, "goal", "", nullptr, stt::app(mvalid, goal)});

  p.validate();
  return p;
}

}  // namespace qmlstt::thf

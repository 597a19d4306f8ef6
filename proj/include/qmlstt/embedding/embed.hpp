#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qmlstt/embedding/operators.hpp"
#include "qmlstt/errors.hpp"
#include "qmlstt/qml/formula.hpp"
#include "qmlstt/stt/ops.hpp"
#include "qmlstt/stt/term.hpp"
#include "qmlstt/stt/type.hpp"

namespace qmlstt::embedding {

// Formula -> term translation.  Propositional variables become term
// variables of type mu > o, individual variables term variables of type $i,
// predicates and relation indices become constants, and each connective
// becomes its lifted operator constant.  The result is always of type
// mu > o and its free variables are exactly the translations of the
// formula's free variables.
inline stt::TermRef embed(const qml::FormulaRef& f, const qml::Signature& sig) {
  qml::check_against(f, sig);
  using K = qml::Formula::Kind;
  auto rec = [&](auto&& self, const qml::FormulaRef& g) -> stt::TermRef {
    switch (g->kind()) {
      case K::PropVar:
        return stt::variable(g->name(), stt::prop_type());
      case K::Atom: {
        stt::TermRef t = stt::constant(g->name(),
                                       stt::pred_type(static_cast<int>(g->args().size())));
        for (const auto& x : g->args()) t = stt::app(t, stt::variable(x, stt::Type::iota()));
        return t;
      }
      case K::Not:
        return stt::app(operator_const("mnot"), self(self, g->child()));
      case K::Or:
        return stt::app(operator_const("mor"),
                        {self(self, g->lhs()), self(self, g->rhs())});
      case K::Box:
        return stt::app(operator_const("mbox"),
                        {stt::constant(g->name(), stt::rel_type()), self(self, g->child())});
      case K::ForallInd:
        return stt::app(operator_const("mforall_ind"),
                        stt::lam(g->name(), stt::Type::iota(), self(self, g->child())));
      case K::ForallProp:
        return stt::app(operator_const("mforall_prop"),
                        stt::lam(g->name(), stt::prop_type(), self(self, g->child())));
    }
    throw Error("unreachable formula kind");
  };
  return rec(rec, f);
}

// Replaces every operator constant by its definiens (recursively, since
// definientia mention earlier operators) and beta-eta-normalizes.  A
// constant whose name matches the table but whose type does not is a
// misused operator, not an ordinary constant.
namespace detail {
inline stt::TermRef expand_rec(const stt::TermRef& t,
                               std::map<std::string, stt::TermRef>& memo) {
  using K = stt::Term::Kind;
  switch (t->kind()) {
    case K::Var:
      return t;
    case K::Const: {
      const OperatorDef* d = find_operator(t->name());
      if (!d) return t;
      if (!stt::type_eq(d->type, t->ty())) throw UnknownDefinition(t->name());
      auto it = memo.find(t->name());
      if (it != memo.end()) return it->second;
      stt::TermRef e = expand_rec(d->definiens, memo);
      memo.emplace(t->name(), e);
      return e;
    }
    case K::Lam:
      return stt::lam(t->name(), t->ty(), expand_rec(t->body(), memo));
    case K::App:
      return stt::app(expand_rec(t->fn(), memo), expand_rec(t->arg(), memo));
    case K::Neg:
      return stt::neg(expand_rec(t->operand(), memo));
    case K::Or:
      return stt::disj(expand_rec(t->lhs(), memo), expand_rec(t->rhs(), memo));
    case K::Eq:
      return stt::equal(expand_rec(t->lhs(), memo), expand_rec(t->rhs(), memo), t->ty());
    case K::Pi:
      return stt::pi(expand_rec(t->operand(), memo), t->ty());
  }
  throw Error("unreachable term kind");
}
}  // namespace detail

inline stt::TermRef expand_definitions(const stt::TermRef& t) {
  std::map<std::string, stt::TermRef> memo;
  return stt::beta_eta_normalize(detail::expand_rec(t, memo));
}

// Validity of a set of worlds: truth at every world.  Returns the expanded
// normal form of (mvalid t), a closed-over-worlds term of type $o.
inline stt::TermRef wrap_valid(const stt::TermRef& t) {
  stt::TypeRef ty = stt::type_of(t);
  if (!stt::type_eq(ty, stt::prop_type()))
    throw IllTyped("wrap_valid.argument", stt::prop_type()->to_string(), ty->to_string());
  return expand_definitions(stt::app(operator_const("mvalid"), t));
}

// Inverse of embed on its image.
namespace detail {
inline qml::FormulaRef unembed_rec(const stt::TermRef& t, const qml::Signature& sig) {
  using K = stt::Term::Kind;
  if (t->kind() == K::Var && stt::type_eq(t->ty(), stt::prop_type()))
    return qml::Formula::prop_var(t->name());

  // Unroll the application spine.
  std::vector<stt::TermRef> args;
  stt::TermRef h = t;
  while (h->kind() == K::App) {
    args.push_back(h->arg());
    h = h->fn();
  }
  std::reverse(args.begin(), args.end());
  if (h->kind() != K::Const)
    throw NotEmbedded("term is not an embedded formula: " + stt::to_string(t));
  const std::string& c = h->name();

  if (c == "mnot" && args.size() == 1)
    return qml::neg(unembed_rec(args[0], sig));
  if (c == "mor" && args.size() == 2)
    return qml::disj(unembed_rec(args[0], sig), unembed_rec(args[1], sig));
  if (c == "mbox" && args.size() == 2) {
    if (args[0]->kind() != K::Const || !sig.rels.count(args[0]->name()))
      throw NotEmbedded("box index is not a declared relation: " + stt::to_string(args[0]));
    return qml::Formula::box(args[0]->name(), unembed_rec(args[1], sig));
  }
  if ((c == "mforall_ind" || c == "mforall_prop") && args.size() == 1) {
    if (args[0]->kind() != K::Lam)
      throw NotEmbedded("quantifier body is not an abstraction: " + stt::to_string(args[0]));
    const stt::TermRef& l = args[0];
    if (c == "mforall_ind")
      return qml::Formula::forall_ind(l->name(), unembed_rec(l->body(), sig));
    return qml::Formula::forall_prop(l->name(), unembed_rec(l->body(), sig));
  }
  auto it = sig.preds.find(c);
  if (it != sig.preds.end()) {
    if (static_cast<int>(args.size()) != it->second)
      throw NotEmbedded("predicate arity mismatch in term: " + stt::to_string(t));
    std::vector<std::string> names;
    for (const auto& a : args) {
      if (a->kind() != K::Var || !stt::type_eq(a->ty(), stt::Type::iota()))
        throw NotEmbedded("predicate argument is not an individual variable: " +
                          stt::to_string(a));
      names.push_back(a->name());
    }
    return qml::Formula::atom(c, std::move(names));
  }
  throw NotEmbedded("term is not an embedded formula: " + stt::to_string(t));
}
}  // namespace detail

inline qml::FormulaRef unembed(const stt::TermRef& t, const qml::Signature& sig) {
  qml::FormulaRef f = detail::unembed_rec(t, sig);
  qml::check_against(f, sig);
  return f;
}

inline bool is_embedded_formula(const stt::TermRef& t, const qml::Signature& sig) {
  try {
    unembed(t, sig);
    return true;
  } catch (const NotEmbedded&) {
    return false;
  } catch (const UnknownSymbol&) {
    return false;
  } catch (const ArityMismatch&) {
    return false;
  }
}

}  // namespace qmlstt::embedding

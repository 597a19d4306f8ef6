#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qmlstt/errors.hpp"

namespace qmlstt::qml {

// Core grammar of the modal language: propositional variables, predicate
// atoms over individual variables, negation, disjunction, individual and
// propositional universal quantification, and one box per relation index.
// Conjunction, implication, diamonds, existentials and the constants
// true/false are surface sugar, rewritten to this core by the parser.
class Formula;
using FormulaRef = std::shared_ptr<const Formula>;

class Formula {
 public:
  enum class Kind { PropVar, Atom, Not, Or, ForallInd, ForallProp, Box };

  Kind kind() const { return kind_; }

  // PropVar: variable name.  Atom: predicate name.  ForallInd/ForallProp:
  // bound variable name.  Box: relation index.
  const std::string& name() const { return name_; }

  // Atom only: argument variable names, left to right.
  const std::vector<std::string>& args() const { return args_; }

  const FormulaRef& child() const { return a_; }   // Not, ForallInd, ForallProp, Box
  const FormulaRef& lhs() const { return a_; }     // Or
  const FormulaRef& rhs() const { return b_; }     // Or

  static FormulaRef prop_var(std::string p) {
    return make(Kind::PropVar, std::move(p), {}, nullptr, nullptr);
  }
  static FormulaRef atom(std::string pred, std::vector<std::string> args) {
    return make(Kind::Atom, std::move(pred), std::move(args), nullptr, nullptr);
  }
  static FormulaRef make_not(FormulaRef s) {
    return make(Kind::Not, "", {}, std::move(s), nullptr);
  }
  static FormulaRef make_or(FormulaRef s, FormulaRef t) {
    return make(Kind::Or, "", {}, std::move(s), std::move(t));
  }
  static FormulaRef forall_ind(std::string x, FormulaRef s) {
    return make(Kind::ForallInd, std::move(x), {}, std::move(s), nullptr);
  }
  static FormulaRef forall_prop(std::string p, FormulaRef s) {
    return make(Kind::ForallProp, std::move(p), {}, std::move(s), nullptr);
  }
  static FormulaRef box(std::string rel, FormulaRef s) {
    return make(Kind::Box, std::move(rel), {}, std::move(s), nullptr);
  }

 private:
  static FormulaRef make(Kind k, std::string n, std::vector<std::string> args, FormulaRef a,
                         FormulaRef b) {
    auto f = new Formula();
    f->kind_ = k;
    f->name_ = std::move(n);
    f->args_ = std::move(args);
    f->a_ = std::move(a);
    f->b_ = std::move(b);
    return FormulaRef(f);
  }

  Formula() = default;

  Kind kind_;
  std::string name_;
  std::vector<std::string> args_;
  FormulaRef a_;
  FormulaRef b_;
};

inline FormulaRef neg(FormulaRef s) { return Formula::make_not(std::move(s)); }
inline FormulaRef disj(FormulaRef s, FormulaRef t) {
  return Formula::make_or(std::move(s), std::move(t));
}

// Sugar, expressed in the core immediately.
inline FormulaRef conj(FormulaRef s, FormulaRef t) {
  return neg(disj(neg(std::move(s)), neg(std::move(t))));
}
inline FormulaRef implies(FormulaRef s, FormulaRef t) {
  return disj(neg(std::move(s)), std::move(t));
}
inline FormulaRef dia(std::string rel, FormulaRef s) {
  return neg(Formula::box(std::move(rel), neg(std::move(s))));
}
inline FormulaRef exists_ind(std::string x, FormulaRef s) {
  return neg(Formula::forall_ind(std::move(x), neg(std::move(s))));
}
inline FormulaRef exists_prop(std::string p, FormulaRef s) {
  return neg(Formula::forall_prop(std::move(p), neg(std::move(s))));
}

// Structural equality, binder names included.
inline bool equal(const FormulaRef& a, const FormulaRef& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind() || a->name() != b->name() || a->args() != b->args()) return false;
  switch (a->kind()) {
    case Formula::Kind::PropVar:
    case Formula::Kind::Atom:
      return true;
    case Formula::Kind::Or:
      return equal(a->lhs(), b->lhs()) && equal(a->rhs(), b->rhs());
    default:
      return equal(a->child(), b->child());
  }
}

// Declared vocabulary a formula may draw on.  The four name spaces must be
// pairwise disjoint; at least one relation index is required so that boxes
// can be written.
struct Signature {
  std::set<std::string> ind_vars;
  std::set<std::string> prop_vars;
  std::map<std::string, int> preds;  // name -> arity (>= 0)
  std::set<std::string> rels;

  void validate() const {
    if (rels.empty()) throw Error("signature needs at least one relation index");
    std::map<std::string, const char*> seen;
    auto claim = [&](const std::string& n, const char* space) {
      auto [it, fresh] = seen.emplace(n, space);
      if (!fresh)
        throw Error("signature name '" + n + "' declared both as " + it->second + " and " +
                    space);
    };
    for (const auto& n : ind_vars) claim(n, "individual variable");
    for (const auto& n : prop_vars) claim(n, "propositional variable");
    for (const auto& [n, arity] : preds) {
      if (arity < 0) throw Error("negative arity for predicate '" + n + "'");
      claim(n, "predicate");
    }
    for (const auto& n : rels) claim(n, "relation");
  }
};

// Free individual and propositional variables of a formula.
struct FreeVars {
  std::set<std::string> ind;
  std::set<std::string> prop;
};

namespace detail {
inline void free_vars_rec(const FormulaRef& f, std::vector<std::pair<std::string, bool>>& bound,
                          FreeVars& out) {
  auto is_bound = [&](const std::string& n, bool prop) {
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      if (it->first == n && it->second == prop) return true;
    return false;
  };
  switch (f->kind()) {
    case Formula::Kind::PropVar:
      if (!is_bound(f->name(), true)) out.prop.insert(f->name());
      return;
    case Formula::Kind::Atom:
      for (const auto& x : f->args())
        if (!is_bound(x, false)) out.ind.insert(x);
      return;
    case Formula::Kind::Not:
    case Formula::Kind::Box:
      free_vars_rec(f->child(), bound, out);
      return;
    case Formula::Kind::Or:
      free_vars_rec(f->lhs(), bound, out);
      free_vars_rec(f->rhs(), bound, out);
      return;
    case Formula::Kind::ForallInd:
      bound.emplace_back(f->name(), false);
      free_vars_rec(f->child(), bound, out);
      bound.pop_back();
      return;
    case Formula::Kind::ForallProp:
      bound.emplace_back(f->name(), true);
      free_vars_rec(f->child(), bound, out);
      bound.pop_back();
      return;
  }
}
}  // namespace detail

inline FreeVars free_vars(const FormulaRef& f) {
  FreeVars out;
  std::vector<std::pair<std::string, bool>> bound;
  detail::free_vars_rec(f, bound, out);
  return out;
}

// Checks a core formula against a signature: every predicate and relation
// is declared with the right arity, every free variable is declared.
namespace detail {
inline void check_rec(const FormulaRef& f, const Signature& sig,
                      std::vector<std::pair<std::string, bool>>& bound) {
  auto is_bound = [&](const std::string& n, bool prop) {
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      if (it->first == n && it->second == prop) return true;
    return false;
  };
  switch (f->kind()) {
    case Formula::Kind::PropVar:
      if (!is_bound(f->name(), true) && !sig.prop_vars.count(f->name()))
        throw UnknownSymbol("undeclared propositional variable '" + f->name() + "'");
      return;
    case Formula::Kind::Atom: {
      auto it = sig.preds.find(f->name());
      if (it == sig.preds.end())
        throw UnknownSymbol("undeclared predicate '" + f->name() + "'");
      if (static_cast<int>(f->args().size()) != it->second)
        throw ArityMismatch("predicate '" + f->name() + "' expects " +
                            std::to_string(it->second) + " arguments, got " +
                            std::to_string(f->args().size()));
      for (const auto& x : f->args())
        if (!is_bound(x, false) && !sig.ind_vars.count(x))
          throw UnknownSymbol("undeclared individual variable '" + x + "'");
      return;
    }
    case Formula::Kind::Not:
      check_rec(f->child(), sig, bound);
      return;
    case Formula::Kind::Box:
      if (!sig.rels.count(f->name()))
        throw UnknownSymbol("undeclared relation '" + f->name() + "'");
      check_rec(f->child(), sig, bound);
      return;
    case Formula::Kind::Or:
      check_rec(f->lhs(), sig, bound);
      check_rec(f->rhs(), sig, bound);
      return;
    case Formula::Kind::ForallInd:
      bound.emplace_back(f->name(), false);
      check_rec(f->child(), sig, bound);
      bound.pop_back();
      return;
    case Formula::Kind::ForallProp:
      bound.emplace_back(f->name(), true);
      check_rec(f->child(), sig, bound);
      bound.pop_back();
      return;
  }
}
}  // namespace detail

inline void check_against(const FormulaRef& f, const Signature& sig) {
  std::vector<std::pair<std::string, bool>> bound;
  detail::check_rec(f, sig, bound);
}

}  // namespace qmlstt::qml

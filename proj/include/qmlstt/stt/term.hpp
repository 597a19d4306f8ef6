#pragma once

#include <cassert>
#include <cctype>
#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qmlstt/stt/type.hpp"

namespace qmlstt::stt {

// Immutable term trees.  The logical constants negation, disjunction,
// equality and the universal-quantifier combinator get their own node kinds;
// everything else is constants, typed variables, abstraction, application.
//
// Eq and Pi carry the type instance they are used at: Eq compares two terms
// of type `ty`, Pi takes one argument of type `ty > o`.
class Term;
using TermRef = std::shared_ptr<const Term>;

class Term {
 public:
  enum class Kind { Const, Var, Lam, App, Neg, Or, Eq, Pi };

  Kind kind() const { return kind_; }

  // Const/Var name, or the Lam binder name.
  const std::string& name() const {
    assert(kind_ == Kind::Const || kind_ == Kind::Var || kind_ == Kind::Lam);
    return name_;
  }

  // Const/Var type, Lam binder type, Eq/Pi instance type.
  const TypeRef& ty() const {
    assert(type_);
    return type_;
  }

  const TermRef& fn() const {
    assert(kind_ == Kind::App);
    return a_;
  }
  const TermRef& arg() const {
    assert(kind_ == Kind::App);
    return b_;
  }
  const TermRef& body() const {
    assert(kind_ == Kind::Lam);
    return a_;
  }
  // The single child of Neg, or the function argument of Pi.
  const TermRef& operand() const {
    assert(kind_ == Kind::Neg || kind_ == Kind::Pi);
    return a_;
  }
  const TermRef& lhs() const {
    assert(kind_ == Kind::Or || kind_ == Kind::Eq);
    return a_;
  }
  const TermRef& rhs() const {
    assert(kind_ == Kind::Or || kind_ == Kind::Eq);
    return b_;
  }

  static TermRef make_const(std::string name, TypeRef ty) {
    return make(Kind::Const, std::move(name), std::move(ty), nullptr, nullptr);
  }
  static TermRef make_var(std::string name, TypeRef ty) {
    return make(Kind::Var, std::move(name), std::move(ty), nullptr, nullptr);
  }
  static TermRef make_lam(std::string binder, TypeRef ty, TermRef body) {
    return make(Kind::Lam, std::move(binder), std::move(ty), std::move(body), nullptr);
  }
  static TermRef make_app(TermRef f, TermRef a) {
    return make(Kind::App, "", nullptr, std::move(f), std::move(a));
  }
  static TermRef make_neg(TermRef s) {
    return make(Kind::Neg, "", nullptr, std::move(s), nullptr);
  }
  static TermRef make_or(TermRef s, TermRef t) {
    return make(Kind::Or, "", nullptr, std::move(s), std::move(t));
  }
  static TermRef make_eq(TermRef s, TermRef t, TypeRef instance) {
    return make(Kind::Eq, "", std::move(instance), std::move(s), std::move(t));
  }
  static TermRef make_pi(TermRef f, TypeRef instance) {
    return make(Kind::Pi, "", std::move(instance), std::move(f), nullptr);
  }

 private:
  static TermRef make(Kind k, std::string n, TypeRef ty, TermRef a, TermRef b) {
    auto t = new Term();
    t->kind_ = k;
    t->name_ = std::move(n);
    t->type_ = std::move(ty);
    t->a_ = std::move(a);
    t->b_ = std::move(b);
    return TermRef(t);
  }

  Term() = default;

  Kind kind_;
  std::string name_;
  TypeRef type_;
  TermRef a_;
  TermRef b_;
};

inline TermRef constant(std::string name, TypeRef ty) {
  return Term::make_const(std::move(name), std::move(ty));
}
inline TermRef variable(std::string name, TypeRef ty) {
  return Term::make_var(std::move(name), std::move(ty));
}
inline TermRef lam(std::string binder, TypeRef ty, TermRef body) {
  return Term::make_lam(std::move(binder), std::move(ty), std::move(body));
}
inline TermRef app(TermRef f, TermRef a) {
  return Term::make_app(std::move(f), std::move(a));
}
inline TermRef app(TermRef f, std::initializer_list<TermRef> args) {
  for (const auto& a : args) f = Term::make_app(std::move(f), a);
  return f;
}
inline TermRef neg(TermRef s) { return Term::make_neg(std::move(s)); }
inline TermRef disj(TermRef s, TermRef t) {
  return Term::make_or(std::move(s), std::move(t));
}
inline TermRef equal(TermRef s, TermRef t, TypeRef instance) {
  return Term::make_eq(std::move(s), std::move(t), std::move(instance));
}
inline TermRef pi(TermRef f, TypeRef instance) {
  return Term::make_pi(std::move(f), std::move(instance));
}
// Binder form of Pi: forall(x, ty, b) quantifies x of type ty over b.
inline TermRef forall(std::string binder, TypeRef ty, TermRef body) {
  TypeRef instance = ty;
  return pi(lam(std::move(binder), std::move(ty), std::move(body)), std::move(instance));
}

// Variables are identified by name and type together.
struct VarId {
  std::string name;
  std::string type_key;  // canonical type spelling, cheap to order

  bool operator<(const VarId& other) const {
    if (name != other.name) return name < other.name;
    return type_key < other.type_key;
  }
  bool operator==(const VarId& other) const {
    return name == other.name && type_key == other.type_key;
  }
};

inline VarId var_id(const std::string& name, const TypeRef& ty) {
  return VarId{name, ty->to_string()};
}

namespace detail {
inline void collect_free(const TermRef& t, std::vector<VarId>& bound,
                         std::map<VarId, TypeRef>& out) {
  switch (t->kind()) {
    case Term::Kind::Const:
      return;
    case Term::Kind::Var: {
      VarId id = var_id(t->name(), t->ty());
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (*it == id) return;
      out.emplace(std::move(id), t->ty());
      return;
    }
    case Term::Kind::Lam:
      bound.push_back(var_id(t->name(), t->ty()));
      collect_free(t->body(), bound, out);
      bound.pop_back();
      return;
    case Term::Kind::App:
      collect_free(t->fn(), bound, out);
      collect_free(t->arg(), bound, out);
      return;
    case Term::Kind::Neg:
    case Term::Kind::Pi:
      collect_free(t->operand(), bound, out);
      return;
    case Term::Kind::Or:
    case Term::Kind::Eq:
      collect_free(t->lhs(), bound, out);
      collect_free(t->rhs(), bound, out);
      return;
  }
}
}  // namespace detail

inline std::map<VarId, TypeRef> free_vars(const TermRef& t) {
  std::map<VarId, TypeRef> out;
  std::vector<VarId> bound;
  detail::collect_free(t, bound, out);
  return out;
}

// Every name that occurs anywhere in the term (free, bound, binder, constant).
// Used to pick fresh names that cannot collide.
inline void collect_names(const TermRef& t, std::set<std::string>& out) {
  switch (t->kind()) {
    case Term::Kind::Const:
    case Term::Kind::Var:
      out.insert(t->name());
      return;
    case Term::Kind::Lam:
      out.insert(t->name());
      collect_names(t->body(), out);
      return;
    case Term::Kind::App:
      collect_names(t->fn(), out);
      collect_names(t->arg(), out);
      return;
    case Term::Kind::Neg:
    case Term::Kind::Pi:
      collect_names(t->operand(), out);
      return;
    case Term::Kind::Or:
    case Term::Kind::Eq:
      collect_names(t->lhs(), out);
      collect_names(t->rhs(), out);
      return;
  }
}

// Smallest unused name built from `stem`: trailing digits are stripped first,
// then the bare stem is tried, then stem1, stem2, ...
inline std::string fresh_name(const std::string& stem, const std::set<std::string>& avoid) {
  std::string base = stem;
  while (base.size() > 1 && std::isdigit(static_cast<unsigned char>(base.back())))
    base.pop_back();
  if (base.empty()) base = "X";
  if (!avoid.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

}  // namespace qmlstt::stt

#pragma once

#include <map>

#include "qmlstt/errors.hpp"
#include "qmlstt/henkin/frame.hpp"
#include "qmlstt/stt/ops.hpp"
#include "qmlstt/stt/term.hpp"

namespace qmlstt::henkin {

using Env = std::map<stt::VarId, Value>;

// Compositional valuation of a term in a finite frame:
//   - variables from the environment, constants from the frame,
//   - application indexes the function table by the argument's position,
//   - abstraction materializes the table over the binder's domain,
//   - equality is extensional comparison,
//   - the quantifier combinator checks its argument's table is all-true.
inline Value eval_term(const FiniteFrame& f, Env& env, const stt::TermRef& t) {
  using K = stt::Term::Kind;
  switch (t->kind()) {
    case K::Var: {
      auto it = env.find(stt::var_id(t->name(), t->ty()));
      if (it == env.end()) throw UnboundVariable(t->name());
      return it->second;
    }
    case K::Const: {
      auto it = f.interp().find(t->name());
      if (it == f.interp().end()) throw UnknownConstant(t->name());
      return it->second;
    }
    case K::App: {
      Value fn = eval_term(f, env, t->fn());
      Value arg = eval_term(f, env, t->arg());
      stt::TypeRef arg_ty = stt::type_of(t->arg());
      const Value::Table& table = fn.as_table();
      return table[f.index_of(arg_ty, arg)];
    }
    case K::Lam: {
      const std::vector<Value>& dom = f.enumerate(t->ty());
      Value::Table out;
      out.reserve(dom.size());
      stt::VarId id = stt::var_id(t->name(), t->ty());
      auto prev = env.find(id);
      bool had = prev != env.end();
      Value saved = had ? prev->second : Value::truth(false);
      for (const Value& d : dom) {
        env.insert_or_assign(id, d);
        out.push_back(eval_term(f, env, t->body()));
      }
      if (had) env.insert_or_assign(id, saved);
      else env.erase(id);
      return Value::table(std::move(out));
    }
    case K::Neg:
      return Value::truth(!eval_term(f, env, t->operand()).as_truth());
    case K::Or: {
      if (eval_term(f, env, t->lhs()).as_truth()) return Value::truth(true);
      return eval_term(f, env, t->rhs());
    }
    case K::Eq:
      return Value::truth(eval_term(f, env, t->lhs()) == eval_term(f, env, t->rhs()));
    case K::Pi: {
      Value body = eval_term(f, env, t->operand());
      for (const Value& v : body.as_table())
        if (!v.as_truth()) return Value::truth(false);
      return Value::truth(true);
    }
  }
  throw Error("unreachable term kind");
}

inline Value eval_closed(const FiniteFrame& f, const stt::TermRef& t) {
  Env env;
  return eval_term(f, env, t);
}

}  // namespace qmlstt::henkin

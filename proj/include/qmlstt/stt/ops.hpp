#pragma once

#include <set>
#include <string>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/stt/term.hpp"
#include "qmlstt/stt/type.hpp"

namespace qmlstt::stt {

namespace detail {

inline std::string path_string(const std::vector<const char*>& path) {
  if (path.empty()) return "root";
  std::string s = "root";
  for (const char* p : path) {
    s += '.';
    s += p;
  }
  return s;
}

inline TypeRef type_of_rec(const TermRef& t, std::vector<const char*>& path) {
  struct Push {
    std::vector<const char*>& p;
    Push(std::vector<const char*>& p, const char* label) : p(p) { p.push_back(label); }
    ~Push() { p.pop_back(); }
  };
  switch (t->kind()) {
    case Term::Kind::Const:
    case Term::Kind::Var:
      return t->ty();
    case Term::Kind::Lam: {
      Push _(path, "body");
      return Type::arrow(t->ty(), type_of_rec(t->body(), path));
    }
    case Term::Kind::App: {
      TypeRef tf, ta;
      {
        Push _(path, "fn");
        tf = type_of_rec(t->fn(), path);
      }
      {
        Push _(path, "arg");
        ta = type_of_rec(t->arg(), path);
      }
      if (!tf->is_arrow())
        throw IllTyped(path_string(path), "function type", tf->to_string());
      if (!type_eq(tf->domain(), ta)) {
        Push _(path, "arg");
        throw IllTyped(path_string(path), tf->domain()->to_string(), ta->to_string());
      }
      return tf->codomain();
    }
    case Term::Kind::Neg: {
      Push _(path, "neg");
      TypeRef ta = type_of_rec(t->operand(), path);
      if (!type_eq(ta, Type::o()))
        throw IllTyped(path_string(path), "$o", ta->to_string());
      return Type::o();
    }
    case Term::Kind::Or: {
      {
        Push _(path, "lhs");
        TypeRef ta = type_of_rec(t->lhs(), path);
        if (!type_eq(ta, Type::o()))
          throw IllTyped(path_string(path), "$o", ta->to_string());
      }
      {
        Push _(path, "rhs");
        TypeRef tb = type_of_rec(t->rhs(), path);
        if (!type_eq(tb, Type::o()))
          throw IllTyped(path_string(path), "$o", tb->to_string());
      }
      return Type::o();
    }
    case Term::Kind::Eq: {
      {
        Push _(path, "lhs");
        TypeRef ta = type_of_rec(t->lhs(), path);
        if (!type_eq(ta, t->ty()))
          throw IllTyped(path_string(path), t->ty()->to_string(), ta->to_string());
      }
      {
        Push _(path, "rhs");
        TypeRef tb = type_of_rec(t->rhs(), path);
        if (!type_eq(tb, t->ty()))
          throw IllTyped(path_string(path), t->ty()->to_string(), tb->to_string());
      }
      return Type::o();
    }
    case Term::Kind::Pi: {
      Push _(path, "pi");
      TypeRef ta = type_of_rec(t->operand(), path);
      TypeRef want = Type::arrow(t->ty(), Type::o());
      if (!type_eq(ta, want))
        throw IllTyped(path_string(path), want->to_string(), ta->to_string());
      return Type::o();
    }
  }
  throw Error("unreachable term kind");
}

}  // namespace detail

inline TypeRef type_of(const TermRef& t) {
  std::vector<const char*> path;
  return detail::type_of_rec(t, path);
}

namespace detail {

// Typed occurs check: a binder shadows only a variable of the same name AND
// type, since name and type together identify a variable.
inline bool occurs_free(const TermRef& t, const std::string& name, const TypeRef& ty) {
  switch (t->kind()) {
    case Term::Kind::Const:
      return false;
    case Term::Kind::Var:
      return t->name() == name && type_eq(t->ty(), ty);
    case Term::Kind::Lam:
      if (t->name() == name && type_eq(t->ty(), ty)) return false;
      return occurs_free(t->body(), name, ty);
    case Term::Kind::App:
      return occurs_free(t->fn(), name, ty) || occurs_free(t->arg(), name, ty);
    case Term::Kind::Neg:
    case Term::Kind::Pi:
      return occurs_free(t->operand(), name, ty);
    case Term::Kind::Or:
    case Term::Kind::Eq:
      return occurs_free(t->lhs(), name, ty) || occurs_free(t->rhs(), name, ty);
  }
  return false;
}

// Substitution renames binders on name collision alone (an over-approximation
// that is always safe), but skips and shadows by typed identity.
inline TermRef subst_rec(const TermRef& t, const std::string& name, const TypeRef& ty,
                         const TermRef& repl, const std::set<std::string>& repl_names) {
  switch (t->kind()) {
    case Term::Kind::Const:
      return t;
    case Term::Kind::Var:
      if (t->name() == name && type_eq(t->ty(), ty)) return repl;
      return t;
    case Term::Kind::Lam: {
      if (t->name() == name && type_eq(t->ty(), ty)) return t;  // shadowed
      if (!occurs_free(t->body(), name, ty)) return t;
      if (repl_names.count(t->name())) {
        // Binder collides with a name in the replacement: rename it first.
        std::set<std::string> avoid = repl_names;
        collect_names(t->body(), avoid);
        avoid.insert(name);
        std::string nn = fresh_name(t->name(), avoid);
        TermRef renamed = subst_rec(t->body(), t->name(), t->ty(),
                                    variable(nn, t->ty()), {nn});
        return lam(nn, t->ty(), subst_rec(renamed, name, ty, repl, repl_names));
      }
      return lam(t->name(), t->ty(), subst_rec(t->body(), name, ty, repl, repl_names));
    }
    case Term::Kind::App:
      return app(subst_rec(t->fn(), name, ty, repl, repl_names),
                 subst_rec(t->arg(), name, ty, repl, repl_names));
    case Term::Kind::Neg:
      return neg(subst_rec(t->operand(), name, ty, repl, repl_names));
    case Term::Kind::Or:
      return disj(subst_rec(t->lhs(), name, ty, repl, repl_names),
                  subst_rec(t->rhs(), name, ty, repl, repl_names));
    case Term::Kind::Eq:
      return equal(subst_rec(t->lhs(), name, ty, repl, repl_names),
                   subst_rec(t->rhs(), name, ty, repl, repl_names), t->ty());
    case Term::Kind::Pi:
      return pi(subst_rec(t->operand(), name, ty, repl, repl_names), t->ty());
  }
  throw Error("unreachable term kind");
}

}  // namespace detail

// Capture-avoiding [repl / (name:ty)] body.  Binders are renamed whenever
// their name occurs anywhere in the replacement, which over-approximates
// capture but is always safe.
inline TermRef substitute(const TermRef& body, const std::string& name, const TypeRef& ty,
                          const TermRef& repl) {
  TypeRef rt = type_of(repl);
  if (!type_eq(rt, ty))
    throw IllTyped("substitute.replacement", ty->to_string(), rt->to_string());
  std::set<std::string> repl_names;
  collect_names(repl, repl_names);
  return detail::subst_rec(body, name, ty, repl, repl_names);
}

namespace detail {

// Head reduction only: expose whether the head of an application spine is an
// abstraction.  Arguments are left untouched.
inline TermRef whnf(TermRef t) {
  while (t->kind() == Term::Kind::App) {
    TermRef f = whnf(t->fn());
    if (f->kind() == Term::Kind::Lam) {
      t = subst_rec(f->body(), f->name(), f->ty(),
                    t->arg(), [&] {
                      std::set<std::string> names;
                      collect_names(t->arg(), names);
                      return names;
                    }());
    } else {
      if (f.get() == t->fn().get()) return t;
      return app(f, t->arg());
    }
  }
  return t;
}

inline TermRef normalize_rec(const TermRef& t) {
  switch (t->kind()) {
    case Term::Kind::Const:
    case Term::Kind::Var:
      return t;
    case Term::Kind::Neg:
      return neg(normalize_rec(t->operand()));
    case Term::Kind::Or:
      return disj(normalize_rec(t->lhs()), normalize_rec(t->rhs()));
    case Term::Kind::Eq:
      return equal(normalize_rec(t->lhs()), normalize_rec(t->rhs()), t->ty());
    case Term::Kind::Pi:
      return pi(normalize_rec(t->operand()), t->ty());
    case Term::Kind::Lam: {
      TermRef b = normalize_rec(t->body());
      // eta: \x. (s x) -> s when x not free in s
      if (b->kind() == Term::Kind::App && b->arg()->kind() == Term::Kind::Var &&
          b->arg()->name() == t->name() && type_eq(b->arg()->ty(), t->ty()) &&
          !occurs_free(b->fn(), t->name(), t->ty()))
        return b->fn();
      return lam(t->name(), t->ty(), b);
    }
    case Term::Kind::App: {
      TermRef h = whnf(t);
      if (h->kind() != Term::Kind::App) return normalize_rec(h);
      // Stuck application: head is a variable or constant.
      return app(normalize_rec(h->fn()), normalize_rec(h->arg()));
    }
  }
  throw Error("unreachable term kind");
}

}  // namespace detail

// Leftmost-outermost beta reduction with eta contraction on the way out.
// Well-typed input is required; normal forms are unique up to renaming of
// bound variables.
inline TermRef beta_eta_normalize(const TermRef& t) {
  return detail::normalize_rec(t);
}

namespace detail {

struct Binder {
  std::string name;
  TypeRef ty;
};

inline bool alpha_rec(const TermRef& a, const TermRef& b, std::vector<Binder>& ba,
                      std::vector<Binder>& bb) {
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Term::Kind::Const:
      return a->name() == b->name() && type_eq(a->ty(), b->ty());
    case Term::Kind::Var: {
      // Find innermost binder matching each occurrence; both sides must
      // resolve to the same binder depth, or both be free and identical.
      int ia = -1, ib = -1;
      for (int i = static_cast<int>(ba.size()) - 1; i >= 0; --i)
        if (ba[i].name == a->name() && type_eq(ba[i].ty, a->ty())) {
          ia = i;
          break;
        }
      for (int i = static_cast<int>(bb.size()) - 1; i >= 0; --i)
        if (bb[i].name == b->name() && type_eq(bb[i].ty, b->ty())) {
          ib = i;
          break;
        }
      if (ia != ib) return false;
      if (ia >= 0) return type_eq(a->ty(), b->ty());
      return a->name() == b->name() && type_eq(a->ty(), b->ty());
    }
    case Term::Kind::Lam: {
      if (!type_eq(a->ty(), b->ty())) return false;
      ba.push_back({a->name(), a->ty()});
      bb.push_back({b->name(), b->ty()});
      bool ok = alpha_rec(a->body(), b->body(), ba, bb);
      ba.pop_back();
      bb.pop_back();
      return ok;
    }
    case Term::Kind::App:
      return alpha_rec(a->fn(), b->fn(), ba, bb) && alpha_rec(a->arg(), b->arg(), ba, bb);
    case Term::Kind::Neg:
      return alpha_rec(a->operand(), b->operand(), ba, bb);
    case Term::Kind::Pi:
      return type_eq(a->ty(), b->ty()) && alpha_rec(a->operand(), b->operand(), ba, bb);
    case Term::Kind::Or:
      return alpha_rec(a->lhs(), b->lhs(), ba, bb) && alpha_rec(a->rhs(), b->rhs(), ba, bb);
    case Term::Kind::Eq:
      return type_eq(a->ty(), b->ty()) && alpha_rec(a->lhs(), b->lhs(), ba, bb) &&
             alpha_rec(a->rhs(), b->rhs(), ba, bb);
  }
  return false;
}

}  // namespace detail

inline bool alpha_eq(const TermRef& a, const TermRef& b) {
  std::vector<detail::Binder> ba, bb;
  return detail::alpha_rec(a, b, ba, bb);
}

namespace detail {

inline void print_rec(const TermRef& t, std::string& out) {
  switch (t->kind()) {
    case Term::Kind::Const:
    case Term::Kind::Var:
      out += t->name();
      return;
    case Term::Kind::Lam:
      out += "^[" + t->name() + ":" + t->ty()->to_string() + "]: ";
      print_rec(t->body(), out);
      return;
    case Term::Kind::App: {
      // Flatten the application spine: (f @ a @ b).
      std::vector<TermRef> spine;
      TermRef h = t;
      while (h->kind() == Term::Kind::App) {
        spine.push_back(h->arg());
        h = h->fn();
      }
      out += '(';
      print_rec(h, out);
      for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
        out += " @ ";
        print_rec(*it, out);
      }
      out += ')';
      return;
    }
    case Term::Kind::Neg:
      out += "~(";
      print_rec(t->operand(), out);
      out += ')';
      return;
    case Term::Kind::Or:
      out += '(';
      print_rec(t->lhs(), out);
      out += " | ";
      print_rec(t->rhs(), out);
      out += ')';
      return;
    case Term::Kind::Eq:
      out += '(';
      print_rec(t->lhs(), out);
      out += " = ";
      print_rec(t->rhs(), out);
      out += ')';
      return;
    case Term::Kind::Pi:
      if (t->operand()->kind() == Term::Kind::Lam) {
        const TermRef& l = t->operand();
        out += "![" + l->name() + ":" + l->ty()->to_string() + "]: ";
        print_rec(l->body(), out);
        return;
      }
      out += "(!! @ ";
      print_rec(t->operand(), out);
      out += ')';
      return;
  }
}

}  // namespace detail

// Debug rendering, THF-flavoured: ^[X:mu]: (r @ W @ X).
inline std::string to_string(const TermRef& t) {
  std::string out;
  detail::print_rec(t, out);
  return out;
}

}  // namespace qmlstt::stt

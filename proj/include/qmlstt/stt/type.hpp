#pragma once

#include <cassert>
#include <memory>
#include <string>

namespace qmlstt::stt {

// Simple types over three base types:
//   o    truth values
//   iota individuals
//   mu   worlds
// plus the function space arrow, right associative.
enum class BaseName { O, Iota, Mu };

class Type;
using TypeRef = std::shared_ptr<const Type>;

class Type {
 public:
  static TypeRef o();
  static TypeRef iota();
  static TypeRef mu();
  static TypeRef arrow(TypeRef dom, TypeRef cod);

  bool is_base() const { return !dom_; }
  bool is_arrow() const { return static_cast<bool>(dom_); }

  BaseName base_name() const {
    assert(is_base());
    return base_;
  }
  const TypeRef& domain() const {
    assert(is_arrow());
    return dom_;
  }
  const TypeRef& codomain() const {
    assert(is_arrow());
    return cod_;
  }

  std::string to_string() const {
    if (is_base()) {
      switch (base_) {
        case BaseName::O: return "$o";
        case BaseName::Iota: return "$i";
        case BaseName::Mu: return "mu";
      }
      return "?";
    }
    // Arrow is right associative; parenthesize arrow domains only.
    std::string d = dom_->to_string();
    if (dom_->is_arrow()) d = "(" + d + ")";
    return d + ">" + cod_->to_string();
  }

 private:
  explicit Type(BaseName b) : base_(b) {}
  Type(TypeRef d, TypeRef c) : base_(BaseName::O), dom_(std::move(d)), cod_(std::move(c)) {}

  BaseName base_;
  TypeRef dom_;
  TypeRef cod_;
};

inline TypeRef Type::o() {
  static const TypeRef t(new Type(BaseName::O));
  return t;
}
inline TypeRef Type::iota() {
  static const TypeRef t(new Type(BaseName::Iota));
  return t;
}
inline TypeRef Type::mu() {
  static const TypeRef t(new Type(BaseName::Mu));
  return t;
}
inline TypeRef Type::arrow(TypeRef dom, TypeRef cod) {
  assert(dom && cod);
  return TypeRef(new Type(std::move(dom), std::move(cod)));
}

inline bool type_eq(const TypeRef& a, const TypeRef& b) {
  if (a.get() == b.get()) return true;
  if (a->is_base() != b->is_base()) return false;
  if (a->is_base()) return a->base_name() == b->base_name();
  return type_eq(a->domain(), b->domain()) && type_eq(a->codomain(), b->codomain());
}

// mu > o : sets of worlds, the type of embedded formulas.
inline TypeRef prop_type() {
  static const TypeRef t = Type::arrow(Type::mu(), Type::o());
  return t;
}

// mu > mu > o : accessibility relations.
inline TypeRef rel_type() {
  static const TypeRef t = Type::arrow(Type::mu(), prop_type());
  return t;
}

// iota^n > mu > o : n-ary predicate symbols.
inline TypeRef pred_type(int arity) {
  TypeRef t = prop_type();
  for (int i = 0; i < arity; ++i) t = Type::arrow(Type::iota(), t);
  return t;
}

}  // namespace qmlstt::stt

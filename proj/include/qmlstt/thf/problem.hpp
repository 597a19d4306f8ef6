#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/stt/ops.hpp"
#include "qmlstt/stt/term.hpp"
#include "qmlstt/stt/type.hpp"

namespace qmlstt::thf {

// One annotated formula of a typed higher-order problem file.
//
//   TypeDecl:    symbol + declared_type; a null declared_type declares the
//                symbol as a new base type ($tType) rather than a term.
//   Definition:  symbol + formula (the definiens, of the symbol's type).
//   Axiom,
//   Conjecture:  formula, a closed term of type $o.
enum class ThfRole { TypeDecl, Definition, Axiom, Conjecture };

inline const char* to_string(ThfRole r) {
  switch (r) {
    case ThfRole::TypeDecl: return "type";
    case ThfRole::Definition: return "definition";
    case ThfRole::Axiom: return "axiom";
    case ThfRole::Conjecture: return "conjecture";
  }
  return "?";
}

struct ThfEntry {
  ThfRole role;
  std::string name;
  std::string symbol;          // TypeDecl / Definition only
  stt::TypeRef declared_type;  // TypeDecl only; null means $tType
  stt::TermRef formula;        // Definition / Axiom / Conjecture
};

struct ThfProblem {
  std::vector<std::string> header;  // leading comment lines, no '%'
  std::vector<ThfEntry> entries;

  // Structural sanity: unique entry names, every symbol declared (with the
  // type it is used at) before use, definitions matching their declaration,
  // axioms and the single conjecture closed and boolean.  A fragment meant
  // for inclusion (an axiom file without a goal) validates with
  // require_conjecture = false; more than one conjecture is always an error.
  void validate(bool require_conjecture = true) const {
    std::set<std::string> names;
    std::map<std::string, stt::TypeRef> declared;  // symbol -> type (null = base type)
    int conjectures = 0;

    auto check_term = [&](const stt::TermRef& t, const std::string& where) {
      for (const auto& [name, ty] : term_constants(t)) {
        auto it = declared.find(name);
        if (it == declared.end())
          throw Error(where + ": symbol '" + name + "' used before declaration");
        if (!it->second || !stt::type_eq(it->second, ty))
          throw IllTyped(where + "." + name, it->second ? it->second->to_string() : "$tType",
                         ty->to_string());
      }
      if (!stt::free_vars(t).empty())
        throw Error(where + ": formula has free variables");
    };

    for (const auto& e : entries) {
      if (e.name.empty()) throw Error("entry with empty name");
      if (!names.insert(e.name).second) throw Error("duplicate entry name: " + e.name);
      switch (e.role) {
        case ThfRole::TypeDecl: {
          if (e.symbol.empty()) throw Error(e.name + ": type declaration without symbol");
          if (declared.count(e.symbol))
            throw Error(e.name + ": symbol '" + e.symbol + "' declared twice");
          if (e.declared_type) require_bases_declared(e.declared_type, declared, e.name);
          declared.emplace(e.symbol, e.declared_type);
          break;
        }
        case ThfRole::Definition: {
          auto it = declared.find(e.symbol);
          if (it == declared.end() || !it->second)
            throw Error(e.name + ": definition of undeclared symbol '" + e.symbol + "'");
          if (!e.formula) throw Error(e.name + ": definition without definiens");
          check_term(e.formula, e.name);
          stt::TypeRef got = stt::type_of(e.formula);
          if (!stt::type_eq(got, it->second))
            throw IllTyped(e.name, it->second->to_string(), got->to_string());
          break;
        }
        case ThfRole::Axiom:
        case ThfRole::Conjecture: {
          if (e.role == ThfRole::Conjecture) ++conjectures;
          if (!e.formula) throw Error(e.name + ": missing formula");
          check_term(e.formula, e.name);
          stt::TypeRef got = stt::type_of(e.formula);
          if (!stt::type_eq(got, stt::Type::o()))
            throw IllTyped(e.name, "$o", got->to_string());
          break;
        }
      }
    }
    if (conjectures > 1 || (require_conjecture && conjectures == 0))
      throw Error("problem must contain exactly one conjecture, found " +
                  std::to_string(conjectures));
  }

 private:
  static void collect_constants(const stt::TermRef& t,
                                std::map<std::string, stt::TypeRef>& out) {
    using K = stt::Term::Kind;
    switch (t->kind()) {
      case K::Const: {
        auto [it, fresh] = out.emplace(t->name(), t->ty());
        if (!fresh && !stt::type_eq(it->second, t->ty()))
          throw IllTyped(t->name(), it->second->to_string(), t->ty()->to_string());
        return;
      }
      case K::Var:
        return;
      case K::Lam:
        collect_constants(t->body(), out);
        return;
      case K::App:
        collect_constants(t->fn(), out);
        collect_constants(t->arg(), out);
        return;
      case K::Neg:
      case K::Pi:
        collect_constants(t->operand(), out);
        return;
      case K::Or:
      case K::Eq:
        collect_constants(t->lhs(), out);
        collect_constants(t->rhs(), out);
        return;
    }
  }

  static std::map<std::string, stt::TypeRef> term_constants(const stt::TermRef& t) {
    std::map<std::string, stt::TypeRef> out;
    collect_constants(t, out);
    return out;
  }

  // Custom base types used in a symbol's type must already be declared.
  static void require_bases_declared(const stt::TypeRef& ty,
                                     const std::map<std::string, stt::TypeRef>& declared,
                                     const std::string& where) {
    if (ty->is_base()) {
      if (ty->base_name() == stt::BaseName::Mu && !declared.count("mu"))
        throw Error(where + ": type uses 'mu' before its declaration");
      return;
    }
    require_bases_declared(ty->domain(), declared, where);
    require_bases_declared(ty->codomain(), declared, where);
  }
};

}  // namespace qmlstt::thf

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/qml/formula.hpp"

namespace qmlstt::qml {

// Concrete formula syntax.
//
//   formula  :=  disjunct ( "=>" formula )?                 right associative
//   disjunct :=  conjunct ( "|" conjunct )*
//   conjunct :=  unary ( "&" unary )*
//   unary    :=  "~" unary  |  "[" rel "]" unary  |  "<" rel ">" unary
//             |  ("forall" | "exists") Var ":" ("ind" | "prop") "." formula
//             |  atom
//   atom     :=  "true" | "false" | Var | pred ( "(" Var ("," Var)* ")" )?
//             |  "(" formula ")"
//
// Quantifiers scope as far right as possible.  Identifiers starting with an
// upper-case letter are variables, those starting with a lower-case letter
// are predicates or relation indices.  &, =>, <r>, exists, true and false
// are rewritten into the core connectives while parsing.

namespace detail {

struct Token {
  enum class Kind {
    LIdent, UIdent, Forall, Exists, True, False, IndSort, PropSort,
    Tilde, Bar, Amp, Arrow, LParen, RParen, LBrack, RBrack, Less, Greater,
    Dot, Colon, Comma, End
  };
  Kind kind;
  std::string text;
  int line;
  int col;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string text, int ln, int cl) {
    out.push_back({k, std::move(text), ln, cl});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    int ln = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      std::string word(src.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      if (word == "forall") push(Token::Kind::Forall, word, ln, cl);
      else if (word == "exists") push(Token::Kind::Exists, word, ln, cl);
      else if (word == "true") push(Token::Kind::True, word, ln, cl);
      else if (word == "false") push(Token::Kind::False, word, ln, cl);
      else if (word == "ind") push(Token::Kind::IndSort, word, ln, cl);
      else if (word == "prop") push(Token::Kind::PropSort, word, ln, cl);
      else if (std::isupper(static_cast<unsigned char>(word[0])))
        push(Token::Kind::UIdent, word, ln, cl);
      else
        push(Token::Kind::LIdent, word, ln, cl);
      continue;
    }
    ++i;
    ++col;
    switch (c) {
      case '~': push(Token::Kind::Tilde, "~", ln, cl); break;
      case '|': push(Token::Kind::Bar, "|", ln, cl); break;
      case '&': push(Token::Kind::Amp, "&", ln, cl); break;
      case '(': push(Token::Kind::LParen, "(", ln, cl); break;
      case ')': push(Token::Kind::RParen, ")", ln, cl); break;
      case '[': push(Token::Kind::LBrack, "[", ln, cl); break;
      case ']': push(Token::Kind::RBrack, "]", ln, cl); break;
      case '<': push(Token::Kind::Less, "<", ln, cl); break;
      case '>': push(Token::Kind::Greater, ">", ln, cl); break;
      case '.': push(Token::Kind::Dot, ".", ln, cl); break;
      case ':': push(Token::Kind::Colon, ":", ln, cl); break;
      case ',': push(Token::Kind::Comma, ",", ln, cl); break;
      case '=':
        if (i < src.size() && src[i] == '>') {
          ++i;
          ++col;
          push(Token::Kind::Arrow, "=>", ln, cl);
          break;
        }
        throw SyntaxError("stray '='", ln, cl);
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", ln, cl);
    }
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const Signature& sig)
      : toks_(std::move(toks)), sig_(sig) {}

  FormulaRef parse() {
    FormulaRef f = formula();
    expect(Token::Kind::End, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  Token expect(Token::Kind k, const char* what) {
    if (peek().kind != k)
      throw SyntaxError(std::string("expected ") + what + ", found '" + describe(peek()) + "'",
                        peek().line, peek().col);
    return next();
  }
  static std::string describe(const Token& t) {
    return t.kind == Token::Kind::End ? "end of input" : t.text;
  }

  bool bound_here(const std::string& n, bool prop) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (it->first == n && it->second == prop) return true;
    return false;
  }

  FormulaRef formula() {
    FormulaRef l = disjunct();
    if (accept(Token::Kind::Arrow)) return implies(std::move(l), formula());
    return l;
  }

  FormulaRef disjunct() {
    FormulaRef l = conjunct();
    while (accept(Token::Kind::Bar)) l = disj(std::move(l), conjunct());
    return l;
  }

  FormulaRef conjunct() {
    FormulaRef l = unary();
    while (accept(Token::Kind::Amp)) l = conj(std::move(l), unary());
    return l;
  }

  std::string relation_index() {
    Token t = expect(Token::Kind::LIdent, "relation index");
    if (!sig_.rels.count(t.text))
      throw UnknownSymbol("undeclared relation '" + t.text + "'", t.line, t.col);
    return t.text;
  }

  FormulaRef unary() {
    if (accept(Token::Kind::Tilde)) return neg(unary());
    if (accept(Token::Kind::LBrack)) {
      std::string r = relation_index();
      expect(Token::Kind::RBrack, "']'");
      return Formula::box(r, unary());
    }
    if (accept(Token::Kind::Less)) {
      std::string r = relation_index();
      expect(Token::Kind::Greater, "'>'");
      return dia(r, unary());
    }
    if (peek().kind == Token::Kind::Forall || peek().kind == Token::Kind::Exists) {
      bool universal = next().kind == Token::Kind::Forall;
      Token v = expect(Token::Kind::UIdent, "variable");
      expect(Token::Kind::Colon, "':'");
      bool prop_sort;
      if (accept(Token::Kind::IndSort)) prop_sort = false;
      else if (accept(Token::Kind::PropSort)) prop_sort = true;
      else
        throw SyntaxError("expected sort 'ind' or 'prop', found '" + describe(peek()) + "'",
                          peek().line, peek().col);
      expect(Token::Kind::Dot, "'.'");
      bound_.emplace_back(v.text, prop_sort);
      FormulaRef body = formula();  // quantifiers scope maximally
      bound_.pop_back();
      if (universal)
        return prop_sort ? Formula::forall_prop(v.text, std::move(body))
                         : Formula::forall_ind(v.text, std::move(body));
      return prop_sort ? exists_prop(v.text, std::move(body))
                       : exists_ind(v.text, std::move(body));
    }
    return atom();
  }

  // true is shorthand for "some tautology": a propositional quantification
  // over P | ~P with a variable name that collides with nothing in scope.
  FormulaRef truth() {
    std::string name = "T";
    auto taken = [&](const std::string& n) {
      if (sig_.prop_vars.count(n) || sig_.ind_vars.count(n)) return true;
      for (const auto& [bn, _] : bound_)
        if (bn == n) return true;
      return false;
    };
    for (int i = 1; taken(name); ++i) name = "T" + std::to_string(i);
    return Formula::forall_prop(name, disj(Formula::prop_var(name),
                                           neg(Formula::prop_var(name))));
  }

  FormulaRef atom() {
    if (accept(Token::Kind::True)) return truth();
    if (accept(Token::Kind::False)) return neg(truth());
    if (accept(Token::Kind::LParen)) {
      FormulaRef f = formula();
      expect(Token::Kind::RParen, "')'");
      return f;
    }
    if (peek().kind == Token::Kind::UIdent) {
      Token v = next();
      if (bound_here(v.text, true) || sig_.prop_vars.count(v.text))
        return Formula::prop_var(v.text);
      if (bound_here(v.text, false) || sig_.ind_vars.count(v.text))
        throw SyntaxError("individual variable '" + v.text + "' used as a formula", v.line,
                          v.col);
      throw UnknownSymbol("undeclared propositional variable '" + v.text + "'", v.line, v.col);
    }
    if (peek().kind == Token::Kind::LIdent) {
      Token p = next();
      auto it = sig_.preds.find(p.text);
      if (it == sig_.preds.end()) {
        if (sig_.rels.count(p.text))
          throw SyntaxError("relation '" + p.text + "' used as a formula", p.line, p.col);
        throw UnknownSymbol("undeclared predicate '" + p.text + "'", p.line, p.col);
      }
      std::vector<std::string> args;
      if (accept(Token::Kind::LParen)) {
        if (!accept(Token::Kind::RParen)) {
          do {
            Token a = expect(Token::Kind::UIdent, "individual variable");
            if (!bound_here(a.text, false) && !sig_.ind_vars.count(a.text)) {
              if (bound_here(a.text, true) || sig_.prop_vars.count(a.text))
                throw SyntaxError("propositional variable '" + a.text +
                                      "' used as an individual argument",
                                  a.line, a.col);
              throw UnknownSymbol("undeclared individual variable '" + a.text + "'", a.line,
                                  a.col);
            }
            args.push_back(a.text);
          } while (accept(Token::Kind::Comma));
          expect(Token::Kind::RParen, "')'");
        }
      }
      if (static_cast<int>(args.size()) != it->second)
        throw ArityMismatch("predicate '" + p.text + "' expects " + std::to_string(it->second) +
                                " arguments, got " + std::to_string(args.size()),
                            p.line, p.col);
      return Formula::atom(p.text, std::move(args));
    }
    throw SyntaxError("expected a formula, found '" + describe(peek()) + "'", peek().line,
                      peek().col);
  }

  std::vector<Token> toks_;
  const Signature& sig_;
  std::vector<std::pair<std::string, bool>> bound_;  // (name, is_prop)
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FormulaRef parse_formula(std::string_view text, const Signature& sig) {
  sig.validate();
  detail::Parser p(detail::tokenize(text), sig);
  return p.parse();
}

}  // namespace qmlstt::qml

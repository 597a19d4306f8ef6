#pragma once

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/stt/ops.hpp"
#include "qmlstt/thf/problem.hpp"

namespace qmlstt::thf {

// Parser for the canonical rendering produced by render_problem: every
// compound term parenthesized, binary '@' applications, typed binders.
// Comment lines before the first annotated formula become the header.

namespace detail {

struct ThfToken {
  enum class Kind { LWord, UWord, DWord, Punct, End };
  Kind kind;
  std::string text;
  int line, col;
};

class ThfLexer {
 public:
  explicit ThfLexer(const std::string& text) : s_(text) { advance(); }

  const ThfToken& peek() const { return tok_; }

  ThfToken take() {
    ThfToken t = tok_;
    advance();
    return t;
  }

  ThfToken expect(const std::string& punct) {
    if (tok_.kind != ThfToken::Kind::Punct || tok_.text != punct)
      throw SyntaxError("expected '" + punct + "', found '" + tok_.text + "'",
                        tok_.line, tok_.col);
    return take();
  }

  std::vector<std::string>& header() { return header_; }

 private:
  void advance() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '\n') { ++line_; col_ = 1; ++i_; continue; }
      if (std::isspace(static_cast<unsigned char>(c))) { ++col_; ++i_; continue; }
      if (c == '%') {
        std::size_t start = i_ + 1;
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
        if (!seen_entry_) {
          std::string line = s_.substr(start, i_ - start);
          if (!line.empty() && line.front() == ' ') line.erase(0, 1);
          header_.push_back(line);
        }
        continue;
      }
      break;
    }
    if (i_ >= s_.size()) {
      tok_ = {ThfToken::Kind::End, "", line_, col_};
      return;
    }
    int line = line_, col = col_;
    char c = s_[i_];
    auto word_tail = [&](std::size_t start) {
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      std::string w = s_.substr(start, i_ - start);
      col_ += static_cast<int>(i_ - start);
      return w;
    };
    if (c == '$') {
      std::size_t start = i_++;
      ++col_;
      std::string w = "$" + word_tail(i_);
      tok_ = {ThfToken::Kind::DWord, w, line, col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string w = word_tail(i_);
      if (w == "thf") seen_entry_ = true;
      tok_ = {std::isupper(static_cast<unsigned char>(c)) ? ThfToken::Kind::UWord
                                                          : ThfToken::Kind::LWord,
              w, line, col};
      return;
    }
    static const std::string puncts = "()[]:,.=|~^!@>";
    if (puncts.find(c) != std::string::npos) {
      ++i_;
      ++col_;
      tok_ = {ThfToken::Kind::Punct, std::string(1, c), line, col};
      return;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
  }

  const std::string& s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
  bool seen_entry_ = false;
  ThfToken tok_{ThfToken::Kind::End, "", 1, 1};
  std::vector<std::string> header_;
};

class ThfParser {
 public:
  explicit ThfParser(const std::string& text) : lex_(text) {}

  ThfProblem problem() {
    ThfProblem p;
    while (lex_.peek().kind != ThfToken::Kind::End) p.entries.push_back(entry());
    p.header = lex_.header();
    return p;
  }

 private:
  ThfEntry entry() {
    ThfToken kw = lex_.take();
    if (kw.kind != ThfToken::Kind::LWord || kw.text != "thf")
      throw SyntaxError("expected 'thf', found '" + kw.text + "'", kw.line, kw.col);
    lex_.expect("(");
    std::string name = lower_word("entry name");
    lex_.expect(",");
    std::string role = lower_word("role");
    lex_.expect(",");

    ThfEntry e;
    e.name = name;
    if (role == "type") {
      e.role = ThfRole::TypeDecl;
      e.symbol = lower_word("declared symbol");
      lex_.expect(":");
      if (lex_.peek().kind == ThfToken::Kind::DWord && lex_.peek().text == "$tType") {
        lex_.take();
        e.declared_type = nullptr;
        declared_.emplace(e.symbol, nullptr);
      } else {
        e.declared_type = type();
        declared_.emplace(e.symbol, e.declared_type);
      }
    } else if (role == "definition") {
      e.role = ThfRole::Definition;
      lex_.expect("(");
      e.symbol = lower_word("defined symbol");
      lex_.expect("=");
      e.formula = term();
      lex_.expect(")");
    } else if (role == "axiom" || role == "conjecture") {
      e.role = role == "axiom" ? ThfRole::Axiom : ThfRole::Conjecture;
      e.formula = term();
    } else {
      throw SyntaxError("unknown role '" + role + "'", kw.line, kw.col);
    }
    lex_.expect(")");
    lex_.expect(".");
    return e;
  }

  std::string lower_word(const char* what) {
    ThfToken t = lex_.take();
    if (t.kind != ThfToken::Kind::LWord)
      throw SyntaxError("expected " + std::string(what) + ", found '" + t.text + "'",
                        t.line, t.col);
    return t.text;
  }

  stt::TypeRef type() {
    stt::TypeRef lhs = type_primary();
    if (lex_.peek().kind == ThfToken::Kind::Punct && lex_.peek().text == ">") {
      lex_.take();
      return stt::Type::arrow(lhs, type());
    }
    return lhs;
  }

  stt::TypeRef type_primary() {
    ThfToken t = lex_.take();
    if (t.kind == ThfToken::Kind::DWord) {
      if (t.text == "$o") return stt::Type::o();
      if (t.text == "$i") return stt::Type::iota();
      throw SyntaxError("unknown builtin type '" + t.text + "'", t.line, t.col);
    }
    if (t.kind == ThfToken::Kind::LWord) {
      if (t.text == "mu") return stt::Type::mu();
      throw SyntaxError("unknown type '" + t.text + "'", t.line, t.col);
    }
    if (t.kind == ThfToken::Kind::Punct && t.text == "(") {
      stt::TypeRef inner = type();
      lex_.expect(")");
      return inner;
    }
    throw SyntaxError("expected a type, found '" + t.text + "'", t.line, t.col);
  }

  stt::TermRef term() {
    const ThfToken& t = lex_.peek();
    if (t.kind == ThfToken::Kind::UWord) return variable_use(lex_.take());
    if (t.kind == ThfToken::Kind::LWord) return constant_use(lex_.take());
    if (t.kind == ThfToken::Kind::Punct && t.text == "(") {
      lex_.take();
      stt::TermRef inner = compound();
      lex_.expect(")");
      return inner;
    }
    throw SyntaxError("expected a term, found '" + t.text + "'", t.line, t.col);
  }

  stt::TermRef compound() {
    const ThfToken& t = lex_.peek();
    if (t.kind == ThfToken::Kind::Punct && (t.text == "^" || t.text == "!")) {
      bool is_pi = t.text == "!";
      lex_.take();
      lex_.expect("[");
      ThfToken v = lex_.take();
      if (v.kind != ThfToken::Kind::UWord)
        throw SyntaxError("expected a bound variable, found '" + v.text + "'",
                          v.line, v.col);
      lex_.expect(":");
      stt::TypeRef ty = type();
      lex_.expect("]");
      lex_.expect(":");
      scope_.emplace_back(v.text, ty);
      stt::TermRef body = term();
      scope_.pop_back();
      stt::TermRef l = stt::lam(v.text, ty, body);
      return is_pi ? stt::pi(l, ty) : l;
    }
    if (t.kind == ThfToken::Kind::Punct && t.text == "~") {
      lex_.take();
      return stt::neg(term());
    }
    stt::TermRef first = term();
    const ThfToken& op = lex_.peek();
    if (op.kind == ThfToken::Kind::Punct && op.text == "@") {
      stt::TermRef acc = first;
      while (lex_.peek().kind == ThfToken::Kind::Punct && lex_.peek().text == "@") {
        lex_.take();
        acc = stt::app(acc, term());
      }
      return acc;
    }
    if (op.kind == ThfToken::Kind::Punct && op.text == "|") {
      lex_.take();
      return stt::disj(first, term());
    }
    if (op.kind == ThfToken::Kind::Punct && op.text == "=") {
      lex_.take();
      stt::TermRef rhs = term();
      return stt::equal(first, rhs, stt::type_of(first));
    }
    throw SyntaxError("expected '@', '|' or '=', found '" + op.text + "'", op.line,
                      op.col);
  }

  stt::TermRef variable_use(const ThfToken& t) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == t.text) return stt::variable(t.text, it->second);
    throw SyntaxError("unbound variable '" + t.text + "'", t.line, t.col);
  }

  stt::TermRef constant_use(const ThfToken& t) {
    auto it = declared_.find(t.text);
    if (it == declared_.end())
      throw SyntaxError("undeclared symbol '" + t.text + "'", t.line, t.col);
    if (!it->second)
      throw SyntaxError("type name '" + t.text + "' used as a term", t.line, t.col);
    return stt::constant(t.text, it->second);
  }

  ThfLexer lex_;
  std::map<std::string, stt::TypeRef> declared_;
  std::vector<std::pair<std::string, stt::TypeRef>> scope_;
};

}  // namespace detail

inline ThfProblem parse_problem(const std::string& text) {
  return detail::ThfParser(text).problem();
}

}  // namespace qmlstt::thf

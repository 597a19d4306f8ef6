#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/qml/formula.hpp"
#include "qmlstt/qml/parse.hpp"

namespace qmlstt::cli {

// Line-oriented problem files: a signature block of declarations, optional
// axioms, and exactly one conjecture.
//
//   # comment                 (leading comments become the file's header)
//   rel r
//   pred p/1
//   propvar P
//   indvar X
//   axiom: [r](P | ~P)
//   conjecture: [r] exists P:prop. P
//
// Declarations must precede the first formula line.  Formulas use the usual
// formula syntax and may only mention declared names.
struct ProblemFile {
  qml::Signature sig;
  std::vector<qml::FormulaRef> axioms;
  qml::FormulaRef conjecture;
  std::vector<std::string> comments;  // leading '#' lines, marker stripped
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline bool valid_name(const std::string& s, bool upper) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  if (upper != static_cast<bool>(std::isupper(static_cast<unsigned char>(s.front()))))
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace detail

inline ProblemFile parse_problem_file(const std::string& text) {
  ProblemFile pf;
  // First pass: split into declarations and formula texts, enforcing that
  // the signature block comes first, so every formula sees the full
  // signature when parsed below.
  std::vector<std::pair<int, std::string>> axiom_texts;
  std::pair<int, std::string> conjecture_text{0, ""};
  bool saw_conjecture = false;
  bool saw_formula = false;
  bool past_header = false;

  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    std::string line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!past_header) {
        std::string body = line.substr(1);
        if (!body.empty() && body.front() == ' ') body.erase(0, 1);
        pf.comments.push_back(body);
      }
      continue;
    }
    past_header = true;

    std::istringstream ls(line);
    std::string word;
    ls >> word;
    auto rest_of = [&] {
      std::string rest;
      std::getline(ls, rest);
      return detail::trim(rest);
    };

    if (word == "axiom:" || word == "conjecture:") {
      std::string body = rest_of();
      if (body.empty())
        throw SyntaxError("missing formula after '" + word + "'", ln, 1);
      saw_formula = true;
      if (word == "axiom:") {
        axiom_texts.emplace_back(ln, body);
      } else {
        if (saw_conjecture)
          throw SyntaxError("second conjecture (a problem has exactly one)", ln, 1);
        saw_conjecture = true;
        conjecture_text = {ln, body};
      }
      continue;
    }

    if (saw_formula)
      throw SyntaxError("declaration after the first formula; the signature "
                        "block must come first",
                        ln, 1);

    if (word == "rel" || word == "propvar" || word == "indvar") {
      std::string name = rest_of();
      bool upper = word != "rel";
      if (!detail::valid_name(name, upper))
        throw SyntaxError("'" + word + "' needs one " +
                              (upper ? "capitalized" : "lowercase") + " name",
                          ln, 1);
      auto& space = word == "rel"       ? pf.sig.rels
                    : word == "propvar" ? pf.sig.prop_vars
                                        : pf.sig.ind_vars;
      if (!space.insert(name).second)
        throw SyntaxError("duplicate declaration of '" + name + "'", ln, 1);
      continue;
    }
    if (word == "pred") {
      std::string spec = rest_of();
      std::size_t slash = spec.find('/');
      if (slash == std::string::npos)
        throw SyntaxError("'pred' needs name/arity, e.g. pred p/1", ln, 1);
      std::string name = detail::trim(spec.substr(0, slash));
      std::string digits = detail::trim(spec.substr(slash + 1));
      if (!detail::valid_name(name, false) || digits.empty() ||
          digits.find_first_not_of("0123456789") != std::string::npos)
        throw SyntaxError("'pred' needs name/arity, e.g. pred p/1", ln, 1);
      int arity = 0;
      for (char c : digits) {
        arity = arity * 10 + (c - '0');
        if (arity > 8) throw SyntaxError("predicate arity above 8", ln, 1);
      }
      if (!pf.sig.preds.emplace(name, arity).second)
        throw SyntaxError("duplicate declaration of '" + name + "'", ln, 1);
      continue;
    }
    throw SyntaxError("unrecognized line (expected a declaration, 'axiom:', "
                      "or 'conjecture:'): " + line,
                      ln, 1);
  }

  if (!saw_conjecture) throw SyntaxError("problem file has no conjecture");
  pf.sig.validate();

  // Second pass: parse formulas against the complete signature, pointing
  // errors back at the file line.
  auto parse_at = [&](const std::pair<int, std::string>& src) {
    try {
      return qml::parse_formula(src.second, pf.sig);
    } catch (const SyntaxError& e) {
      throw SyntaxError("line " + std::to_string(src.first) + ": " + e.what());
    }
  };
  for (const auto& ax : axiom_texts) pf.axioms.push_back(parse_at(ax));
  pf.conjecture = parse_at(conjecture_text);
  return pf;
}

inline ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading problem file: " + path);
  return parse_problem_file(buf.str());
}

}  // namespace qmlstt::cli

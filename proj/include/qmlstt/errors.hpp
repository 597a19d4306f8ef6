#pragma once

#include <stdexcept>
#include <string>

namespace qmlstt {

// Base for everything thrown by this library, so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A term tree that does not type-check.
struct IllTyped : Error {
  std::string position;
  std::string expected;
  std::string found;
  IllTyped(std::string pos, std::string exp, std::string fnd)
      : Error("ill-typed term at " + pos + ": expected " + exp + ", found " + fnd),
        position(std::move(pos)), expected(std::move(exp)), found(std::move(fnd)) {}
};

// Malformed concrete syntax (formula text, problem files, THF files).
struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(const std::string& msg, int ln = 0, int col = 0)
      : Error(ln > 0 ? msg + " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")"
                     : msg),
        line(ln), column(col) {}
};

// Identifier not declared in the signature in force.
struct UnknownSymbol : SyntaxError {
  using SyntaxError::SyntaxError;
};

// Predicate applied to the wrong number of arguments.
struct ArityMismatch : SyntaxError {
  using SyntaxError::SyntaxError;
};

// Variable evaluated without a binding in the environment.
struct UnboundVariable : Error {
  explicit UnboundVariable(const std::string& name) : Error("unbound variable: " + name) {}
};

// Constant evaluated without an interpretation in the frame.
struct UnknownConstant : Error {
  explicit UnknownConstant(const std::string& name) : Error("uninterpreted constant: " + name) {}
};

// Name looked up in the operator table but absent or typed differently.
struct UnknownDefinition : Error {
  explicit UnknownDefinition(const std::string& name) : Error("no operator definition for: " + name) {}
};

// Term outside the image of the formula embedding where one was required.
struct NotEmbedded : Error {
  explicit NotEmbedded(const std::string& what) : Error(what) {}
};

// A configured ceiling (model count, domain size, assignment count) was hit
// before the requested computation finished.
struct ResourceBound : Error {
  explicit ResourceBound(const std::string& what) : Error("resource bound exceeded: " + what) {}
};

// A model shape the requested conversion cannot represent.
struct UnsupportedModel : Error {
  explicit UnsupportedModel(const std::string& what) : Error(what) {}
};

// External process could not be spawned or died without usable output.
struct ProcessFailure : Error {
  explicit ProcessFailure(const std::string& what) : Error(what) {}
};

// External process ran but produced output we cannot interpret.
struct UnparsableOutput : Error {
  explicit UnparsableOutput(const std::string& what) : Error(what) {}
};

// File system problem (missing input, unwritable output).
struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace qmlstt

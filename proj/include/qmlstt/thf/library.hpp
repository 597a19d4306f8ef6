#pragma once

#include <string>

#include "qmlstt/qml/parse.hpp"
#include "qmlstt/thf/build.hpp"
#include "qmlstt/thf/problem.hpp"

namespace qmlstt::thf {

// Built-in problems whose conjectures quantify over relations or predicates
// at the simple-type-theory level, which the formula language cannot
// express, plus the bare connective axiom file.

// The world type and connective definitions alone: an axiom file other
// problems could include, and the set whose consistency the finite model
// check witnesses.  No conjecture, so validate with require_conjecture
// false.
inline ThfProblem operator_axioms_fragment() {
  ThfProblem p;
  p.header = {"Lifted modal connectives over the world type mu.",
              "Each connective is declared and then defined; definitions",
              "only use connectives introduced earlier."};
  append_operator_entries(p);
  p.validate(false);
  return p;
}

namespace detail {

inline stt::TermRef op(const std::string& name) {
  return embedding::operator_const(name);
}

inline stt::TermRef land(const stt::TermRef& a, const stt::TermRef& b) {
  return stt::neg(stt::disj(stt::neg(a), stt::neg(b)));
}

inline stt::TermRef limp(const stt::TermRef& a, const stt::TermRef& b) {
  return stt::disj(stt::neg(a), b);
}

inline stt::TermRef exists(const std::string& x, const stt::TypeRef& ty,
                           const stt::TermRef& body) {
  return stt::neg(stt::forall(x, ty, stt::neg(body)));
}

}  // namespace detail

// Two exchange principles between a quantifier and a modality — diamond over
// a universal against a universal over diamonds, and an existential over
// boxes against a box over an existential — are equivalent for every
// relation and every predicate.  The equivalence is an equation at $o
// between the two validity claims, universally quantified over the relation
// and the predicate at the simple-type-theory level.
inline ThfProblem quantifier_exchange_problem() {
  using namespace stt;
  using detail::op;
  TypeRef io = Type::iota();
  TypeRef rel = rel_type();
  TypeRef pred = pred_type(1);

  TermRef R = variable("R", rel);
  TermRef P = variable("P", pred);
  auto px = [&](const char* x) { return app(P, variable(x, io)); };

  TermRef dia_all = app(op("mimplies"),
                        {app(op("mdia"),
                             {R, app(op("mforall_ind"), lam("X", io, px("X")))}),
                         app(op("mforall_ind"),
                             lam("X", io, app(op("mdia"), {R, px("X")})))});
  TermRef ex_box = app(op("mimplies"),
                       {app(op("mexists_ind"),
                            lam("X", io, app(op("mbox"), {R, px("X")}))),
                        app(op("mbox"),
                            {R, app(op("mexists_ind"), lam("X", io, px("X")))})});
  TermRef conj = forall(
      "R", rel,
      forall("P", pred,
             equal(app(op("mvalid"), dia_all), app(op("mvalid"), ex_box),
                   Type::o())));

  ThfProblem p;
  p.header = {"Quantifier exchange: validity of the diamond/universal",
              "exchange principle coincides with validity of the",
              "existential/box exchange principle, for every relation R",
              "and every predicate P."};
  append_operator_entries(p);
  p.entries.push_back({ThfRole::Conjecture, "goal", "", nullptr, conj});
  p.validate();
  return p;
}

// Correspondence between the modal scheme dia_i box_j P implies box_k dia_l P
// (P ranging over all propositions) and first-order confluence of the four
// accessibility relations: from any fork i to B and k to C there is a world
// joining them via j and l.  Stated as an equation at $o with the relations
// as declared constants.
inline ThfProblem confluence_problem() {
  using namespace stt;
  using detail::op;
  TypeRef mu = Type::mu();
  TypeRef rel = rel_type();
  TypeRef prop = prop_type();

  auto rc = [&](const char* name) { return constant(name, rel); };
  TermRef scheme = app(
      op("mvalid"),
      app(op("mforall_prop"),
          lam("P", prop,
              app(op("mimplies"),
                  {app(op("mdia"), {rc("i"), app(op("mbox"), {rc("j"), variable("P", prop)})}),
                   app(op("mbox"), {rc("k"), app(op("mdia"), {rc("l"), variable("P", prop)})})}))));

  auto edge = [&](const char* r, const char* a, const char* b) {
    return app(rc(r), {variable(a, mu), variable(b, mu)});
  };
  TermRef joined = detail::exists(
      "D", mu, detail::land(edge("j", "B", "D"), edge("l", "C", "D")));
  TermRef confluent = forall(
      "A", mu,
      forall("B", mu,
             forall("C", mu,
                    detail::limp(detail::land(edge("i", "A", "B"), edge("k", "A", "C")),
                                 joined))));

  ThfProblem p;
  p.header = {"Correspondence: the scheme dia_i box_j P implies box_k dia_l P",
              "holds for all propositions P exactly when the four relations",
              "are confluent: every i/k fork from a world is joined by j/l."};
  append_operator_entries(p);
  for (const char* r : {"i", "j", "k", "l"})
    p.entries.push_back(
        {ThfRole::TypeDecl, std::string(r) + "_type", r, rel, nullptr});
  p.entries.push_back({ThfRole::Conjecture, "goal", "", nullptr,
                       equal(scheme, confluent, Type::o())});
  p.validate();
  return p;
}

// Name-indexed access for the command line.
inline ThfProblem builtin_problem(const std::string& name) {
  if (name == "quantifier-exchange") return quantifier_exchange_problem();
  if (name == "confluence") return confluence_problem();
  throw Error("unknown builtin problem: " + name +
              " (available: quantifier-exchange, confluence)");
}

}  // namespace qmlstt::thf

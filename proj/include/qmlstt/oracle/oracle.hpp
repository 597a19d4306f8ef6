#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmlstt/embedding/embed.hpp"
#include "qmlstt/henkin/bridge.hpp"
#include "qmlstt/henkin/eval.hpp"
#include "qmlstt/kripke/classify.hpp"
#include "qmlstt/kripke/enumerate.hpp"
#include "qmlstt/kripke/satisfies.hpp"
#include "qmlstt/oracle/formulas.hpp"
#include "qmlstt/qml/print.hpp"

namespace qmlstt::oracle {

// Cross-checks between the two semantics: the relational evaluator works on
// the formula directly, the functional evaluator works on the expanded
// embedding over the corresponding frame.  The checks sweep exhaustively
// enumerated models, so a report with zero disagreements is a finite
// verification at the swept sizes, and the first disagreement (if any) is
// found at a minimal world count because enumeration ascends.

struct Counterexample {
  kripke::KripkeModel model;
  kripke::Assignment assignment;
  int world = 0;
  std::string formula;
  bool relational = false;
  bool functional = false;
};

struct OracleReport {
  std::uint64_t models = 0;
  std::uint64_t formulas = 0;
  std::uint64_t instances = 0;
  std::uint64_t disagreements = 0;
  std::optional<Counterexample> first;

  bool passed() const { return disagreements == 0; }
};

struct SweepLimits {
  int max_worlds = 2;
  int max_individuals = 1;
  FormulaLimits formulas;
};

// Compares the relational truth of `f` against the functional evaluation of
// the term `t` (normally its expanded embedding) over one model/frame pair,
// for every assignment of `fv` and every world.  Tallies into `rep`; only
// the first disagreement is recorded.  Exposed so that callers can also
// seed a deliberately mismatched pair and confirm detection works.
inline void compare_pointwise(const kripke::KripkeModel& m,
                              const henkin::FiniteFrame& frame,
                              const qml::FormulaRef& f, const qml::FreeVars& fv,
                              const stt::TermRef& t, OracleReport& rep) {
  kripke::for_each_assignment(m, fv, [&](const kripke::Assignment& g) {
    henkin::Env env = henkin::lift_assignment(g, m.num_worlds);
    henkin::Value v = henkin::eval_term(frame, env, t);
    const henkin::Value::Table& per_world = v.as_table();
    for (int w = 0; w < m.num_worlds; ++w) {
      bool rel = kripke::satisfies(m, g, w, f);
      bool fun = per_world[w].as_truth();
      ++rep.instances;
      if (rel != fun) {
        ++rep.disagreements;
        if (!rep.first)
          rep.first = Counterexample{m, g, w, qml::print_formula(f), rel, fun};
      }
    }
    return true;
  });
}

// Truth agreement per (model, assignment, world, formula): the relational
// evaluator on the formula against the functional evaluator on its expanded
// embedding.  Models carry the full powerset propositional domain, which is
// exactly what the full function space at type mu > o mirrors.
inline OracleReport check_pointwise_equivalence(const qml::Signature& sig,
                                                const SweepLimits& lim = {}) {
  OracleReport rep;
  std::vector<qml::FormulaRef> fs = enumerate_formulas(sig, lim.formulas);
  rep.formulas = fs.size();

  std::vector<stt::TermRef> terms;
  std::vector<qml::FreeVars> frees;
  terms.reserve(fs.size());
  frees.reserve(fs.size());
  for (const auto& f : fs) {
    terms.push_back(embedding::expand_definitions(embedding::embed(f, sig)));
    frees.push_back(qml::free_vars(f));
  }

  kripke::for_each_model(
      sig, lim.max_worlds, lim.max_individuals, kripke::PMode::Powerset,
      [&](const kripke::KripkeModel& m) {
        ++rep.models;
        henkin::FiniteFrame frame = henkin::frame_from_kripke(m, sig);
        for (std::size_t i = 0; i < fs.size(); ++i)
          compare_pointwise(m, frame, fs[i], frees[i], terms[i], rep);
        return true;
      });
  return rep;
}

// Validity agreement per (model, formula): valid in the relational sense
// (every world, every assignment) exactly when the expanded embedding
// evaluates to the all-true table under every assignment.
inline OracleReport check_validity_agreement_for(const qml::FormulaRef& f,
                                                 const qml::Signature& sig,
                                                 int max_worlds,
                                                 int max_individuals) {
  OracleReport rep;
  rep.formulas = 1;
  stt::TermRef t = embedding::expand_definitions(embedding::embed(f, sig));
  qml::FreeVars fv = qml::free_vars(f);

  kripke::for_each_model(
      sig, max_worlds, max_individuals, kripke::PMode::Powerset,
      [&](const kripke::KripkeModel& m) {
        ++rep.models;
        henkin::FiniteFrame frame = henkin::frame_from_kripke(m, sig);

        kripke::Falsifier fals;
        bool rel = kripke::valid_in_model(m, f, &fals);

        bool fun = true;
        kripke::Assignment fun_g;
        int fun_w = 0;
        kripke::for_each_assignment(m, fv, [&](const kripke::Assignment& g) {
          henkin::Env env = henkin::lift_assignment(g, m.num_worlds);
          henkin::Value v = henkin::eval_term(frame, env, t);
          const henkin::Value::Table& per_world = v.as_table();
          for (int w = 0; w < m.num_worlds; ++w)
            if (!per_world[w].as_truth()) {
              fun = false;
              fun_g = g;
              fun_w = w;
              return false;
            }
          return true;
        });

        ++rep.instances;
        if (rel != fun) {
          ++rep.disagreements;
          if (!rep.first)
            rep.first = Counterexample{m, rel ? fun_g : fals.assignment,
                                       rel ? fun_w : fals.world,
                                       qml::print_formula(f), rel, fun};
        }
        return true;
      });
  return rep;
}

inline OracleReport check_validity_agreement(const qml::Signature& sig,
                                             const SweepLimits& lim = {}) {
  OracleReport rep;
  for (const auto& f : enumerate_formulas(sig, lim.formulas)) {
    OracleReport one =
        check_validity_agreement_for(f, sig, lim.max_worlds, lim.max_individuals);
    ++rep.formulas;
    rep.models = one.models;  // same model sweep for every formula
    rep.instances += one.instances;
    rep.disagreements += one.disagreements;
    if (!rep.first && one.first) rep.first = one.first;
  }
  return rep;
}

// Classification of frame images: reading any full function-space frame back
// as a relational model must land in the closed-and-atomic class, because
// the powerset domain contains every definable set and its atoms are the
// singletons.  Models with a restricted propositional domain must be
// rejected by the frame conversion instead of silently misrepresented.
inline OracleReport check_frame_image_classification(const qml::Signature& sig,
                                                     int max_worlds,
                                                     int max_individuals) {
  OracleReport rep;

  kripke::for_each_model(
      sig, max_worlds, max_individuals, kripke::PMode::Powerset,
      [&](const kripke::KripkeModel& m) {
        ++rep.models;
        ++rep.instances;
        kripke::KripkeModel back =
            henkin::kripke_from_frame(henkin::frame_from_kripke(m, sig), sig);
        if (kripke::classify(back) != kripke::ModelClass::ClosedAtomic) {
          ++rep.disagreements;
          if (!rep.first)
            rep.first = Counterexample{m, {}, 0, "<classification>", true, false};
        }
        return true;
      });

  kripke::for_each_model(
      sig, max_worlds, max_individuals, kripke::PMode::All,
      [&](const kripke::KripkeModel& m) {
        if (m.has_powerset_domain()) return true;
        ++rep.models;
        ++rep.instances;
        bool rejected = false;
        try {
          henkin::frame_from_kripke(m, sig);
        } catch (const UnsupportedModel&) {
          rejected = true;
        }
        if (!rejected) {
          ++rep.disagreements;
          if (!rep.first)
            rep.first = Counterexample{m, {}, 0, "<conversion not rejected>", true, false};
        }
        return true;
      });
  return rep;
}

}  // namespace qmlstt::oracle

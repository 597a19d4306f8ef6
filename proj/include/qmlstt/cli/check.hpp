#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "qmlstt/cli/problem_file.hpp"
#include "qmlstt/kripke/enumerate.hpp"
#include "qmlstt/kripke/satisfies.hpp"

namespace qmlstt::cli {

struct CheckOptions {
  int max_worlds = 3;
  int max_individuals = 2;
  kripke::PMode p_mode = kripke::PMode::Powerset;
  std::uint64_t max_candidates = 50'000'000;
};

// Outcome of a bounded validity check.  "Valid" is always relative to the
// searched bounds: it means no countermodel exists among the enumerated
// models, not theoremhood.
struct CheckVerdict {
  enum class Kind { Valid, Countermodel, Unknown };
  Kind kind = Kind::Unknown;
  int max_worlds = 0;
  int max_individuals = 0;
  std::uint64_t models_enumerated = 0;  // isomorphism representatives visited
  std::uint64_t models_admitted = 0;    // of those, models where all axioms hold
  double seconds = 0.0;
  std::string note;  // Unknown only: which resource ran out

  // Countermodel payload: a model admitting the axioms plus the assignment
  // and world falsifying the conjecture.
  kripke::KripkeModel model;
  kripke::Assignment assignment;
  int world = 0;

  int exit_code() const {
    switch (kind) {
      case Kind::Valid: return 0;
      case Kind::Countermodel: return 1;
      case Kind::Unknown: return 2;
    }
    return 2;
  }
};

// Sweeps every enumerated model within bounds, skipping models where some
// axiom fails; the conjecture must hold at every world under every
// assignment in each remaining model.  The first falsifying (model,
// assignment, world) triple is re-checked against the satisfaction relation
// before it is reported — a verdict that does not survive the re-check is an
// internal inconsistency, not a countermodel.
inline CheckVerdict run_check(const ProblemFile& pf, const CheckOptions& opt) {
  CheckVerdict v;
  v.max_worlds = opt.max_worlds;
  v.max_individuals = opt.max_individuals;
  auto start = std::chrono::steady_clock::now();

  try {
    bool found = false;
    kripke::for_each_model(
        pf.sig, opt.max_worlds, opt.max_individuals, opt.p_mode,
        [&](const kripke::KripkeModel& m) {
          ++v.models_enumerated;
          for (const auto& ax : pf.axioms)
            if (!kripke::valid_in_model(m, ax)) return true;
          ++v.models_admitted;

          kripke::Falsifier fals;
          if (kripke::valid_in_model(m, pf.conjecture, &fals)) return true;
          if (kripke::satisfies(m, fals.assignment, fals.world, pf.conjecture))
            throw Error("internal: countermodel failed re-verification");
          found = true;
          v.kind = CheckVerdict::Kind::Countermodel;
          v.model = m;
          v.assignment = fals.assignment;
          v.world = fals.world;
          return false;
        },
        opt.max_candidates);
    if (!found) v.kind = CheckVerdict::Kind::Valid;
  } catch (const ResourceBound& e) {
    v.kind = CheckVerdict::Kind::Unknown;
    v.note = e.what();
  }

  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return v;
}

}  // namespace qmlstt::cli

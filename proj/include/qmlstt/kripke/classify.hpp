#pragma once

#include <set>
#include <string>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/kripke/model.hpp"

namespace qmlstt::kripke {

// How a model's propositional domain relates to the definable world sets.
//
//   Baseline:     no closure requirement at all.
//   Closed:       prop_domain contains every definable world set, i.e. it is
//                 closed under the sets named by predicate atoms, complement,
//                 union and box preimages.
//   ClosedAtomic: Closed, and every world lies in an atom of prop_domain
//                 (a minimal non-empty member).
enum class ModelClass { Baseline, Closed, ClosedAtomic };

inline const char* to_string(ModelClass c) {
  switch (c) {
    case ModelClass::Baseline: return "baseline";
    case ModelClass::Closed: return "closed";
    case ModelClass::ClosedAtomic: return "closed-atomic";
  }
  return "?";
}

// The world sets reachable from prop_domain and the predicate extensions by
// complement, binary union and box preimage.  Finite intersections are
// generated by complement and union, so closing under these three operations
// saturates everything a formula can define, with quantifiers ranging over
// domain members and individuals already accounted for by taking every
// predicate argument tuple as a base set.
inline std::set<WorldSet> definable_closure(const KripkeModel& m) {
  if (m.num_worlds > 12)
    throw ResourceBound("definable-set closure over " + std::to_string(m.num_worlds) +
                        " worlds");
  const WorldSet all = full_set(m.num_worlds);
  std::set<WorldSet> closed(m.prop_domain.begin(), m.prop_domain.end());

  for (const auto& [k, per_world] : m.interp) {
    // One base set per argument tuple: the worlds where the tuple holds.
    std::set<std::vector<int>> tuples;
    for (const auto& tset : per_world) tuples.insert(tset.begin(), tset.end());
    for (const auto& tup : tuples) {
      WorldSet s = 0;
      for (int w = 0; w < m.num_worlds; ++w)
        if (per_world[w].count(tup)) s |= (1u << w);
      closed.insert(s);
    }
    // Tuples that hold nowhere define the empty set.
    closed.insert(0);
  }

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<WorldSet> snapshot(closed.begin(), closed.end());
    for (WorldSet s : snapshot)
      if (closed.insert(static_cast<WorldSet>(~s & all)).second) grew = true;
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j)
        if (closed.insert(snapshot[i] | snapshot[j]).second) grew = true;
    for (const auto& [r, succ] : m.rel) {
      for (WorldSet s : snapshot) {
        WorldSet pre = 0;
        for (int w = 0; w < m.num_worlds; ++w)
          if ((succ[w] & ~s) == 0) pre |= (1u << w);
        if (closed.insert(pre).second) grew = true;
      }
    }
  }
  return closed;
}

inline ModelClass classify(const KripkeModel& m) {
  std::set<WorldSet> domain(m.prop_domain.begin(), m.prop_domain.end());
  for (WorldSet s : definable_closure(m))
    if (!domain.count(s)) return ModelClass::Baseline;

  // Atoms: minimal non-empty members of the propositional domain.
  std::vector<WorldSet> nonempty;
  for (WorldSet s : m.prop_domain)
    if (s != 0) nonempty.push_back(s);
  WorldSet covered = 0;
  for (WorldSet s : nonempty) {
    bool minimal = true;
    for (WorldSet t : nonempty)
      if (t != s && (t & ~s) == 0) {  // t proper subset of s
        minimal = false;
        break;
      }
    if (minimal) covered |= s;
  }
  return covered == full_set(m.num_worlds) ? ModelClass::ClosedAtomic : ModelClass::Closed;
}

}  // namespace qmlstt::kripke

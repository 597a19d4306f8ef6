#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/kripke/model.hpp"
#include "qmlstt/qml/formula.hpp"

namespace qmlstt::kripke {

// Truth of a core formula at a world under an assignment:
//   - an atom holds when the argument tuple is in the predicate's extension
//     at the current world,
//   - a propositional variable holds when the current world is in its value,
//   - negation and disjunction are classical,
//   - individual quantifiers range over the (constant) individual domain,
//   - propositional quantifiers range over prop_domain, not the powerset,
//   - [r] s holds when s holds at every r-successor.
//
// The assignment is threaded by mutation with undo, so quantifier loops do
// not copy maps.  Unbound variables are an error, not false.
namespace detail {

inline bool sat_rec(const KripkeModel& m, Assignment& g, int w, const qml::FormulaRef& f) {
  switch (f->kind()) {
    case qml::Formula::Kind::PropVar: {
      auto it = g.prop.find(f->name());
      if (it == g.prop.end()) throw UnboundVariable(f->name());
      return contains(it->second, w);
    }
    case qml::Formula::Kind::Atom: {
      auto it = m.interp.find(f->name());
      if (it == m.interp.end()) throw UnknownConstant(f->name());
      std::vector<int> tup;
      tup.reserve(f->args().size());
      for (const auto& x : f->args()) {
        auto vx = g.ind.find(x);
        if (vx == g.ind.end()) throw UnboundVariable(x);
        tup.push_back(vx->second);
      }
      return it->second[w].count(tup) != 0;
    }
    case qml::Formula::Kind::Not:
      return !sat_rec(m, g, w, f->child());
    case qml::Formula::Kind::Or:
      return sat_rec(m, g, w, f->lhs()) || sat_rec(m, g, w, f->rhs());
    case qml::Formula::Kind::ForallInd: {
      auto prev = g.ind.find(f->name());
      bool had = prev != g.ind.end();
      int saved = had ? prev->second : 0;
      bool ok = true;
      for (int d = 0; d < m.num_individuals && ok; ++d) {
        g.ind[f->name()] = d;
        ok = sat_rec(m, g, w, f->child());
      }
      if (had) g.ind[f->name()] = saved;
      else g.ind.erase(f->name());
      return ok;
    }
    case qml::Formula::Kind::ForallProp: {
      auto prev = g.prop.find(f->name());
      bool had = prev != g.prop.end();
      WorldSet saved = had ? prev->second : 0;
      bool ok = true;
      for (WorldSet s : m.prop_domain) {
        g.prop[f->name()] = s;
        if (!sat_rec(m, g, w, f->child())) {
          ok = false;
          break;
        }
      }
      if (had) g.prop[f->name()] = saved;
      else g.prop.erase(f->name());
      return ok;
    }
    case qml::Formula::Kind::Box: {
      auto it = m.rel.find(f->name());
      if (it == m.rel.end()) throw UnknownConstant(f->name());
      WorldSet succ = it->second[w];
      for (int v = 0; v < m.num_worlds; ++v)
        if (contains(succ, v) && !sat_rec(m, g, v, f->child())) return false;
      return true;
    }
  }
  throw Error("unreachable formula kind");
}

}  // namespace detail

inline bool satisfies(const KripkeModel& m, const Assignment& g, int w, const qml::FormulaRef& f) {
  Assignment scratch = g;
  return detail::sat_rec(m, scratch, w, f);
}

// Enumerates every assignment of the formula's free variables: individuals
// for individual variables, prop_domain members for propositional variables.
// Calls visit for each; stops early when visit returns false.  Returns the
// number of assignments visited.
inline std::uint64_t for_each_assignment(const KripkeModel& m, const qml::FreeVars& fv,
                                         const std::function<bool(const Assignment&)>& visit) {
  std::vector<std::string> ivs(fv.ind.begin(), fv.ind.end());
  std::vector<std::string> pvs(fv.prop.begin(), fv.prop.end());
  Assignment g;
  std::uint64_t visited = 0;
  bool stop = false;
  std::function<void(std::size_t)> go_prop = [&](std::size_t i) {
    if (stop) return;
    if (i == pvs.size()) {
      ++visited;
      if (!visit(g)) stop = true;
      return;
    }
    for (WorldSet s : m.prop_domain) {
      g.prop[pvs[i]] = s;
      go_prop(i + 1);
      if (stop) return;
    }
  };
  std::function<void(std::size_t)> go_ind = [&](std::size_t i) {
    if (stop) return;
    if (i == ivs.size()) {
      go_prop(0);
      return;
    }
    for (int d = 0; d < m.num_individuals; ++d) {
      g.ind[ivs[i]] = d;
      go_ind(i + 1);
      if (stop) return;
    }
  };
  go_ind(0);
  return visited;
}

// A formula is valid in a model when it holds at every world under every
// assignment of its free variables.
struct Falsifier {
  Assignment assignment;
  int world = 0;
};

inline bool valid_in_model(const KripkeModel& m, const qml::FormulaRef& f,
                           Falsifier* out = nullptr) {
  qml::FreeVars fv = qml::free_vars(f);
  bool valid = true;
  for_each_assignment(m, fv, [&](const Assignment& g) {
    for (int w = 0; w < m.num_worlds; ++w) {
      if (!satisfies(m, g, w, f)) {
        valid = false;
        if (out) {
          out->assignment = g;
          out->world = w;
        }
        return false;
      }
    }
    return true;
  });
  return valid;
}

}  // namespace qmlstt::kripke

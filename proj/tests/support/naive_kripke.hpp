#pragma once

// Second, deliberately naive implementation of formula truth in a relational
// model: assignments are passed as by-value maps that quantifiers copy and
// extend.  Used as an agreement oracle for the library's evaluator.

#include <map>
#include <string>
#include <vector>

#include "qmlstt/kripke/model.hpp"
#include "qmlstt/qml/formula.hpp"

namespace testsupport {

inline bool naive_sat(const qmlstt::kripke::KripkeModel& m, std::map<std::string, int> gi,
                      std::map<std::string, qmlstt::kripke::WorldSet> gp, int w,
                      const qmlstt::qml::FormulaRef& f) {
  using K = qmlstt::qml::Formula::Kind;
  switch (f->kind()) {
    case K::PropVar:
      return ((gp.at(f->name()) >> w) & 1u) != 0;
    case K::Atom: {
      std::vector<int> tuple;
      for (const auto& x : f->args()) tuple.push_back(gi.at(x));
      return m.interp.at(f->name()).at(w).count(tuple) != 0;
    }
    case K::Not:
      return !naive_sat(m, gi, gp, w, f->child());
    case K::Or:
      return naive_sat(m, gi, gp, w, f->lhs()) || naive_sat(m, gi, gp, w, f->rhs());
    case K::ForallInd:
      for (int d = 0; d < m.num_individuals; ++d) {
        std::map<std::string, int> gi2 = gi;
        gi2[f->name()] = d;
        if (!naive_sat(m, gi2, gp, w, f->child())) return false;
      }
      return true;
    case K::ForallProp:
      for (qmlstt::kripke::WorldSet s : m.prop_domain) {
        std::map<std::string, qmlstt::kripke::WorldSet> gp2 = gp;
        gp2[f->name()] = s;
        if (!naive_sat(m, gi, gp2, w, f->child())) return false;
      }
      return true;
    case K::Box:
      for (int v = 0; v < m.num_worlds; ++v)
        if ((m.rel.at(f->name()).at(w) >> v) & 1u)
          if (!naive_sat(m, gi, gp, v, f->child())) return false;
      return true;
  }
  return false;
}

}  // namespace testsupport

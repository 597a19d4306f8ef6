#pragma once

#include <string>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/henkin/eval.hpp"
#include "qmlstt/henkin/frame.hpp"
#include "qmlstt/kripke/model.hpp"
#include "qmlstt/qml/formula.hpp"
#include "qmlstt/stt/term.hpp"
#include "qmlstt/stt/type.hpp"

namespace qmlstt::henkin {

// A world set as a value of type mu > o.
inline Value set_value(kripke::WorldSet s, int mu_size) {
  Value::Table t;
  t.reserve(mu_size);
  for (int w = 0; w < mu_size; ++w) t.push_back(Value::truth(kripke::contains(s, w)));
  return Value::table(std::move(t));
}

inline kripke::WorldSet set_of_value(const Value& v) {
  kripke::WorldSet s = 0;
  const Value::Table& t = v.as_table();
  for (std::size_t w = 0; w < t.size(); ++w)
    if (t[w].as_truth()) s |= (1u << w);
  return s;
}

// Converts a relational model into a frame interpreting the signature's
// relations and predicates.  The frame's function domains are full function
// spaces, so the model's propositional domain must be the full powerset;
// anything else cannot be represented and is rejected.
inline FiniteFrame frame_from_kripke(const kripke::KripkeModel& m, const qml::Signature& sig) {
  if (!m.has_powerset_domain())
    throw UnsupportedModel("frame conversion needs the full powerset propositional domain");
  FiniteFrame f(m.num_individuals, m.num_worlds);

  for (const auto& r : sig.rels) {
    const auto& succ = m.rel.at(r);
    Value::Table outer;
    outer.reserve(m.num_worlds);
    for (int w = 0; w < m.num_worlds; ++w) outer.push_back(set_value(succ[w], m.num_worlds));
    f.interp().insert_or_assign(r, Value::table(std::move(outer)));
  }

  for (const auto& [k, arity] : sig.preds) {
    const auto& per_world = m.interp.at(k);
    // Build the curried iota^arity > mu > o table from the innermost level
    // out: fix a tuple prefix, recurse over the next argument.
    std::vector<int> tuple(arity, 0);
    auto build = [&](auto&& self, int level) -> Value {
      if (level == arity) {
        Value::Table t;
        t.reserve(m.num_worlds);
        for (int w = 0; w < m.num_worlds; ++w)
          t.push_back(Value::truth(per_world[w].count(tuple) != 0));
        return Value::table(std::move(t));
      }
      Value::Table t;
      t.reserve(m.num_individuals);
      for (int d = 0; d < m.num_individuals; ++d) {
        tuple[level] = d;
        t.push_back(self(self, level + 1));
      }
      return Value::table(std::move(t));
    };
    f.interp().insert_or_assign(k, build(build, 0));
  }
  return f;
}

// Reads a frame back into a relational model over the same signature.  The
// propositional domain comes out as the full powerset, matching the frame's
// full function space at type mu > o.
inline kripke::KripkeModel kripke_from_frame(const FiniteFrame& f, const qml::Signature& sig) {
  if (f.mu_size() > kripke::kMaxWorlds)
    throw UnsupportedModel("too many worlds for a relational model");
  kripke::KripkeModel m;
  m.num_worlds = f.mu_size();
  m.num_individuals = f.iota_size();
  m.prop_domain = kripke::KripkeModel::powerset_domain(f.mu_size());

  for (const auto& r : sig.rels) {
    auto it = f.interp().find(r);
    if (it == f.interp().end()) throw UnknownConstant(r);
    const Value::Table& outer = it->second.as_table();
    std::vector<kripke::WorldSet> succ;
    succ.reserve(f.mu_size());
    for (int w = 0; w < f.mu_size(); ++w) succ.push_back(set_of_value(outer[w]));
    m.rel[r] = std::move(succ);
  }

  for (const auto& [k, arity] : sig.preds) {
    auto it = f.interp().find(k);
    if (it == f.interp().end()) throw UnknownConstant(k);
    auto& per_world = m.interp[k];
    per_world.resize(f.mu_size());
    std::vector<int> tuple(arity, 0);
    auto walk = [&](auto&& self, const Value& v, int level) -> void {
      if (level == arity) {
        const Value::Table& t = v.as_table();
        for (int w = 0; w < f.mu_size(); ++w)
          if (t[w].as_truth()) per_world[w].insert(tuple);
        return;
      }
      const Value::Table& t = v.as_table();
      for (int d = 0; d < f.iota_size(); ++d) {
        tuple[level] = d;
        self(self, t[d], level + 1);
      }
    };
    walk(walk, it->second, 0);
  }
  return m;
}

// Lifts a formula-level assignment to a term-level environment: individual
// variables become iota atoms, propositional variables become mu > o tables.
inline Env lift_assignment(const kripke::Assignment& g, int mu_size) {
  Env env;
  for (const auto& [x, d] : g.ind)
    env.insert_or_assign(stt::var_id(x, stt::Type::iota()), Value::atom(d));
  for (const auto& [p, s] : g.prop)
    env.insert_or_assign(stt::var_id(p, stt::prop_type()), set_value(s, mu_size));
  return env;
}

}  // namespace qmlstt::henkin

#pragma once

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "qmlstt/cli/check.hpp"
#include "qmlstt/kripke/model.hpp"
#include "qmlstt/oracle/oracle.hpp"

namespace qmlstt::cli {

// Renders verdicts and reports twice over: an indented text form for people
// and a JSON form for other programs.  Both are deterministic for a given
// input (maps keep keys sorted).

inline std::string world_set_string(kripke::WorldSet s) {
  std::string out = "{";
  bool first = true;
  for (int w = 0; s >> w; ++w) {
    if (!kripke::contains(s, w)) continue;
    if (!first) out += ", ";
    out += std::to_string(w);
    first = false;
  }
  return out + "}";
}

inline std::string tuple_string(const std::vector<int>& tup) {
  std::string out = "(";
  for (std::size_t i = 0; i < tup.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(tup[i]);
  }
  return out + ")";
}

inline std::string describe(const kripke::Assignment& g) {
  std::string out;
  bool first = true;
  for (const auto& [x, d] : g.ind) {
    if (!first) out += ", ";
    out += x + " = " + std::to_string(d);
    first = false;
  }
  for (const auto& [p, s] : g.prop) {
    if (!first) out += ", ";
    out += p + " = " + world_set_string(s);
    first = false;
  }
  return first ? "(empty)" : out;
}

inline std::string describe(const kripke::KripkeModel& m, const std::string& indent) {
  std::string out;
  out += indent + "worlds: " + std::to_string(m.num_worlds) +
         ", individuals: " + std::to_string(m.num_individuals) + "\n";
  for (const auto& [r, succ] : m.rel) {
    out += indent + r + ":";
    for (int w = 0; w < m.num_worlds; ++w)
      out += " " + std::to_string(w) + " -> " + world_set_string(succ[w]);
    out += "\n";
  }
  for (const auto& [k, per_world] : m.interp) {
    out += indent + k + " holds at:";
    bool any = false;
    for (int w = 0; w < m.num_worlds; ++w)
      for (const auto& tup : per_world[w]) {
        out += " " + std::to_string(w) + ":" + tuple_string(tup);
        any = true;
      }
    if (!any) out += " (nowhere)";
    out += "\n";
  }
  out += indent + "prop domain:";
  for (kripke::WorldSet s : m.prop_domain) out += " " + world_set_string(s);
  out += "\n";
  return out;
}

inline nlohmann::json to_json(kripke::WorldSet s) {
  nlohmann::json arr = nlohmann::json::array();
  for (int w = 0; s >> w; ++w)
    if (kripke::contains(s, w)) arr.push_back(w);
  return arr;
}

inline nlohmann::json to_json(const kripke::KripkeModel& m) {
  nlohmann::json j;
  j["worlds"] = m.num_worlds;
  j["individuals"] = m.num_individuals;
  j["rel"] = nlohmann::json::object();
  for (const auto& [r, succ] : m.rel) {
    nlohmann::json rows = nlohmann::json::array();
    for (int w = 0; w < m.num_worlds; ++w) rows.push_back(to_json(succ[w]));
    j["rel"][r] = rows;
  }
  j["propDomain"] = nlohmann::json::array();
  for (kripke::WorldSet s : m.prop_domain) j["propDomain"].push_back(to_json(s));
  j["interp"] = nlohmann::json::object();
  for (const auto& [k, per_world] : m.interp) {
    nlohmann::json rows = nlohmann::json::array();
    for (int w = 0; w < m.num_worlds; ++w) {
      nlohmann::json tuples = nlohmann::json::array();
      for (const auto& tup : per_world[w]) tuples.push_back(tup);
      rows.push_back(tuples);
    }
    j["interp"][k] = rows;
  }
  return j;
}

inline nlohmann::json to_json(const kripke::Assignment& g) {
  nlohmann::json j;
  j["ind"] = nlohmann::json::object();
  for (const auto& [x, d] : g.ind) j["ind"][x] = d;
  j["prop"] = nlohmann::json::object();
  for (const auto& [p, s] : g.prop) j["prop"][p] = to_json(s);
  return j;
}

inline const char* verdict_name(CheckVerdict::Kind k) {
  switch (k) {
    case CheckVerdict::Kind::Valid: return "valid";
    case CheckVerdict::Kind::Countermodel: return "countermodel";
    case CheckVerdict::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

inline std::string render_text(const CheckVerdict& v) {
  std::string out = "verdict: ";
  out += verdict_name(v.kind);
  if (v.kind == CheckVerdict::Kind::Valid) out += " (no countermodel within bounds)";
  out += "\n";
  out += "  bounds: worlds <= " + std::to_string(v.max_worlds) +
         ", individuals <= " + std::to_string(v.max_individuals) + "\n";
  out += "  models: " + std::to_string(v.models_enumerated) + " enumerated, " +
         std::to_string(v.models_admitted) + " admitted by the axioms\n";
  if (v.kind == CheckVerdict::Kind::Countermodel) {
    out += "  falsified at world " + std::to_string(v.world) +
           " under assignment: " + describe(v.assignment) + "\n";
    out += "  model:\n" + describe(v.model, "    ");
  }
  if (!v.note.empty()) out += "  reason: " + v.note + "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v.seconds);
  out += "  time: " + std::string(buf) + " s\n";
  return out;
}

inline nlohmann::json to_json(const CheckVerdict& v) {
  nlohmann::json j;
  j["verdict"] = verdict_name(v.kind);
  j["maxWorlds"] = v.max_worlds;
  j["maxIndividuals"] = v.max_individuals;
  j["modelsEnumerated"] = v.models_enumerated;
  j["modelsAdmitted"] = v.models_admitted;
  j["seconds"] = v.seconds;
  if (!v.note.empty()) j["note"] = v.note;
  if (v.kind == CheckVerdict::Kind::Countermodel) {
    j["model"] = to_json(v.model);
    j["assignment"] = to_json(v.assignment);
    j["world"] = v.world;
  }
  return j;
}

inline std::string render_text(const oracle::OracleReport& rep,
                               const std::string& suite) {
  std::string out = "suite " + suite + ": ";
  out += rep.passed() ? "pass" : "FAIL";
  out += "\n  models: " + std::to_string(rep.models) +
         "  formulas: " + std::to_string(rep.formulas) +
         "  instances: " + std::to_string(rep.instances) +
         "  disagreements: " + std::to_string(rep.disagreements) + "\n";
  if (rep.first) {
    const oracle::Counterexample& c = *rep.first;
    out += "  first disagreement:\n";
    out += "    formula: " + c.formula + "\n";
    out += "    world " + std::to_string(c.world) +
           ", assignment: " + describe(c.assignment) + "\n";
    out += std::string("    relational: ") + (c.relational ? "true" : "false") +
           ", functional: " + (c.functional ? "true" : "false") + "\n";
    out += "    model:\n" + describe(c.model, "      ");
  }
  return out;
}

inline nlohmann::json to_json(const oracle::OracleReport& rep,
                              const std::string& suite) {
  nlohmann::json j;
  j["suite"] = suite;
  j["passed"] = rep.passed();
  j["models"] = rep.models;
  j["formulas"] = rep.formulas;
  j["instances"] = rep.instances;
  j["disagreements"] = rep.disagreements;
  if (rep.first) {
    const oracle::Counterexample& c = *rep.first;
    nlohmann::json cx;
    cx["formula"] = c.formula;
    cx["world"] = c.world;
    cx["relational"] = c.relational;
    cx["functional"] = c.functional;
    cx["model"] = to_json(c.model);
    cx["assignment"] = to_json(c.assignment);
    j["counterexample"] = cx;
  }
  return j;
}

}  // namespace qmlstt::cli

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/qml/formula.hpp"

namespace qmlstt::kripke {

// Worlds and individuals are dense integer ids.  World sets are bitmasks,
// which caps the world count at 16 — far beyond what exhaustive model
// checking can visit anyway.
using WorldSet = std::uint32_t;

constexpr int kMaxWorlds = 16;

inline WorldSet full_set(int num_worlds) {
  return static_cast<WorldSet>((1u << num_worlds) - 1u);
}
inline bool contains(WorldSet s, int w) { return (s >> w) & 1u; }

// A constant-domain relational model:
//   - num_worlds worlds, num_individuals individuals,
//   - one accessibility relation per relation index, stored as a successor
//     mask per source world,
//   - prop_domain: the collection of world sets propositional quantifiers
//     range over (kept sorted and deduplicated),
//   - interp: per predicate, per world, the set of argument tuples that hold.
struct KripkeModel {
  int num_worlds = 0;
  int num_individuals = 0;
  std::map<std::string, std::vector<WorldSet>> rel;
  std::vector<WorldSet> prop_domain;
  std::map<std::string, std::vector<std::set<std::vector<int>>>> interp;

  void normalize_prop_domain() {
    std::sort(prop_domain.begin(), prop_domain.end());
    prop_domain.erase(std::unique(prop_domain.begin(), prop_domain.end()), prop_domain.end());
  }

  void validate(const qml::Signature& sig) const {
    if (num_worlds < 1 || num_worlds > kMaxWorlds)
      throw UnsupportedModel("world count out of range: " + std::to_string(num_worlds));
    if (num_individuals < 1)
      throw UnsupportedModel("individual domain must be non-empty");
    if (prop_domain.empty())
      throw UnsupportedModel("propositional domain must be non-empty");
    WorldSet all = full_set(num_worlds);
    for (WorldSet s : prop_domain)
      if (s & ~all) throw UnsupportedModel("propositional domain mentions unknown world");
    if (!std::is_sorted(prop_domain.begin(), prop_domain.end()))
      throw UnsupportedModel("propositional domain not normalized");
    for (std::size_t i = 1; i < prop_domain.size(); ++i)
      if (prop_domain[i] == prop_domain[i - 1])
        throw UnsupportedModel("duplicate set in propositional domain");
    for (const auto& r : sig.rels) {
      auto it = rel.find(r);
      if (it == rel.end() || static_cast<int>(it->second.size()) != num_worlds)
        throw UnsupportedModel("relation '" + r + "' not interpreted at every world");
      for (WorldSet s : it->second)
        if (s & ~all) throw UnsupportedModel("relation '" + r + "' reaches unknown world");
    }
    for (const auto& [k, arity] : sig.preds) {
      auto it = interp.find(k);
      if (it == interp.end() || static_cast<int>(it->second.size()) != num_worlds)
        throw UnsupportedModel("predicate '" + k + "' not interpreted at every world");
      for (const auto& tuples : it->second)
        for (const auto& tup : tuples) {
          if (static_cast<int>(tup.size()) != arity)
            throw UnsupportedModel("tuple arity mismatch for predicate '" + k + "'");
          for (int d : tup)
            if (d < 0 || d >= num_individuals)
              throw UnsupportedModel("tuple mentions unknown individual");
        }
    }
  }

  // The full powerset of worlds as a propositional domain.
  static std::vector<WorldSet> powerset_domain(int num_worlds) {
    std::vector<WorldSet> out;
    WorldSet n = static_cast<WorldSet>(1u << num_worlds);
    out.reserve(n);
    for (WorldSet s = 0; s < n; ++s) out.push_back(s);
    return out;
  }

  bool has_powerset_domain() const {
    return static_cast<int>(prop_domain.size()) == (1 << num_worlds);
  }
};

// Variable assignment: individual variables to individuals, propositional
// variables to members of the propositional domain.
struct Assignment {
  std::map<std::string, int> ind;
  std::map<std::string, WorldSet> prop;
};

}  // namespace qmlstt::kripke

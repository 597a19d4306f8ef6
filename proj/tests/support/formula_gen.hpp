#pragma once

// Random core-formula generation over a signature, for round-trip and
// agreement property tests.  Quantifiers draw binder names from small pools
// so shadowing happens regularly.

#include <random>
#include <string>
#include <vector>

#include "qmlstt/qml/formula.hpp"

namespace testsupport {

using qmlstt::qml::Formula;
using qmlstt::qml::FormulaRef;
using qmlstt::qml::Signature;

struct FormulaGen {
  std::mt19937 rng;
  Signature sig;
  std::vector<std::string> ind_pool = {"X", "Y"};
  std::vector<std::string> prop_pool = {"P", "Q"};

  FormulaGen(unsigned seed, Signature s) : rng(seed), sig(std::move(s)) {}

  int pick(int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

  const std::string& pick_of(const std::vector<std::string>& v) {
    return v[pick(static_cast<int>(v.size()))];
  }

  FormulaRef gen(int depth) {
    std::vector<std::string> ind(sig.ind_vars.begin(), sig.ind_vars.end());
    std::vector<std::string> prop(sig.prop_vars.begin(), sig.prop_vars.end());
    return gen_rec(depth, ind, prop);
  }

  FormulaRef leaf(const std::vector<std::string>& ind, const std::vector<std::string>& prop) {
    // Collect the leaves that are expressible right now.
    std::vector<std::pair<std::string, int>> preds;
    for (const auto& [k, a] : sig.preds)
      if (a == 0 || !ind.empty()) preds.emplace_back(k, a);
    bool can_prop = !prop.empty();
    if (!can_prop && preds.empty())
      throw qmlstt::Error("signature cannot express any leaf formula");
    if (can_prop && (preds.empty() || pick(2) == 0))
      return Formula::prop_var(pick_of(prop));
    auto [k, arity] = preds[pick(static_cast<int>(preds.size()))];
    std::vector<std::string> args;
    for (int i = 0; i < arity; ++i) args.push_back(pick_of(ind));
    return Formula::atom(k, std::move(args));
  }

  FormulaRef gen_rec(int depth, std::vector<std::string>& ind,
                     std::vector<std::string>& prop) {
    if (depth <= 0 || pick(4) == 0) return leaf(ind, prop);
    std::vector<std::string> rels(sig.rels.begin(), sig.rels.end());
    switch (pick(6)) {
      case 0:
        return qmlstt::qml::neg(gen_rec(depth - 1, ind, prop));
      case 1:
        return qmlstt::qml::disj(gen_rec(depth - 1, ind, prop),
                                 gen_rec(depth - 1, ind, prop));
      case 2:
        return Formula::box(pick_of(rels), gen_rec(depth - 1, ind, prop));
      case 3: {
        std::string x = pick_of(ind_pool);
        ind.push_back(x);
        FormulaRef body = gen_rec(depth - 1, ind, prop);
        ind.pop_back();
        return Formula::forall_ind(x, std::move(body));
      }
      case 4: {
        std::string p = pick_of(prop_pool);
        prop.push_back(p);
        FormulaRef body = gen_rec(depth - 1, ind, prop);
        prop.pop_back();
        return Formula::forall_prop(p, std::move(body));
      }
      default:
        return leaf(ind, prop);
    }
  }
};

}  // namespace testsupport

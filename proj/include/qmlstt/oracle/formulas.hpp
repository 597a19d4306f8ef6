#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/qml/formula.hpp"

namespace qmlstt::oracle {

// Deterministic, size-ordered enumeration of core formulas over a signature.
//
// Formulas are produced in ascending node count (each connective, quantifier,
// and leaf counts one node), and in a fixed structural order within a size:
// propositional variables, atoms, negation, disjunctions by left size, boxes
// by relation, individual then propositional quantifiers.  Binders always
// introduce the canonical name for their sort and depth (X1, X2, ... for
// individuals, P1, P2, ... for propositions), so two formulas that differ
// only by renaming of bound variables are generated exactly once.  Free
// variables come from the signature.
//
// The enumeration is infinite in principle; `max_count` truncates it at a
// fixed, reproducible prefix and `max_size` bounds the node count.
struct FormulaLimits {
  int max_size = 7;
  std::size_t max_count = 2000;
};

namespace detail {

struct FormulaPool {
  const qml::Signature& sig;
  // Memo key: (size, individual binder depth, propositional binder depth).
  std::map<std::tuple<int, int, int>, std::vector<qml::FormulaRef>> memo;

  explicit FormulaPool(const qml::Signature& s) : sig(s) {}

  std::vector<std::string> ind_names(int di) const {
    std::vector<std::string> out(sig.ind_vars.begin(), sig.ind_vars.end());
    for (int i = 1; i <= di; ++i) out.push_back("X" + std::to_string(i));
    return out;
  }

  std::vector<std::string> prop_names(int dp) const {
    std::vector<std::string> out(sig.prop_vars.begin(), sig.prop_vars.end());
    for (int i = 1; i <= dp; ++i) out.push_back("P" + std::to_string(i));
    return out;
  }

  const std::vector<qml::FormulaRef>& at(int size, int di, int dp) {
    auto key = std::make_tuple(size, di, dp);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<qml::FormulaRef> out;
    if (size == 1) {
      for (const auto& p : prop_names(dp)) out.push_back(qml::Formula::prop_var(p));
      std::vector<std::string> inds = ind_names(di);
      for (const auto& [k, arity] : sig.preds) {
        if (arity > 0 && inds.empty()) continue;
        // All argument tuples in lexicographic order of variable indices.
        std::vector<std::size_t> idx(arity, 0);
        while (true) {
          std::vector<std::string> args;
          args.reserve(arity);
          for (std::size_t i : idx) args.push_back(inds[i]);
          out.push_back(qml::Formula::atom(k, std::move(args)));
          int pos = arity - 1;
          while (pos >= 0 && ++idx[pos] == inds.size()) idx[pos--] = 0;
          if (pos < 0) break;
        }
      }
    } else {
      for (const auto& f : at(size - 1, di, dp)) out.push_back(qml::neg(f));
      for (int ls = 1; ls <= size - 2; ++ls)
        for (const auto& l : at(ls, di, dp))
          for (const auto& r : at(size - 1 - ls, di, dp))
            out.push_back(qml::disj(l, r));
      for (const auto& rel : sig.rels)
        for (const auto& f : at(size - 1, di, dp))
          out.push_back(qml::Formula::box(rel, f));
      {
        std::string x = "X" + std::to_string(di + 1);
        for (const auto& f : at(size - 1, di + 1, dp))
          out.push_back(qml::Formula::forall_ind(x, f));
        std::string p = "P" + std::to_string(dp + 1);
        for (const auto& f : at(size - 1, di, dp + 1))
          out.push_back(qml::Formula::forall_prop(p, f));
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  }
};

}  // namespace detail

inline std::vector<qml::FormulaRef> enumerate_formulas(const qml::Signature& sig,
                                                       const FormulaLimits& lim = {}) {
  sig.validate();
  detail::FormulaPool pool(sig);
  std::vector<qml::FormulaRef> out;
  for (int size = 1; size <= lim.max_size; ++size) {
    for (const auto& f : pool.at(size, 0, 0)) {
      if (out.size() >= lim.max_count) return out;
      out.push_back(f);
    }
  }
  return out;
}

}  // namespace qmlstt::oracle

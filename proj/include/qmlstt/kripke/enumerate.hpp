#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "qmlstt/errors.hpp"
#include "qmlstt/kripke/model.hpp"

namespace qmlstt::kripke {

// Which propositional domains to enumerate: just the full powerset, or every
// non-empty collection of world sets.
enum class PMode { Powerset, All };

inline PMode pmode_from_string(const std::string& s) {
  if (s == "powerset") return PMode::Powerset;
  if (s == "all") return PMode::All;
  throw Error("unknown propositional-domain mode '" + s + "' (want powerset or all)");
}

namespace detail {

inline WorldSet permute_set(WorldSet s, const std::vector<int>& pw) {
  WorldSet out = 0;
  for (std::size_t w = 0; w < pw.size(); ++w)
    if ((s >> w) & 1u) out |= (1u << pw[w]);
  return out;
}

// Serialization of a model under a world/individual relabeling, used to
// compare a candidate against its isomorphic variants.  A candidate is kept
// only if no relabeling produces a lexicographically smaller form.
inline std::vector<std::uint64_t> model_key(const KripkeModel& m, const std::vector<int>& pw,
                                            const std::vector<int>& pd) {
  std::vector<std::uint64_t> key;
  for (const auto& [r, succ] : m.rel) {
    std::vector<WorldSet> rsucc(m.num_worlds);
    for (int w = 0; w < m.num_worlds; ++w) rsucc[pw[w]] = permute_set(succ[w], pw);
    for (WorldSet s : rsucc) key.push_back(s);
  }
  for (const auto& [k, per_world] : m.interp) {
    std::vector<std::uint64_t> bits(m.num_worlds, 0);
    for (int w = 0; w < m.num_worlds; ++w) {
      for (const auto& tup : per_world[w]) {
        std::uint64_t idx = 0;
        for (int d : tup) idx = idx * m.num_individuals + pd[d];
        bits[pw[w]] |= (1ull << idx);
      }
    }
    for (std::uint64_t b : bits) key.push_back(b);
  }
  std::vector<WorldSet> dom;
  dom.reserve(m.prop_domain.size());
  for (WorldSet s : m.prop_domain) dom.push_back(permute_set(s, pw));
  std::sort(dom.begin(), dom.end());
  for (WorldSet s : dom) key.push_back(s);
  return key;
}

inline bool is_canonical(const KripkeModel& m) {
  std::vector<int> idw(m.num_worlds), idd(m.num_individuals);
  std::iota(idw.begin(), idw.end(), 0);
  std::iota(idd.begin(), idd.end(), 0);
  std::vector<std::uint64_t> self = model_key(m, idw, idd);

  std::vector<int> pw = idw;
  do {
    std::vector<int> pd = idd;
    do {
      if (model_key(m, pw, pd) < self) return false;
    } while (std::next_permutation(pd.begin(), pd.end()));
  } while (std::next_permutation(pw.begin(), pw.end()));
  return true;
}

}  // namespace detail

// Streams every model over the signature with up to max_worlds worlds and
// max_individuals individuals, one representative per isomorphism class,
// smaller worlds first.  visit returning false stops the enumeration.
// Throws ResourceBound once more than max_candidates raw configurations
// (counted before isomorphism rejection) have been examined.
inline std::uint64_t for_each_model(const qml::Signature& sig, int max_worlds,
                                    int max_individuals, PMode pmode,
                                    const std::function<bool(const KripkeModel&)>& visit,
                                    std::uint64_t max_candidates = 50'000'000) {
  sig.validate();
  if (max_worlds < 1 || max_worlds > kMaxWorlds)
    throw Error("world bound out of range: " + std::to_string(max_worlds));
  if (max_individuals < 1)
    throw Error("individual bound out of range: " + std::to_string(max_individuals));

  std::vector<std::string> rels(sig.rels.begin(), sig.rels.end());
  std::vector<std::pair<std::string, int>> preds(sig.preds.begin(), sig.preds.end());

  std::uint64_t candidates = 0;
  std::uint64_t yielded = 0;

  for (int nw = 1; nw <= max_worlds; ++nw) {
    for (int nd = 1; nd <= max_individuals; ++nd) {
      // Bit layout of one raw configuration, low to high:
      // relation edges (per relation, per source world, per target world),
      // then predicate truth (per predicate, per world, per argument tuple).
      int rel_bits = static_cast<int>(rels.size()) * nw * nw;
      std::uint64_t tuple_counts_total = 0;
      std::vector<std::uint64_t> tuple_count(preds.size());
      for (std::size_t i = 0; i < preds.size(); ++i) {
        std::uint64_t tc = 1;
        for (int a = 0; a < preds[i].second; ++a) tc *= nd;
        tuple_count[i] = tc;
        tuple_counts_total += tc * nw;
      }
      std::uint64_t total_bits = rel_bits + tuple_counts_total;
      if (total_bits > 62)
        throw ResourceBound("model space needs " + std::to_string(total_bits) +
                            " configuration bits");
      std::uint64_t num_domains = 1;
      if (pmode == PMode::All) {
        if (nw > 4) throw ResourceBound("domain collections over " + std::to_string(nw) +
                                        " worlds");
        num_domains = (1ull << (1u << nw)) - 1;  // non-empty collections
      }

      for (std::uint64_t dc = 0; dc < num_domains; ++dc) {
        std::vector<WorldSet> dom;
        if (pmode == PMode::Powerset) {
          dom = KripkeModel::powerset_domain(nw);
        } else {
          std::uint64_t pick = dc + 1;  // skip the empty collection
          for (int s = 0; s < (1 << nw); ++s)
            if ((pick >> s) & 1u) dom.push_back(static_cast<WorldSet>(s));
        }

        for (std::uint64_t cfg = 0; cfg < (1ull << total_bits); ++cfg) {
          if (++candidates > max_candidates)
            throw ResourceBound("examined " + std::to_string(max_candidates) +
                                " model configurations");
          KripkeModel m;
          m.num_worlds = nw;
          m.num_individuals = nd;
          m.prop_domain = dom;
          std::uint64_t bit = 0;
          for (const auto& r : rels) {
            std::vector<WorldSet> succ(nw, 0);
            for (int w = 0; w < nw; ++w)
              for (int v = 0; v < nw; ++v, ++bit)
                if ((cfg >> bit) & 1u) succ[w] |= (1u << v);
            m.rel[r] = std::move(succ);
          }
          for (std::size_t i = 0; i < preds.size(); ++i) {
            auto& per_world = m.interp[preds[i].first];
            per_world.resize(nw);
            for (int w = 0; w < nw; ++w)
              for (std::uint64_t t = 0; t < tuple_count[i]; ++t, ++bit)
                if ((cfg >> bit) & 1u) {
                  std::vector<int> tup(preds[i].second);
                  std::uint64_t x = t;
                  for (int a = preds[i].second - 1; a >= 0; --a) {
                    tup[a] = static_cast<int>(x % nd);
                    x /= nd;
                  }
                  per_world[w].insert(std::move(tup));
                }
          }
          if (!detail::is_canonical(m)) continue;
          ++yielded;
          if (!visit(m)) return yielded;
        }
      }
    }
  }
  return yielded;
}

}  // namespace qmlstt::kripke

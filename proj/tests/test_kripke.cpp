#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "qmlstt/kripke/classify.hpp"
#include "qmlstt/kripke/enumerate.hpp"
#include "qmlstt/kripke/model.hpp"
#include "qmlstt/kripke/satisfies.hpp"
#include "qmlstt/qml/parse.hpp"
#include "qmlstt/qml/print.hpp"
#include "support/formula_gen.hpp"
#include "support/naive_kripke.hpp"

using namespace qmlstt;
using namespace qmlstt::kripke;
using qmlstt::qml::Signature;

namespace {

Signature rp_sig() {
  Signature sig;
  sig.rels = {"r"};
  sig.preds = {{"p", 1}};
  sig.prop_vars = {"P"};
  sig.ind_vars = {"X"};
  return sig;
}

// Two worlds, one directed edge 0 -> 1, full powerset domain, p true of
// individual 0 exactly at world 1.
KripkeModel chain_model() {
  KripkeModel m;
  m.num_worlds = 2;
  m.num_individuals = 1;
  m.rel["r"] = {0b10, 0b00};
  m.prop_domain = KripkeModel::powerset_domain(2);
  m.interp["p"] = {{}, {{0}}};
  return m;
}

}  // namespace

TEST_CASE("truth clauses on a hand-built chain") {
  Signature sig = rp_sig();
  KripkeModel m = chain_model();
  m.validate(sig);

  Assignment g;
  g.prop["P"] = 0b10;  // P holds exactly at world 1
  g.ind["X"] = 0;

  auto at = [&](int w, const char* text) {
    return satisfies(m, g, w, qml::parse_formula(text, sig));
  };

  CHECK(at(1, "P"));
  CHECK_FALSE(at(0, "P"));
  CHECK(at(1, "p(X)"));
  CHECK_FALSE(at(0, "p(X)"));
  CHECK(at(0, "~p(X)"));
  CHECK(at(0, "P | p(X)") == false);
  CHECK(at(1, "P | p(X)"));

  // World 0 sees world 1; world 1 sees nothing, so boxes are vacuous there.
  CHECK(at(0, "[r]P"));
  CHECK(at(0, "[r]p(X)"));
  CHECK(at(1, "[r]false"));
  CHECK_FALSE(at(0, "[r]false"));
  CHECK(at(0, "<r>P"));
  CHECK_FALSE(at(1, "<r>true"));

  // Individual quantifier ranges over the one-element domain.
  CHECK(at(1, "forall Y:ind. p(Y)"));
  CHECK_FALSE(at(0, "exists Y:ind. p(Y)"));

  // Propositional quantifier ranges over the powerset here.
  CHECK(at(0, "exists Q:prop. Q & ~P"));
  CHECK_FALSE(at(0, "forall Q:prop. Q"));
}

TEST_CASE("reflexivity instance fails at the root of the chain") {
  Signature sig = rp_sig();
  KripkeModel m = chain_model();
  Assignment g;
  g.prop["P"] = 0b10;
  auto f = qml::parse_formula("[r]P => P", sig);
  CHECK_FALSE(satisfies(m, g, 0, f));
  CHECK(satisfies(m, g, 1, f));

  Falsifier fal;
  CHECK_FALSE(valid_in_model(m, f, &fal));
  // The reported falsifier really falsifies.
  CHECK_FALSE(satisfies(m, fal.assignment, fal.world, f));
}

TEST_CASE("propositional quantifiers range over the declared domain only") {
  Signature sig = rp_sig();
  KripkeModel m = chain_model();
  // Shrink the domain to {Ø, {0,1}}: now Q is never true at one world only.
  m.prop_domain = {0b00, 0b11};
  Assignment g;
  g.prop["P"] = 0b11;

  auto f = qml::parse_formula("exists Q:prop. Q & ~P", sig);
  CHECK_FALSE(satisfies(m, g, 0, f));

  // With the full powerset the same formula is satisfiable at world 0.
  m.prop_domain = KripkeModel::powerset_domain(2);
  g.prop["P"] = 0b10;
  CHECK(satisfies(m, g, 0, f));
}

TEST_CASE("evaluation refuses unbound variables") {
  Signature sig = rp_sig();
  KripkeModel m = chain_model();
  Assignment empty;
  CHECK_THROWS_AS(satisfies(m, empty, 0, qml::parse_formula("P", sig)), UnboundVariable);
  CHECK_THROWS_AS(satisfies(m, empty, 0, qml::parse_formula("p(X)", sig)), UnboundVariable);
}

TEST_CASE("agreement with the naive copying evaluator") {
  Signature sig = rp_sig();
  testsupport::FormulaGen gen(1812, sig);
  std::uint64_t instances = 0;
  for_each_model(sig, 2, 2, PMode::Powerset, [&](const KripkeModel& m) {
    m.validate(sig);
    for (int i = 0; i < 12; ++i) {
      auto f = gen.gen(4);
      auto fv = qml::free_vars(f);
      for_each_assignment(m, fv, [&](const Assignment& g) {
        for (int w = 0; w < m.num_worlds; ++w) {
          bool lib = satisfies(m, g, w, f);
          bool naive = testsupport::naive_sat(m, g.ind, g.prop, w, f);
          ++instances;
          if (lib != naive) {
            INFO("formula: " << qml::print_formula(f));
            REQUIRE(lib == naive);
          }
        }
        return true;
      });
    }
    return true;
  });
  CHECK(instances > 5000);
}

TEST_CASE("distribution of box over implication is valid everywhere") {
  Signature sig;
  sig.rels = {"r"};
  sig.prop_vars = {"P", "Q"};
  auto k = qml::parse_formula("[r](P => Q) => ([r]P => [r]Q)", sig);
  std::uint64_t models = 0;
  for_each_model(sig, 2, 1, PMode::All, [&](const KripkeModel& m) {
    ++models;
    Falsifier fal;
    if (!valid_in_model(m, k, &fal)) {
      INFO("world " << fal.world);
      FAIL("distribution axiom falsified");
    }
    return true;
  });
  CHECK(models > 100);
}

TEST_CASE("box and diamond are dual on random instances") {
  Signature sig = rp_sig();
  testsupport::FormulaGen gen(96, sig);
  int checked = 0;
  for_each_model(sig, 2, 1, PMode::All, [&](const KripkeModel& m) {
    auto body = gen.gen(3);
    std::string text = qml::print_formula(body);
    auto boxed = qml::Formula::box("r", body);
    auto not_dia_not = qml::neg(qml::dia("r", qml::neg(body)));
    auto fv = qml::free_vars(boxed);
    for_each_assignment(m, fv, [&](const Assignment& g) {
      for (int w = 0; w < m.num_worlds; ++w) {
        ++checked;
        INFO("body: " << text);
        REQUIRE(satisfies(m, g, w, boxed) == satisfies(m, g, w, not_dia_not));
      }
      return true;
    });
    return true;
  });
  CHECK(checked > 500);
}

TEST_CASE("model enumeration counts match orbit counting") {
  Signature sig;
  sig.rels = {"r"};
  sig.prop_vars = {"P"};

  // One world: 2 relation configurations.  Two worlds: 16 configurations in
  // orbits of the world swap; 4 are symmetric, so (16 + 4) / 2 = 10.
  std::uint64_t count = 0;
  for_each_model(sig, 2, 1, PMode::Powerset, [&](const KripkeModel&) {
    ++count;
    return true;
  });
  CHECK(count == 12);

  // Every non-empty collection of world sets as domain: 3 for one world;
  // for two worlds 16 * 15 = 240 pairs, 4 * 7 = 28 swap-symmetric,
  // (240 + 28) / 2 = 134.
  count = 0;
  for_each_model(sig, 2, 1, PMode::All, [&](const KripkeModel& m) {
    m.validate(sig);
    ++count;
    return true;
  });
  CHECK(count == 6 + 134);
}

TEST_CASE("enumeration yields valid, canonical, distinct models") {
  Signature sig = rp_sig();
  std::set<std::vector<std::uint64_t>> seen;
  for_each_model(sig, 2, 2, PMode::Powerset, [&](const KripkeModel& m) {
    m.validate(sig);
    std::vector<std::uint64_t> key;
    key.push_back(m.num_worlds);
    key.push_back(m.num_individuals);
    for (const auto& [r, succ] : m.rel)
      for (WorldSet s : succ) key.push_back(s);
    for (const auto& [k, pw] : m.interp)
      for (const auto& tuples : pw) {
        key.push_back(0xABCD);
        for (const auto& tup : tuples)
          for (int d : tup) key.push_back(static_cast<std::uint64_t>(d) + 1);
      }
    REQUIRE(seen.insert(key).second);
    return true;
  });
  CHECK(seen.size() > 100);
}

TEST_CASE("enumeration stops at the configuration ceiling") {
  Signature sig;
  sig.rels = {"r"};
  sig.prop_vars = {"P"};
  CHECK_THROWS_AS(for_each_model(sig, 3, 1, PMode::Powerset,
                                 [](const KripkeModel&) { return true; }, 100),
                  ResourceBound);
}

TEST_CASE("early exit from enumeration") {
  Signature sig;
  sig.rels = {"r"};
  sig.prop_vars = {"P"};
  int visits = 0;
  std::uint64_t yielded = for_each_model(sig, 2, 1, PMode::Powerset, [&](const KripkeModel&) {
    return ++visits < 5;
  });
  CHECK(visits == 5);
  CHECK(yielded == 5);
}

TEST_CASE("classification by closure of the propositional domain") {
  Signature sig;
  sig.rels = {"r"};
  sig.prop_vars = {"P"};

  KripkeModel m;
  m.num_worlds = 2;
  m.num_individuals = 1;
  m.rel["r"] = {0b00, 0b00};
  m.prop_domain = KripkeModel::powerset_domain(2);
  CHECK(classify(m) == ModelClass::ClosedAtomic);

  // {{0}} alone is not closed: its complement is missing.
  m.prop_domain = {0b01};
  CHECK(classify(m) == ModelClass::Baseline);

  // A proper field of sets over three worlds: {Ø, {0}, {1,2}, W}.
  KripkeModel f;
  f.num_worlds = 3;
  f.num_individuals = 1;
  f.rel["r"] = {0b000, 0b000, 0b000};
  f.prop_domain = {0b000, 0b001, 0b110, 0b111};
  CHECK(classify(f) == ModelClass::ClosedAtomic);

  // Dropping {1,2} leaves a complement undefinable.
  f.prop_domain = {0b000, 0b001, 0b111};
  CHECK(classify(f) == ModelClass::Baseline);

  // Predicate extensions add base sets: p true of the only individual at
  // world 0 defines {0}, which {Ø, W} does not contain.
  KripkeModel q;
  q.num_worlds = 2;
  q.num_individuals = 1;
  q.rel["r"] = {0b00, 0b00};
  q.prop_domain = {0b00, 0b11};
  q.interp["p"] = {{{0}}, {}};
  CHECK(classify(q) == ModelClass::Baseline);

  // With no predicate the same domain is closed: box over the empty
  // relation maps everything to W.
  KripkeModel q2 = q;
  q2.interp.clear();
  CHECK(classify(q2) == ModelClass::ClosedAtomic);

  // A non-trivial relation makes box preimages definable: for the chain,
  // the preimage of Ø under box is {w : w has a successor} = {0}.
  KripkeModel q3 = q2;
  q3.rel["r"] = {0b10, 0b00};
  CHECK(classify(q3) == ModelClass::Baseline);
}

TEST_CASE("assignment iteration covers the advertised grid") {
  Signature sig = rp_sig();
  KripkeModel m = chain_model();
  m.num_individuals = 3;
  m.interp["p"] = {{}, {{0}}};

  qml::FreeVars fv;
  fv.prop = {"P"};
  CHECK(for_each_assignment(m, fv, [](const Assignment&) { return true; }) == 4);

  fv.ind = {"X", "Y"};
  CHECK(for_each_assignment(m, fv, [](const Assignment&) { return true; }) == 36);

  fv = {};
  CHECK(for_each_assignment(m, fv, [](const Assignment&) { return true; }) == 1);
}

#include <catch2/catch_amalgamated.hpp>

#include "qmlstt/stt/ops.hpp"
#include "qmlstt/stt/term.hpp"
#include "qmlstt/stt/type.hpp"
#include "support/naive_subst.hpp"
#include "support/term_gen.hpp"

using namespace qmlstt;
using namespace qmlstt::stt;
using testsupport::TermGen;

TEST_CASE("base and arrow types print and compare structurally") {
  CHECK(Type::o()->to_string() == "$o");
  CHECK(Type::iota()->to_string() == "$i");
  CHECK(Type::mu()->to_string() == "mu");
  CHECK(prop_type()->to_string() == "mu>$o");
  CHECK(rel_type()->to_string() == "mu>mu>$o");
  CHECK(pred_type(2)->to_string() == "$i>$i>mu>$o");
  CHECK(Type::arrow(prop_type(), Type::o())->to_string() == "(mu>$o)>$o");
  CHECK(type_eq(Type::arrow(Type::mu(), Type::o()), prop_type()));
  CHECK_FALSE(type_eq(Type::iota(), Type::mu()));
}

TEST_CASE("typing of the basic term formers") {
  TermRef id = lam("X", Type::iota(), variable("X", Type::iota()));
  CHECK(type_eq(type_of(id), Type::arrow(Type::iota(), Type::iota())));

  TermRef r = constant("r", rel_type());
  TermRef w = variable("W", Type::mu());
  TermRef v = variable("V", Type::mu());
  CHECK(type_eq(type_of(app(r, {w, v})), Type::o()));

  TermRef quant = forall("W", Type::mu(), app(variable("P", prop_type()), w));
  CHECK(type_eq(type_of(quant), Type::o()));

  CHECK(type_eq(type_of(equal(w, v, Type::mu())), Type::o()));
  CHECK(type_eq(type_of(neg(disj(app(r, {w, v}), app(r, {v, w})))), Type::o()));
}

TEST_CASE("ill-typed trees are rejected with a position") {
  // Applying a world to a world: mu is not a function type.
  TermRef w = variable("W", Type::mu());
  CHECK_THROWS_AS(type_of(app(w, w)), IllTyped);

  // Argument type mismatch.
  TermRef p = variable("P", prop_type());
  TermRef x = variable("X", Type::iota());
  try {
    type_of(app(p, x));
    FAIL("expected IllTyped");
  } catch (const IllTyped& e) {
    CHECK(e.expected == "mu");
    CHECK(e.found == "$i");
    CHECK(e.position.find("arg") != std::string::npos);
  }

  // Negation of a non-truth-value.
  CHECK_THROWS_AS(type_of(neg(x)), IllTyped);
  // Disjunction with a non-truth operand.
  CHECK_THROWS_AS(type_of(disj(app(p, w), x)), IllTyped);
  // Equality instance type must match both sides.
  CHECK_THROWS_AS(type_of(equal(w, x, Type::mu())), IllTyped);
  // Pi instance must agree with the function's domain.
  CHECK_THROWS_AS(type_of(pi(p, Type::iota())), IllTyped);
}

TEST_CASE("substitution respects shadowing") {
  // [t / X] (^X. X) leaves the term alone.
  TermRef body = lam("X", Type::iota(), variable("X", Type::iota()));
  TermRef t = constant("c", Type::iota());
  TermRef out = substitute(body, "X", Type::iota(), t);
  CHECK(alpha_eq(out, body));
}

TEST_CASE("substitution renames binders to avoid capture") {
  // [Y / X] (^Y. X) must not let the binder grab the substituted Y.
  TermRef body = lam("Y", Type::iota(), variable("X", Type::iota()));
  TermRef out = substitute(body, "X", Type::iota(), variable("Y", Type::iota()));
  CHECK(alpha_eq(out, lam("Q", Type::iota(), variable("Y", Type::iota()))));
  auto fv = free_vars(out);
  REQUIRE(fv.size() == 1);
  CHECK(fv.begin()->first.name == "Y");
}

TEST_CASE("substitution checks the replacement type") {
  TermRef body = variable("X", Type::iota());
  CHECK_THROWS_AS(substitute(body, "X", Type::iota(), variable("W", Type::mu())), IllTyped);
}

TEST_CASE("substitution agrees with a rename-everything-first oracle") {
  TermGen gen(20240901);
  int interesting = 0;
  for (int i = 0; i < 300; ++i) {
    TypeRef sigma = gen.any_type(2);
    TypeRef target = gen.any_type(2);
    TermGen::Scope scope = {{"X", sigma},
                           {"Y", gen.any_type(1)},
                           {"Z", gen.any_type(1)}};
    TermRef body = gen.term(target, 4, scope);
    // Make sure the substituted variable occurs free most of the time.
    for (int tries = 0; tries < 8 && !free_vars(body).count(var_id("X", sigma)); ++tries)
      body = gen.term(target, 4, scope);
    TermGen::Scope rscope = {{"Y", scope[1].second}, {"Z", scope[2].second}};
    TermRef repl = gen.term(sigma, 3, rscope);

    TermRef kernel = substitute(body, "X", sigma, repl);
    TermRef oracle = testsupport::naive_substitute(body, "X", sigma, repl);
    INFO("body:   " << to_string(body));
    INFO("repl:   " << to_string(repl));
    INFO("kernel: " << to_string(kernel));
    INFO("oracle: " << to_string(oracle));
    REQUIRE(alpha_eq(kernel, oracle));
    CHECK(type_eq(type_of(kernel), type_of(body)));
    if (!alpha_eq(kernel, body)) ++interesting;
  }
  // The generator must actually exercise substitution, not just no-ops.
  CHECK(interesting > 50);
}

TEST_CASE("beta reduction on simple redexes") {
  TermRef id = lam("X", Type::iota(), variable("X", Type::iota()));
  TermRef c = constant("c", Type::iota());
  CHECK(alpha_eq(beta_eta_normalize(app(id, c)), c));

  // K combinator: (^X. ^Y. X) a b --> a
  TermRef k = lam("X", Type::iota(),
                  lam("Y", Type::iota(), variable("X", Type::iota())));
  TermRef a = constant("a", Type::iota());
  TermRef b = constant("b", Type::iota());
  CHECK(alpha_eq(beta_eta_normalize(app(k, {a, b})), a));

  // Reduction under a binder.
  TermRef inner = lam("W", Type::mu(), app(id, c));
  CHECK(alpha_eq(beta_eta_normalize(inner), lam("W", Type::mu(), c)));
}

TEST_CASE("eta contraction fires only without free occurrences") {
  TermRef f = constant("f", Type::arrow(Type::iota(), Type::iota()));
  TermRef etaable = lam("X", Type::iota(), app(f, variable("X", Type::iota())));
  CHECK(alpha_eq(beta_eta_normalize(etaable), f));

  // ^X. (g X X) keeps its binder: X stays free in (g X).
  TermRef g = constant("g", Type::arrow(Type::iota(), Type::arrow(Type::iota(), Type::iota())));
  TermRef non = lam("X", Type::iota(),
                    app(g, {variable("X", Type::iota()), variable("X", Type::iota())}));
  CHECK(alpha_eq(beta_eta_normalize(non), non));
}

TEST_CASE("normalization is idempotent and preserves types") {
  TermGen gen(505);
  int nontrivial = 0;
  for (int i = 0; i < 600; ++i) {
    TermRef t = gen.closed_term(gen.any_type(2), 5);
    TypeRef ty = type_of(t);
    TermRef n1 = beta_eta_normalize(t);
    TermRef n2 = beta_eta_normalize(n1);
    INFO("term: " << to_string(t));
    REQUIRE(alpha_eq(n1, n2));
    REQUIRE(type_eq(type_of(n1), ty));
    if (!alpha_eq(t, n1)) ++nontrivial;
  }
  CHECK(nontrivial > 100);
}

TEST_CASE("any reduction path reaches the same normal form") {
  TermGen gen(7777);
  int paths_with_choice = 0;
  for (int i = 0; i < 200; ++i) {
    TermRef t0 = gen.closed_term(gen.any_type(2), 5);
    TermRef expected = beta_eta_normalize(t0);
    TermRef t = t0;
    for (int step = 0; step < 200; ++step) {
      int n = testsupport::count_redexes(t);
      if (n == 0) break;
      if (n > 1) ++paths_with_choice;
      int k = gen.pick(n);
      int seen = 0;
      auto next = testsupport::beta_step(t, k, &seen);
      REQUIRE(next.has_value());
      t = *next;
    }
    REQUIRE(testsupport::count_redexes(t) == 0);
    INFO("start:  " << to_string(t0));
    INFO("random: " << to_string(t));
    REQUIRE(alpha_eq(beta_eta_normalize(t), expected));
  }
  CHECK(paths_with_choice > 20);
}

TEST_CASE("alpha equivalence identifies renamed binders only") {
  TermRef lx = lam("X", Type::iota(), variable("X", Type::iota()));
  TermRef ly = lam("Y", Type::iota(), variable("Y", Type::iota()));
  CHECK(alpha_eq(lx, ly));

  // Different projections differ.
  TermRef fst = lam("X", Type::iota(), lam("Y", Type::iota(), variable("X", Type::iota())));
  TermRef snd = lam("X", Type::iota(), lam("Y", Type::iota(), variable("Y", Type::iota())));
  CHECK_FALSE(alpha_eq(fst, snd));

  // Free variables must match by name.
  CHECK_FALSE(alpha_eq(variable("X", Type::iota()), variable("Y", Type::iota())));
  // A bound occurrence never matches a free one.
  CHECK_FALSE(alpha_eq(lx, lam("X", Type::iota(), variable("Z", Type::iota()))));
  // Binder types matter.
  CHECK_FALSE(alpha_eq(lx, lam("X", Type::mu(), variable("X", Type::mu()))));
}

TEST_CASE("fresh names avoid the given set and strip digit suffixes") {
  CHECK(fresh_name("X", {}) == "X");
  CHECK(fresh_name("X", {"X"}) == "X1");
  CHECK(fresh_name("X", {"X", "X1"}) == "X2");
  CHECK(fresh_name("X7", {"X"}) == "X1");
  CHECK(fresh_name("V", {"W"}) == "V");
}

TEST_CASE("free variable collection sees through shadowing") {
  // ^X. (X Y) with an inner rebinding of Y.
  TermRef t = lam("X", Type::arrow(Type::iota(), Type::o()),
                  disj(app(variable("X", Type::arrow(Type::iota(), Type::o())),
                           variable("Y", Type::iota())),
                       pi(lam("Y", Type::iota(), variable("P", Type::o())), Type::iota())));
  auto fv = free_vars(t);
  REQUIRE(fv.size() == 2);
  CHECK(fv.count(var_id("Y", Type::iota())) == 1);
  CHECK(fv.count(var_id("P", Type::o())) == 1);
}

TEST_CASE("debug printing uses application spines and binder brackets") {
  TermRef r = constant("r", rel_type());
  TermRef t = lam("X", Type::mu(),
                  app(r, {variable("W", Type::mu()), variable("X", Type::mu())}));
  CHECK(to_string(t) == "^[X:mu]: (r @ W @ X)");
  TermRef q = forall("V", Type::mu(), neg(app(r, {variable("V", Type::mu()),
                                                  variable("V", Type::mu())})));
  CHECK(to_string(q) == "![V:mu]: ~((r @ V @ V))");
}

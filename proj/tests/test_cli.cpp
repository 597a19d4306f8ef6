// Command-line layer: problem-file parsing, bounded validity checks with
// axiom filtering and countermodel re-verification, report rendering, the
// built-in problems, golden emitted files, and the installed binary's
// exit-code contract exercised through real subprocesses.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "catch2/catch_amalgamated.hpp"
#include "json.hpp"
#include "qmlstt/cli/check.hpp"
#include "qmlstt/cli/problem_file.hpp"
#include "qmlstt/cli/report.hpp"
#include "qmlstt/kripke/satisfies.hpp"
#include "qmlstt/qml/print.hpp"
#include "qmlstt/thf/build.hpp"
#include "qmlstt/thf/library.hpp"
#include "qmlstt/thf/parse_thf.hpp"
#include "qmlstt/thf/render.hpp"

using namespace qmlstt;
using Catch::Matchers::ContainsSubstring;

namespace {

const std::string kSourceDir = QMLSTT_SOURCE_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

// Runs the built binary through the shell, capturing combined output.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(QMLSTT_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

cli::ProblemFile load_example(const std::string& name) {
  return cli::load_problem_file(kSourceDir + "/problems/" + name);
}

}  // namespace

TEST_CASE("problem files parse into signature, axioms, and conjecture") {
  std::string text =
      "# Heading line\n"
      "#   indented detail\n"
      "\n"
      "rel r\n"
      "rel s\n"
      "pred p/1\n"
      "pred q/2\n"
      "propvar P\n"
      "indvar X\n"
      "indvar Y\n"
      "# interior comment is ignored\n"
      "axiom: [r](P | ~P)\n"
      "axiom: forall X:ind. p(X) | ~p(X)\n"
      "conjecture: <s> q(X, Y) => exists P:prop. P\n";
  cli::ProblemFile pf = cli::parse_problem_file(text);

  CHECK(pf.sig.rels == std::set<std::string>{"r", "s"});
  CHECK(pf.sig.preds == std::map<std::string, int>{{"p", 1}, {"q", 2}});
  CHECK(pf.sig.prop_vars == std::set<std::string>{"P"});
  CHECK(pf.sig.ind_vars == std::set<std::string>{"X", "Y"});
  REQUIRE(pf.axioms.size() == 2);
  CHECK(qml::print_formula(pf.axioms[0]) == "[r](P | ~P)");
  CHECK(qml::print_formula(pf.axioms[1]) ==
        "forall X:ind. p(X) | ~p(X)");
  CHECK(qml::print_formula(pf.conjecture) ==
        "~~[s]~q(X, Y) | ~(forall P:prop. ~P)");
  // Only the comments before the first directive become the header.
  REQUIRE(pf.comments.size() == 2);
  CHECK(pf.comments[0] == "Heading line");
  CHECK(pf.comments[1] == "  indented detail");
}

TEST_CASE("problem file structural errors") {
  CHECK_THROWS_WITH(cli::parse_problem_file("rel r\npropvar P\naxiom: P\n"),
                    ContainsSubstring("no conjecture"));
  CHECK_THROWS_WITH(
      cli::parse_problem_file(
          "rel r\npropvar P\nconjecture: P\nconjecture: ~P\n"),
      ContainsSubstring("second conjecture"));
  CHECK_THROWS_WITH(
      cli::parse_problem_file("rel r\npropvar P\nconjecture: P\nindvar X\n"),
      ContainsSubstring("declaration after the first formula"));
  CHECK_THROWS_WITH(cli::parse_problem_file("rel r\npred p\nconjecture: p\n"),
                    ContainsSubstring("name/arity"));
  CHECK_THROWS_WITH(
      cli::parse_problem_file("rel r\npred p/x\nconjecture: p\n"),
      ContainsSubstring("name/arity"));
  CHECK_THROWS_WITH(
      cli::parse_problem_file("rel r\npred p/9\nconjecture: p\n"),
      ContainsSubstring("arity above 8"));
  CHECK_THROWS_WITH(cli::parse_problem_file("rel R\nconjecture: true\n"),
                    ContainsSubstring("lowercase"));
  CHECK_THROWS_WITH(cli::parse_problem_file("rel r\npropvar q\nconjecture: q\n"),
                    ContainsSubstring("capitalized"));
  CHECK_THROWS_WITH(
      cli::parse_problem_file("rel r\npropvar P\npropvar P\nconjecture: P\n"),
      ContainsSubstring("duplicate declaration"));
  CHECK_THROWS_WITH(cli::parse_problem_file("rel r\nbogus line\nconjecture: true\n"),
                    ContainsSubstring("unrecognized line"));
  CHECK_THROWS_WITH(cli::parse_problem_file("rel r\naxiom:\nconjecture: true\n"),
                    ContainsSubstring("missing formula"));
  // No relation declared: the signature itself is rejected.
  CHECK_THROWS_WITH(cli::parse_problem_file("propvar P\nconjecture: P\n"),
                    ContainsSubstring("relation"));
  // Formula errors carry the problem-file line number.
  CHECK_THROWS_WITH(
      cli::parse_problem_file("rel r\npropvar P\n\nconjecture: P |\n"),
      ContainsSubstring("line 4:"));
  CHECK_THROWS_WITH(
      cli::parse_problem_file("rel r\npropvar P\nconjecture: Q\n"),
      ContainsSubstring("undeclared propositional variable 'Q'"));
  CHECK_THROWS_AS(cli::load_problem_file("/no/such/file.qml"), IoError);
}

TEST_CASE("bounded check: valid conjectures admit no countermodel") {
  cli::CheckOptions opt;
  cli::CheckVerdict v = cli::run_check(load_example("box_exists_truth.qml"), opt);
  CHECK(v.kind == cli::CheckVerdict::Kind::Valid);
  CHECK(v.exit_code() == 0);
  CHECK(v.models_enumerated == v.models_admitted);
  CHECK(v.models_admitted > 100);  // several world counts, all domains

  v = cli::run_check(load_example("distribution.qml"), opt);
  CHECK(v.kind == cli::CheckVerdict::Kind::Valid);
  v = cli::run_check(load_example("barcan.qml"), opt);
  CHECK(v.kind == cli::CheckVerdict::Kind::Valid);
  v = cli::run_check(load_example("barcan_converse.qml"), opt);
  CHECK(v.kind == cli::CheckVerdict::Kind::Valid);
}

TEST_CASE("bounded check: reflection fails in the one-world irreflexive model") {
  cli::ProblemFile pf = load_example("axiom_t.qml");
  cli::CheckVerdict v = cli::run_check(pf, cli::CheckOptions{});
  REQUIRE(v.kind == cli::CheckVerdict::Kind::Countermodel);
  CHECK(v.exit_code() == 1);
  // Ascending enumeration reaches the minimal countermodel first: one world,
  // empty relation (the box is vacuous), P false at the world.
  CHECK(v.model.num_worlds == 1);
  CHECK(v.model.rel.at("r") == std::vector<kripke::WorldSet>{0});
  REQUIRE(v.assignment.prop.count("P") == 1);
  CHECK(v.assignment.prop.at("P") == 0u);
  // The reported triple genuinely falsifies the conjecture.
  CHECK_FALSE(kripke::satisfies(v.model, v.assignment, v.world, pf.conjecture));
}

TEST_CASE("bounded check: every basic frame axiom gets a re-verified countermodel") {
  for (const std::string name :
       {"axiom_t.qml", "axiom_4.qml", "axiom_5.qml", "axiom_b.qml"}) {
    CAPTURE(name);
    cli::ProblemFile pf = load_example(name);
    cli::CheckVerdict v = cli::run_check(pf, cli::CheckOptions{});
    REQUIRE(v.kind == cli::CheckVerdict::Kind::Countermodel);
    CHECK(v.model.num_worlds <= 3);
    for (const auto& ax : pf.axioms) CHECK(kripke::valid_in_model(v.model, ax));
    CHECK_FALSE(
        kripke::satisfies(v.model, v.assignment, v.world, pf.conjecture));
  }
}

TEST_CASE("bounded check: axioms shrink the admitted model set") {
  cli::ProblemFile pf = load_example("box_vacuous.qml");
  cli::CheckVerdict v = cli::run_check(pf, cli::CheckOptions{});
  CHECK(v.kind == cli::CheckVerdict::Kind::Valid);
  CHECK(v.models_admitted < v.models_enumerated);
  CHECK(v.models_admitted > 0);

  // The same conjecture without the axiom is immediately falsified.
  cli::ProblemFile bare = cli::parse_problem_file(
      "rel r\npropvar P\nconjecture: [r] P\n");
  v = cli::run_check(bare, cli::CheckOptions{});
  CHECK(v.kind == cli::CheckVerdict::Kind::Countermodel);
}

TEST_CASE("bounded check: hitting the candidate budget reports unknown") {
  cli::CheckOptions opt;
  opt.max_candidates = 10;
  cli::CheckVerdict v = cli::run_check(load_example("distribution.qml"), opt);
  CHECK(v.kind == cli::CheckVerdict::Kind::Unknown);
  CHECK(v.exit_code() == 2);
  CHECK_THAT(v.note, ContainsSubstring("resource bound"));
}

TEST_CASE("verdict reports render to text and json") {
  cli::ProblemFile pf = load_example("axiom_t.qml");
  cli::CheckVerdict v = cli::run_check(pf, cli::CheckOptions{});

  std::string text = cli::render_text(v);
  CHECK_THAT(text, ContainsSubstring("verdict: countermodel"));
  CHECK_THAT(text, ContainsSubstring("falsified at world 0"));
  CHECK_THAT(text, ContainsSubstring("P = {}"));
  CHECK_THAT(text, ContainsSubstring("r: 0 -> {}"));

  nlohmann::json j = cli::to_json(v);
  CHECK(j["verdict"] == "countermodel");
  CHECK(j["maxWorlds"] == 3);
  CHECK(j["maxIndividuals"] == 2);
  CHECK(j["world"] == 0);
  CHECK(j["model"]["worlds"] == 1);
  CHECK(j["model"]["rel"]["r"][0].size() == 0);
  CHECK(j["assignment"]["prop"]["P"].size() == 0);

  cli::CheckVerdict ok = cli::run_check(load_example("distribution.qml"),
                                        cli::CheckOptions{});
  nlohmann::json jo = cli::to_json(ok);
  CHECK(jo["verdict"] == "valid");
  CHECK(jo.count("model") == 0);
  CHECK_THAT(cli::render_text(ok), ContainsSubstring("valid (no countermodel"));
}

TEST_CASE("built-in problems validate and round trip through the printer") {
  for (const std::string name : {"quantifier-exchange", "confluence"}) {
    CAPTURE(name);
    thf::ThfProblem p = thf::builtin_problem(name);
    std::string once = thf::render_problem(p);
    thf::ThfProblem back = thf::parse_problem(once);
    back.validate();
    CHECK(thf::render_problem(back) == once);
  }
  CHECK_THROWS_WITH(thf::builtin_problem("nope"),
                    ContainsSubstring("unknown builtin problem"));

  thf::ThfProblem frag = thf::operator_axioms_fragment();
  std::string once = thf::render_problem(frag);
  thf::ThfProblem back = thf::parse_problem(once);
  back.validate(false);
  CHECK(thf::render_problem(back) == once);
  // No conjecture: validate() in conjecture-requiring mode must reject it.
  CHECK_THROWS_WITH(back.validate(), ContainsSubstring("exactly one conjecture"));
}

TEST_CASE("emitted problems match the checked-in golden files byte for byte") {
  auto emitted = [&](const std::string& name) {
    cli::ProblemFile pf = load_example(name);
    return thf::render_problem(
        thf::make_problem(pf.sig, pf.axioms, pf.conjecture, pf.comments));
  };
  CHECK(emitted("box_exists_truth.qml") ==
        slurp(kSourceDir + "/tests/golden/box_exists_truth.p"));
  CHECK(emitted("axiom_t.qml") == slurp(kSourceDir + "/tests/golden/axiom_t.p"));
  CHECK(thf::render_problem(thf::builtin_problem("confluence")) ==
        slurp(kSourceDir + "/tests/golden/confluence.p"));
  CHECK(thf::render_problem(thf::builtin_problem("quantifier-exchange")) ==
        slurp(kSourceDir + "/tests/golden/quantifier_exchange.p"));
  CHECK(thf::render_problem(thf::operator_axioms_fragment()) ==
        slurp(kSourceDir + "/tests/golden/operator_axioms.p"));
}

TEST_CASE("binary: check exit codes and output") {
  const std::string problems = kSourceDir + "/problems/";
  RunResult r = run_cli("check " + problems + "distribution.qml");
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.output, ContainsSubstring("verdict: valid"));

  r = run_cli("check " + problems + "axiom_t.qml");
  CHECK(r.exit_code == 1);
  CHECK_THAT(r.output, ContainsSubstring("verdict: countermodel"));

  r = run_cli("check " + problems + "axiom_b.qml --json");
  CHECK(r.exit_code == 1);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["verdict"] == "countermodel");
  CHECK(j["model"]["worlds"].get<int>() <= 3);

  r = run_cli("check " + problems + "distribution.qml --max-candidates 10");
  CHECK(r.exit_code == 2);
  CHECK_THAT(r.output, ContainsSubstring("verdict: unknown"));

  r = run_cli("check /no/such/file.qml");
  CHECK(r.exit_code == 74);

  r = run_cli("check");  // missing required argument
  CHECK(r.exit_code == 64);

  r = run_cli("check " + problems + "distribution.qml --p-mode sideways");
  CHECK(r.exit_code == 64);
}

TEST_CASE("binary: syntax errors in problem files exit 64") {
  std::string bad = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                      : "/tmp") +
                    "/qmlstt-bad.qml";
  {
    std::ofstream out(bad);
    out << "rel r\npropvar P\nconjecture: Q\n";
  }
  RunResult r = run_cli("check " + bad);
  CHECK(r.exit_code == 64);
  CHECK_THAT(r.output, ContainsSubstring("undeclared propositional variable"));
  std::remove(bad.c_str());
}

TEST_CASE("binary: oracle suites pass and report counts") {
  RunResult r = run_cli("oracle pointwise --max-w 2 --max-d 1 --depth 3");
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.output, ContainsSubstring("suite pointwise: pass"));
  CHECK_THAT(r.output, ContainsSubstring("disagreements: 0"));

  r = run_cli("oracle validity --max-w 2 --max-d 1 --depth 3 --json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["suite"] == "validity");
  CHECK(j["passed"] == true);
  CHECK(j["disagreements"] == 0);
  CHECK(j["instances"].get<long long>() > 0);

  r = run_cli("oracle classification --max-w 2");
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.output, ContainsSubstring("suite classification: pass"));

  r = run_cli("oracle nonsense");
  CHECK(r.exit_code == 64);
}

TEST_CASE("binary: emit writes problems and respects -o") {
  const std::string problems = kSourceDir + "/problems/";
  RunResult r = run_cli("emit " + problems + "axiom_t.qml");
  CHECK(r.exit_code == 0);
  CHECK(r.output == slurp(kSourceDir + "/tests/golden/axiom_t.p"));

  r = run_cli("emit --builtin confluence");
  CHECK(r.exit_code == 0);
  CHECK(r.output == slurp(kSourceDir + "/tests/golden/confluence.p"));

  r = run_cli("emit-axioms");
  CHECK(r.exit_code == 0);
  CHECK(r.output == slurp(kSourceDir + "/tests/golden/operator_axioms.p"));

  std::string out = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                      : "/tmp") +
                    "/qmlstt-emit-test.p";
  r = run_cli("emit --builtin quantifier-exchange -o " + out);
  CHECK(r.exit_code == 0);
  CHECK(slurp(out) == slurp(kSourceDir + "/tests/golden/quantifier_exchange.p"));
  std::remove(out.c_str());

  r = run_cli("emit");
  CHECK(r.exit_code == 64);
  r = run_cli("emit " + problems + "axiom_t.qml --builtin confluence");
  CHECK(r.exit_code == 64);  // mutually exclusive sources
  r = run_cli("emit --builtin confluence -o /no/such/dir/out.p");
  CHECK(r.exit_code == 74);
}

TEST_CASE("binary: prove maps prover outcomes to exit codes") {
  const std::string t = kSourceDir + "/problems/axiom_t.qml";

  RunResult r = run_cli("prove " + t);
  CHECK(r.exit_code == 78);  // no prover configured

  r = run_cli("prove " + t + " --prover-cmd 'echo SZS status Theorem # {file}'");
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.output, ContainsSubstring("Theorem"));

  r = run_cli("prove " + t +
              " --prover-cmd 'echo SZS status CounterSatisfiable # {file}' --json");
  CHECK(r.exit_code == 1);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["status"] == "CounterSatisfiable");

  r = run_cli("prove " + t + " --prover-cmd 'echo SZS status GaveUp # {file}'");
  CHECK(r.exit_code == 2);

  r = run_cli("prove " + t + " --prover-cmd 'sleep 5 # {file}' --timeout 0.3");
  CHECK(r.exit_code == 2);
  CHECK_THAT(r.output, ContainsSubstring("Timeout"));

  r = run_cli("prove " + t + " --prover-cmd 'echo it broke; exit 3 # {file}'");
  CHECK(r.exit_code == 70);

  // The prover sees a real file whose content is the emitted problem.
  r = run_cli("prove " + t + " --prover-cmd 'grep -q mvalid {file} && echo "
              "SZS status Theorem'");
  CHECK(r.exit_code == 0);

  // --out keeps the emitted problem on disk.
  std::string kept = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                       : "/tmp") +
                     "/qmlstt-kept.p";
  r = run_cli("prove " + t + " --prover-cmd 'echo SZS status Theorem # {file}' -o " +
              kept);
  CHECK(r.exit_code == 0);
  CHECK(slurp(kept) == slurp(kSourceDir + "/tests/golden/axiom_t.p"));
  std::remove(kept.c_str());
}

TEST_CASE("binary: bad usage and help") {
  RunResult r = run_cli("");
  CHECK(r.exit_code == 64);
  r = run_cli("frobnicate");
  CHECK(r.exit_code == 64);
  r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.output, ContainsSubstring("check"));
  CHECK_THAT(r.output, ContainsSubstring("emit"));
  r = run_cli("check --help");
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.output, ContainsSubstring("--max-w"));
}

// Command line for the modal-logic embedding toolkit: parse problem files,
// check bounded validity against enumerated models, run the cross-evaluator
// oracle suites, emit typed higher-order problem files, and drive an
// external prover.
//
// Exit codes: 0 valid / suite pass / prover Theorem, 1 countermodel or
// refuted, 2 unknown (bounds or prover gave no verdict), 64 usage, 70
// internal error, 74 file I/O, 78 missing prover configuration.

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "qmlstt/cli/check.hpp"
#include "qmlstt/cli/problem_file.hpp"
#include "qmlstt/cli/report.hpp"
#include "qmlstt/oracle/oracle.hpp"
#include "qmlstt/thf/build.hpp"
#include "qmlstt/thf/library.hpp"
#include "qmlstt/thf/prover.hpp"
#include "qmlstt/thf/render.hpp"

namespace {

using namespace qmlstt;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("error writing: " + path);
}

void deliver(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

// The fixed signature the oracle suites sweep when no problem file supplies
// one: one relation, one unary predicate, one variable of each sort.
qml::Signature default_sweep_signature() {
  qml::Signature sig;
  sig.rels = {"r"};
  sig.preds = {{"p", 1}};
  sig.prop_vars = {"P"};
  sig.ind_vars = {"X"};
  return sig;
}

thf::ThfProblem problem_from_inputs(const std::string& file,
                                    const std::string& builtin) {
  if (!builtin.empty()) return thf::builtin_problem(builtin);
  cli::ProblemFile pf = cli::load_problem_file(file);
  return thf::make_problem(pf.sig, pf.axioms, pf.conjecture, pf.comments);
}

struct CheckArgs {
  std::string file;
  cli::CheckOptions opt;
  std::string p_mode = "powerset";
  bool json = false;
};

int cmd_check(const CheckArgs& a) {
  cli::ProblemFile pf = cli::load_problem_file(a.file);
  cli::CheckOptions opt = a.opt;
  opt.p_mode = kripke::pmode_from_string(a.p_mode);
  cli::CheckVerdict v = cli::run_check(pf, opt);
  if (a.json)
    std::cout << cli::to_json(v).dump(2) << "\n";
  else
    std::cout << cli::render_text(v);
  return v.exit_code();
}

struct OracleArgs {
  std::string suite;
  std::string sig_file;
  oracle::SweepLimits lim;
  bool json = false;
};

int cmd_oracle(const OracleArgs& a) {
  qml::Signature sig = a.sig_file.empty()
                           ? default_sweep_signature()
                           : cli::load_problem_file(a.sig_file).sig;
  oracle::OracleReport rep;
  if (a.suite == "pointwise")
    rep = oracle::check_pointwise_equivalence(sig, a.lim);
  else if (a.suite == "validity")
    rep = oracle::check_validity_agreement(sig, a.lim);
  else
    rep = oracle::check_frame_image_classification(sig, a.lim.max_worlds,
                                                   a.lim.max_individuals);
  if (a.json)
    std::cout << cli::to_json(rep, a.suite).dump(2) << "\n";
  else
    std::cout << cli::render_text(rep, a.suite);
  return rep.passed() ? 0 : 1;
}

struct EmitArgs {
  std::string file;
  std::string builtin;
  std::string out;
};

int cmd_emit(const EmitArgs& a) {
  deliver(thf::render_problem(problem_from_inputs(a.file, a.builtin)), a.out);
  return 0;
}

int cmd_emit_axioms(const std::string& out) {
  deliver(thf::render_problem(thf::operator_axioms_fragment()), out);
  return 0;
}

struct ProveArgs {
  std::string file;
  std::string builtin;
  std::string prover_cmd;
  std::string out;
  double timeout = 60.0;
  bool json = false;
};

int cmd_prove(const ProveArgs& a) {
  if (a.prover_cmd.empty()) {
    std::cerr << "error: no prover configured; pass --prover-cmd with a "
                 "command template (the problem path replaces {file})\n";
    return 78;
  }
  thf::ThfProblem p = problem_from_inputs(a.file, a.builtin);

  namespace fs = std::filesystem;
  std::string path = a.out;
  bool temporary = path.empty();
  if (temporary)
    path = (fs::temp_directory_path() /
            ("qmlstt-" + std::to_string(getpid()) + ".p"))
               .string();
  write_file(path, thf::render_problem(p));
  thf::ProverResult r = thf::run_external_prover(a.prover_cmd, path, a.timeout);
  if (temporary) {
    std::error_code ec;
    fs::remove(path, ec);
  }

  if (a.json) {
    nlohmann::json j;
    j["status"] = thf::to_string(r.status);
    j["exitCode"] = r.exit_code;
    if (!r.szs_line.empty()) j["szsLine"] = r.szs_line;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "prover status: " << thf::to_string(r.status) << "\n";
    if (!r.szs_line.empty()) std::cout << "  " << r.szs_line << "\n";
    if (r.exit_code >= 0) std::cout << "  exit code: " << r.exit_code << "\n";
  }
  switch (r.status) {
    case thf::SzsStatus::Theorem: return 0;
    case thf::SzsStatus::CounterSatisfiable: return 1;
    case thf::SzsStatus::Unknown:
    case thf::SzsStatus::Timeout: return 2;
    case thf::SzsStatus::ProcessFailure:
    case thf::SzsStatus::UnparsableOutput: break;
  }
  std::cerr << "error: prover produced no verdict";
  if (!r.output.empty()) std::cerr << "; output follows\n" << r.output;
  std::cerr << "\n";
  return 70;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantified multimodal logic over simple type theory: bounded "
               "validity checking, evaluator cross-checks, and THF emission"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "Search enumerated models for a countermodel to a problem file");
  check->add_option("file", check_args.file, "problem file (.qml)")->required();
  check->add_option("--max-w", check_args.opt.max_worlds, "world bound")
      ->capture_default_str();
  check->add_option("--max-d", check_args.opt.max_individuals, "individual bound")
      ->capture_default_str();
  check->add_option("--p-mode", check_args.p_mode,
                    "propositional domains to enumerate")
      ->check(CLI::IsMember({"powerset", "all"}))
      ->capture_default_str();
  check->add_option("--max-candidates", check_args.opt.max_candidates,
                    "raw configuration budget before giving up")
      ->capture_default_str();
  check->add_flag("--json", check_args.json, "machine-readable verdict");

  OracleArgs oracle_args;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Cross-check the two evaluators over enumerated models");
  oracle_cmd
      ->add_option("suite", oracle_args.suite,
                   "pointwise: per-world truth agreement; validity: per-model "
                   "validity agreement; classification: frame images pass the "
                   "closure check")
      ->required()
      ->check(CLI::IsMember({"pointwise", "validity", "classification"}));
  oracle_cmd->add_option("--max-w", oracle_args.lim.max_worlds, "world bound")
      ->capture_default_str();
  oracle_cmd
      ->add_option("--max-d", oracle_args.lim.max_individuals, "individual bound")
      ->capture_default_str();
  oracle_cmd
      ->add_option("--depth", oracle_args.lim.formulas.max_size,
                   "largest formula size to enumerate")
      ->default_val(4);
  oracle_cmd
      ->add_option("--count", oracle_args.lim.formulas.max_count,
                   "most formulas to enumerate")
      ->capture_default_str();
  oracle_cmd->add_option("--sig", oracle_args.sig_file,
                         "problem file supplying the signature to sweep");
  oracle_cmd->add_flag("--json", oracle_args.json, "machine-readable report");

  EmitArgs emit_args;
  CLI::App* emit = app.add_subcommand(
      "emit", "Write a problem file as a typed higher-order (.p) problem");
  CLI::Option* emit_file =
      emit->add_option("file", emit_args.file, "problem file (.qml)");
  emit->add_option("--builtin", emit_args.builtin,
                   "built-in problem instead of a file")
      ->check(CLI::IsMember({"quantifier-exchange", "confluence"}))
      ->excludes(emit_file);
  emit->add_option("-o,--out", emit_args.out, "output path (default stdout)");

  std::string emit_axioms_out;
  CLI::App* emit_axioms = app.add_subcommand(
      "emit-axioms", "Write the connective definitions as a standalone file");
  emit_axioms->add_option("-o,--out", emit_axioms_out,
                          "output path (default stdout)");

  ProveArgs prove_args;
  CLI::App* prove = app.add_subcommand(
      "prove", "Emit a problem and run an external prover on it");
  CLI::Option* prove_file =
      prove->add_option("file", prove_args.file, "problem file (.qml)");
  prove->add_option("--builtin", prove_args.builtin,
                    "built-in problem instead of a file")
      ->check(CLI::IsMember({"quantifier-exchange", "confluence"}))
      ->excludes(prove_file);
  prove->add_option("--prover-cmd", prove_args.prover_cmd,
                    "prover command template; {file} becomes the problem path");
  prove->add_option("--timeout", prove_args.timeout, "wall clock budget, seconds")
      ->capture_default_str();
  prove->add_option("-o,--out", prove_args.out,
                    "keep the emitted problem at this path");
  prove->add_flag("--json", prove_args.json, "machine-readable result");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }

  try {
    if (check->parsed()) return cmd_check(check_args);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_args);
    if (emit->parsed()) {
      if (emit_args.file.empty() && emit_args.builtin.empty()) {
        std::cerr << "error: emit needs a problem file or --builtin\n";
        return 64;
      }
      return cmd_emit(emit_args);
    }
    if (emit_axioms->parsed()) return cmd_emit_axioms(emit_axioms_out);
    if (prove->parsed()) {
      if (prove_args.file.empty() && prove_args.builtin.empty()) {
        std::cerr << "error: prove needs a problem file or --builtin\n";
        return 64;
      }
      return cmd_prove(prove_args);
    }
    std::cerr << "error: no command\n";
    return 64;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 74;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const ResourceBound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}

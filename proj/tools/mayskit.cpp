// mayskit: evaluate rules, check the May axioms, verify the majority
// characterization by enumeration and refute non-majority rules.
//
// Exit codes: 0 success/pass, 1 semantic failure (axiom violated, verdict is
// a violation, verification mismatch), 2 usage or format error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mayskit/io.hpp"
#include "mayskit/mays.hpp"
#include "mayskit/properties.hpp"
#include "mayskit/refute.hpp"
#include "mayskit/rules.hpp"

namespace {

using namespace mayskit;
using io::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct RuleSource {
  std::string path;
  std::optional<std::size_t> majority;

  void add_to(CLI::App* cmd) {
    auto* rule = cmd->add_option("--rule", path, "Rule file (JSON)");
    auto* maj = cmd->add_option("--majority", majority, "Use the built-in majority rule on N voters");
    rule->excludes(maj);
    maj->excludes(rule);
  }

  Rule load(const Limits& limits) const {
    if (majority) return Rule::majority(*majority);
    if (path.empty()) throw FormatError("one of --rule or --majority is required");
    return io::load_rule(path, limits);
  }
};

std::string describe(const AxiomWitness& w) {
  std::string s = "profile \"" + w.profile.to_string() + "\" (code " + std::to_string(w.code) + ")";
  if (w.axiom == Axiom::Anonymity) {
    s += ", v1=" + std::to_string(w.v1) + " v2=" + std::to_string(w.v2);
  } else if (w.axiom == Axiom::Monotonicity) {
    s += ", voter=" + std::to_string(w.voter) + " clause=" + std::to_string(w.clause);
  }
  return s;
}

void print_report(const AxiomReport& r) {
  std::cout << to_string(r.axiom) << ": ";
  if (r.passed()) {
    std::cout << "pass\n";
  } else {
    std::cout << "FAIL at " << describe(*r.witness) << '\n';
  }
}

void print_verdict(const Verdict& v) {
  if (v.equivalent()) {
    std::cout << "Equivalent\n";
    return;
  }
  const Violation& x = *v.violation;
  std::cout << "Violation(" << to_string(x.witness.axiom) << ") at " << describe(x.witness)
            << " [case " << x.case_id << ", step " << x.step << "]\n";
}

std::vector<Axiom> axioms_for(const std::string& which) {
  if (which == "anon") return {Axiom::Anonymity};
  if (which == "neutral") return {Axiom::Neutrality};
  if (which == "mono") return {Axiom::Monotonicity};
  return {Axiom::Anonymity, Axiom::Neutrality, Axiom::Monotonicity};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks anonymity, neutrality and monotonicity of two-candidate voting rules"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  int workers = 0;
  app.add_flag("--json", json, "Emit structured JSON instead of text");
  app.add_option("--workers", workers, "OpenMP worker threads (0 = default)")
      ->check(CLI::NonNegativeNumber);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a rule at a profile literal (+, -, 0)");
  RuleSource eval_rule;
  eval_rule.add_to(eval_cmd);
  std::string literal;
  eval_cmd->add_option("profile", literal, "Profile literal, voter 0 leftmost")->required();

  // check
  auto* check_cmd = app.add_subcommand("check", "Check the axioms over every profile");
  RuleSource check_rule;
  check_rule.add_to(check_cmd);
  std::string axiom = "all";
  check_cmd->add_option("--axiom", axiom, "Axiom to check")
      ->check(CLI::IsMember({"all", "anon", "neutral", "mono"}));
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  check_cmd->add_option("--sample", samples,
                        "Check this many random instances instead of enumerating (incomplete)");
  check_cmd->add_option("--seed", seed, "Seed for --sample");

  // verify-mays
  auto* verify_cmd = app.add_subcommand("verify-mays", "Verify the majority characterization");
  std::size_t verify_n = 0;
  std::string mode = "full";
  bool timing = false;
  verify_cmd->add_option("--n", verify_n, "Number of voters")->required();
  verify_cmd->add_option("--mode", mode, "Rule space to enumerate")
      ->check(CLI::IsMember({"full", "anonymous"}));
  verify_cmd->add_flag("--timing", timing, "Include the runtime in the report");

  // refute
  auto* refute_cmd = app.add_subcommand("refute", "Refute a rule that differs from majority");
  RuleSource refute_rule;
  refute_rule.add_to(refute_cmd);
  std::string emit_path;
  refute_cmd->add_option("--emit-certificate", emit_path, "Write the certificate to this file");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Replay a certificate against a rule");
  RuleSource validate_rule;
  validate_rule.add_to(validate_cmd);
  std::string cert_path;
  validate_cmd->add_option("--certificate", cert_path, "Certificate file")->required();

  // make-rule
  auto* make_cmd = app.add_subcommand("make-rule", "Print a rule file");
  std::size_t make_n = 0;
  std::string make_kind = "majority-table";
  make_cmd->add_option("--n", make_n, "Number of voters")->required();
  make_cmd->add_option("--kind", make_kind, "Rule to emit")
      ->check(CLI::IsMember({"majority", "majority-table", "Tie", "ForWins", "AgainstWins"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Limits limits = Limits::from_env();
    const ExecOptions exec{workers};

    if (*eval_cmd) {
      const Rule rule = eval_rule.load(limits);
      const Outcome o = eval(rule, Profile::parse(literal));
      if (json) {
        Json j;
        j["profile"] = literal;
        j["outcome"] = std::string(to_string(o));
        std::cout << j.dump() << '\n';
      } else {
        std::cout << to_string(o) << '\n';
      }
      return kOk;
    }

    if (*check_cmd) {
      const Rule rule = check_rule.load(limits);
      std::vector<AxiomReport> reports;
      for (Axiom a : axioms_for(axiom)) {
        reports.push_back(samples > 0 ? sample_check(rule, a, samples, seed)
                                      : check_axiom(rule, a, exec, limits));
      }
      bool all_pass = true;
      for (const auto& r : reports) all_pass = all_pass && r.passed();
      if (json) {
        Json j;
        j["n"] = rule.voters();
        j["sampled"] = samples > 0;
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(io::report_to_json(r));
        j["reports"] = std::move(arr);
        std::cout << j.dump() << '\n';
      } else {
        for (const auto& r : reports) print_report(r);
      }
      return all_pass ? kOk : kFailed;
    }

    if (*verify_cmd) {
      const BiconditionalReport report = mode == "full"
                                             ? verify_biconditional_exhaustive(verify_n, exec, limits)
                                             : verify_anonymous_restricted(verify_n, exec, limits);
      if (json) {
        std::cout << io::report_to_json(report, timing).dump() << '\n';
      } else {
        std::cout << "n=" << report.n << " mode=" << to_string(report.mode) << '\n'
                  << "rules examined: " << report.rules_examined << '\n'
                  << "passing all three axioms: " << report.passing << '\n'
                  << "equal to majority: " << report.equal_to_majority << '\n'
                  << "mismatches: " << report.mismatches << '\n'
                  << "passing set is {majority}: "
                  << (report.passing_set_is_majority ? "yes" : "no") << '\n';
        if (timing) std::cout << "runtime: " << report.runtime_seconds << " s\n";
      }
      return report.passing_set_is_majority ? kOk : kFailed;
    }

    if (*refute_cmd) {
      const Rule rule = refute_rule.load(limits);
      const Refutation result = refute_with_certificate(rule, limits);
      if (!emit_path.empty() && result.certificate) {
        io::save_json(emit_path, io::certificate_to_json(*result.certificate));
      }
      if (json) {
        std::cout << io::verdict_to_json(result.verdict).dump() << '\n';
      } else {
        print_verdict(result.verdict);
      }
      return result.verdict.equivalent() ? kOk : kFailed;
    }

    if (*validate_cmd) {
      const Rule rule = validate_rule.load(limits);
      const Certificate cert = io::load_certificate(cert_path);
      const Verdict verdict = validate_certificate(rule, cert, limits);
      if (json) {
        std::cout << io::verdict_to_json(verdict).dump() << '\n';
      } else {
        print_verdict(verdict);
      }
      return verdict.equivalent() ? kOk : kFailed;
    }

    if (*make_cmd) {
      Rule rule = Rule::majority(make_n);
      if (make_kind == "majority-table") {
        rule = majority_as_table(make_n, limits);
      } else if (make_kind != "majority") {
        rule = Rule::constant(make_n, outcome_from_string(make_kind), limits);
      }
      std::cout << io::rule_to_json(rule).dump() << '\n';
      return kOk;
    }
  } catch (const CertificateError& e) {
    std::cerr << "error: malformed certificate: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    // ContractError, BudgetError, std::out_of_range
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

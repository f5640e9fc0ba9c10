#include "mayskit/io.hpp"

#include <fstream>

namespace mayskit::io {
namespace {

Json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

Profile profile_field(const Json& j, const char* key) {
  return Profile::parse(field<std::string>(j, key));
}

VoterId voter_field(const Json& j, const char* key) {
  const auto v = field<std::int64_t>(j, key);
  if (v < 0) throw FormatError(std::string("field '") + key + "' must be non-negative");
  return static_cast<VoterId>(v);
}

StepKind step_kind_from_string(const std::string& s) {
  if (s == "flip") return StepKind::Flip;
  if (s == "upgrade") return StepKind::Upgrade;
  if (s == "swap") return StepKind::Swap;
  throw FormatError("unknown step kind '" + s + "'");
}

}  // namespace

Json rule_to_json(const Rule& r) {
  Json j;
  j["n"] = r.voters();
  if (r.is_majority()) {
    j["majority"] = true;
    return j;
  }
  Json table = Json::array();
  for (Outcome o : r.outcomes()) table.push_back(static_cast<int>(o));
  j["table"] = std::move(table);
  return j;
}

Rule rule_from_json(const Json& j, const Limits& limits) {
  const auto n = field<std::int64_t>(j, "n");
  if (n < 0) throw FormatError("rule field 'n' must be non-negative");
  const auto voters = static_cast<VoterCount>(n);
  const bool majority = j.contains("majority") && field<bool>(j, "majority");
  if (majority) {
    if (j.contains("table")) throw FormatError("rule has both 'majority' and 'table'");
    return Rule::majority(voters);
  }
  if (!j.contains("table")) throw FormatError("rule needs 'table' or \"majority\": true");
  if (voters > limits.max_table_n) {
    throw FormatError("rule table for n=" + std::to_string(voters) + " exceeds max n=" +
                      std::to_string(limits.max_table_n));
  }
  const Json& table = j.at("table");
  if (!table.is_array()) throw FormatError("rule field 'table' must be an array");
  if (table.size() != pow3(voters)) {
    throw FormatError("rule table for n=" + std::to_string(voters) + " needs " +
                      std::to_string(pow3(voters)) + " entries, got " +
                      std::to_string(table.size()));
  }
  std::vector<Outcome> outcomes;
  outcomes.reserve(table.size());
  for (const Json& e : table) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0 || e.get<std::int64_t>() > 2) {
      throw FormatError("rule table entries must be 0 (Tie), 1 (ForWins) or 2 (AgainstWins)");
    }
    outcomes.push_back(static_cast<Outcome>(e.get<int>()));
  }
  return Rule::table(voters, std::move(outcomes));
}

Rule load_rule(const std::filesystem::path& path, const Limits& limits) {
  try {
    return rule_from_json(parse_file(path), limits);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void save_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

Json witness_to_json(const AxiomWitness& w) {
  Json j;
  j["profile"] = w.profile.to_string();
  j["code"] = w.code;
  if (w.axiom == Axiom::Anonymity) {
    j["v1"] = w.v1;
    j["v2"] = w.v2;
  } else if (w.axiom == Axiom::Monotonicity) {
    j["voter"] = w.voter;
    j["clause"] = w.clause;
  }
  return j;
}

Json report_to_json(const AxiomReport& r) {
  Json j;
  j["axiom"] = std::string(to_string(r.axiom));
  j["status"] = r.passed() ? "pass" : "fail";
  if (r.witness) j["witness"] = witness_to_json(*r.witness);
  return j;
}

Json report_to_json(const BiconditionalReport& r, bool include_runtime) {
  Json j;
  j["n"] = r.n;
  j["mode"] = std::string(to_string(r.mode));
  j["rules_examined"] = r.rules_examined;
  j["passing"] = r.passing;
  j["equal_to_majority"] = r.equal_to_majority;
  j["mismatches"] = r.mismatches;
  j["passing_rules"] = r.passing_rules;
  j["majority_rule"] = r.majority_rule;
  j["passing_set_is_majority"] = r.passing_set_is_majority;
  if (include_runtime) j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  if (v.equivalent()) {
    j["verdict"] = "equivalent";
    return j;
  }
  j["verdict"] = "violation";
  j["axiom"] = std::string(to_string(v.violation->witness.axiom));
  j["witness"] = witness_to_json(v.violation->witness);
  j["case"] = v.violation->case_id;
  j["step"] = v.violation->step;
  return j;
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["case"] = c.case_id;
  j["row"] = c.row;
  j["origin"] = c.origin.to_string();
  j["origin_outcome"] = std::string(to_string(c.origin_outcome));
  j["working"] = c.working.to_string();
  Json steps = Json::array();
  for (const TraceStep& s : c.steps) {
    Json step;
    step["kind"] = std::string(to_string(s.kind));
    if (s.kind == StepKind::Upgrade) {
      step["voter"] = s.voter;
      step["from"] = std::string(1, ballot_symbol(s.from));
    } else if (s.kind == StepKind::Swap) {
      step["v1"] = s.v1;
      step["v2"] = s.v2;
    }
    step["pre"] = s.pre.to_string();
    step["post"] = s.post.to_string();
    step["forced_pre"] = s.forced_pre.to_string();
    step["forced_post"] = s.forced_post.to_string();
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["claim"] = std::string(to_string(c.claim));
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.case_id = field<int>(j, "case");
  c.row = field<int>(j, "row");
  c.origin = profile_field(j, "origin");
  c.origin_outcome = outcome_from_string(field<std::string>(j, "origin_outcome"));
  c.working = profile_field(j, "working");
  c.claim = outcome_from_string(field<std::string>(j, "claim"));
  if (!j.contains("steps") || !j.at("steps").is_array()) {
    throw FormatError("certificate field 'steps' must be an array");
  }
  for (const Json& step : j.at("steps")) {
    TraceStep s;
    s.kind = step_kind_from_string(field<std::string>(step, "kind"));
    if (s.kind == StepKind::Upgrade) {
      s.voter = voter_field(step, "voter");
      const auto from = field<std::string>(step, "from");
      if (from.size() != 1) throw FormatError("upgrade 'from' must be one ballot symbol");
      s.from = ballot_from_symbol(from[0]);
    } else if (s.kind == StepKind::Swap) {
      s.v1 = voter_field(step, "v1");
      s.v2 = voter_field(step, "v2");
    }
    s.pre = profile_field(step, "pre");
    s.post = profile_field(step, "post");
    s.forced_pre = Constraint::parse(field<std::string>(step, "forced_pre"));
    s.forced_post = Constraint::parse(field<std::string>(step, "forced_post"));
    c.steps.push_back(std::move(s));
  }
  return c;
}

Certificate load_certificate(const std::filesystem::path& path) {
  try {
    return certificate_from_json(parse_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace mayskit::io

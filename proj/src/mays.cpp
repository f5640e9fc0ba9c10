#include "mayskit/mays.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <string>

#include "kernels.hpp"
#include "mayskit/counting.hpp"

namespace mayskit {
namespace {

constexpr std::size_t kMaxListedRules = 64;
constexpr std::uint64_t kShardSize = 1 << 14;

struct ShardResult {
  std::uint64_t passing = 0;
  std::uint64_t equal = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::uint64_t> passing_rules;
};

void decode_digits(std::uint64_t index, std::vector<Outcome>& digits) {
  for (auto& d : digits) {
    d = static_cast<Outcome>(index % 3);
    index /= 3;
  }
}

void increment_digits(std::vector<Outcome>& digits) {
  for (auto& d : digits) {
    if (d != Outcome::AgainstWins) {
      d = static_cast<Outcome>(static_cast<int>(d) + 1);
      return;
    }
    d = Outcome::Tie;
  }
}

std::uint64_t digits_index(std::span<const Outcome> digits) { return table_index(digits); }

// Scans rule indices [begin, end). Each rule is the digit vector `digits`;
// `lookup(digits, code)` evaluates it at a profile code.
template <class Lookup>
ShardResult scan_rules(const detail::ProfileSpace& space, std::span<const Outcome> majority_digits,
                       std::uint64_t begin, std::uint64_t end, const Lookup& lookup) {
  ShardResult out;
  std::vector<Outcome> digits(majority_digits.size());
  decode_digits(begin, digits);
  const auto eval = [&](ProfileCode c) { return lookup(digits, c); };
  for (std::uint64_t i = begin; i < end; ++i, increment_digits(digits)) {
    const bool passes = !detail::scan_neutrality(space, eval, 0, space.size) &&
                        !detail::scan_monotonicity(space, eval, 0, space.size) &&
                        !detail::scan_anonymity(space, eval, 0, space.size);
    const bool equal = std::equal(digits.begin(), digits.end(), majority_digits.begin());
    if (passes) {
      ++out.passing;
      if (out.passing_rules.size() < kMaxListedRules) out.passing_rules.push_back(i);
    }
    out.equal += equal;
    out.mismatches += passes != equal;
  }
  return out;
}

template <class Lookup>
BiconditionalReport run_engine(VoterCount n, EnumerationMode mode, std::uint64_t total,
                               std::vector<Outcome> majority_digits, const ExecOptions& exec,
                               const Lookup& lookup) {
  const auto started = std::chrono::steady_clock::now();
  const detail::ProfileSpace space(n);
  const auto shards = static_cast<std::int64_t>((total + kShardSize - 1) / kShardSize);
  std::vector<ShardResult> results(static_cast<std::size_t>(shards));

#pragma omp parallel for schedule(dynamic, 1) num_threads(detail::resolve_workers(exec))
  for (std::int64_t k = 0; k < shards; ++k) {
    const std::uint64_t begin = static_cast<std::uint64_t>(k) * kShardSize;
    const std::uint64_t end = std::min(total, begin + kShardSize);
    results[static_cast<std::size_t>(k)] = scan_rules(space, majority_digits, begin, end, lookup);
  }

  BiconditionalReport report;
  report.n = n;
  report.mode = mode;
  report.rules_examined = total;
  report.majority_rule = digits_index(majority_digits);
  for (const auto& r : results) {
    report.passing += r.passing;
    report.equal_to_majority += r.equal;
    report.mismatches += r.mismatches;
    for (auto idx : r.passing_rules) {
      if (report.passing_rules.size() < kMaxListedRules) report.passing_rules.push_back(idx);
    }
  }
  report.passing_set_is_majority = report.mismatches == 0 && report.passing == 1 &&
                                   report.equal_to_majority == 1 &&
                                   report.passing_rules.front() == report.majority_rule;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::vector<std::size_t> class_of_codes(VoterCount n) {
  std::vector<std::size_t> out;
  out.reserve(pow3(n));
  for (const Profile& p : all_profiles(n)) {
    const Tally t = tally(p);
    out.push_back(count_class_index(n, t.for_count, t.against_count));
  }
  return out;
}

std::vector<Outcome> majority_class_outcomes(VoterCount n) {
  std::vector<Outcome> out;
  for (const CountClass& k : count_classes(n)) {
    out.push_back(k.against_count < k.for_count   ? Outcome::ForWins
                  : k.for_count < k.against_count ? Outcome::AgainstWins
                                                  : Outcome::Tie);
  }
  return out;
}

BiconditionalReport finish_reference(BiconditionalReport report, std::uint64_t majority_index,
                                     std::chrono::steady_clock::time_point started) {
  report.majority_rule = majority_index;
  report.passing_set_is_majority = report.mismatches == 0 && report.passing == 1 &&
                                   report.equal_to_majority == 1 &&
                                   report.passing_rules.front() == majority_index;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace

std::vector<CountClass> count_classes(VoterCount n) {
  std::vector<CountClass> out;
  out.reserve((n + 1) * (n + 2) / 2);
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; a + b <= n; ++b) out.push_back({a, b});
  }
  return out;
}

std::size_t count_class_index(VoterCount n, std::size_t for_count, std::size_t against_count) {
  if (for_count + against_count > n) {
    throw std::out_of_range("count class (" + std::to_string(for_count) + ", " +
                            std::to_string(against_count) + ") exceeds " + std::to_string(n) +
                            " voters");
  }
  // Classes with smaller a come first; a contributes (n + 1 - a') entries each.
  std::size_t index = 0;
  for (std::size_t a = 0; a < for_count; ++a) index += n + 1 - a;
  return index + against_count;
}

std::string_view to_string(EnumerationMode m) {
  return m == EnumerationMode::Full ? "full" : "anonymous";
}

std::array<AxiomReport, 3> verify_forward(VoterCount n, const ExecOptions& exec,
                                          const Limits& limits) {
  if (n > limits.max_forward_n) {
    throw BudgetError("verify_forward: n=" + std::to_string(n) + " exceeds the configured bound " +
                      std::to_string(limits.max_forward_n));
  }
  Limits table_limits = limits;
  table_limits.max_table_n = std::max(limits.max_table_n, n);
  return check_all(Rule::majority(n), exec, table_limits);
}

std::uint64_t full_rule_count(VoterCount n, const Limits& limits) {
  if (n > limits.max_full_n) {
    throw BudgetError("full rule enumeration: n=" + std::to_string(n) +
                      " is infeasible (3^(3^n) outcome tables, 3^27 already at n=3); max n=" +
                      std::to_string(limits.max_full_n) + ", use the anonymous mode instead");
  }
  return pow3(pow3(n));
}

Rule full_rule_at(VoterCount n, std::uint64_t index) {
  std::vector<Outcome> table(pow3(n));
  decode_digits(index, table);
  return Rule::table(n, std::move(table));
}

std::uint64_t anonymous_rule_count(VoterCount n, const Limits& limits) {
  if (n > limits.max_anonymous_n) {
    throw BudgetError("anonymous rule enumeration: n=" + std::to_string(n) +
                      " exceeds the budget (max n=" + std::to_string(limits.max_anonymous_n) +
                      "; 3^((n+1)(n+2)/2) rules)");
  }
  return pow3((n + 1) * (n + 2) / 2);
}

Rule anonymous_rule_at(VoterCount n, std::uint64_t index) {
  std::vector<Outcome> classes((n + 1) * (n + 2) / 2);
  decode_digits(index, classes);
  const auto class_of = class_of_codes(n);
  std::vector<Outcome> table;
  table.reserve(class_of.size());
  for (std::size_t k : class_of) table.push_back(classes[k]);
  return Rule::table(n, std::move(table));
}

BiconditionalReport verify_biconditional_exhaustive(VoterCount n, const ExecOptions& exec,
                                                    const Limits& limits) {
  const std::uint64_t total = full_rule_count(n, limits);
  const Rule majority = majority_as_table(n);
  std::vector<Outcome> majority_digits(majority.outcomes().begin(), majority.outcomes().end());
  return run_engine(n, EnumerationMode::Full, total, std::move(majority_digits), exec,
                    [](const std::vector<Outcome>& table, ProfileCode c) { return table[c]; });
}

BiconditionalReport verify_anonymous_restricted(VoterCount n, const ExecOptions& exec,
                                                const Limits& limits) {
  const std::uint64_t total = anonymous_rule_count(n, limits);
  const auto class_of = class_of_codes(n);
  return run_engine(n, EnumerationMode::Anonymous, total, majority_class_outcomes(n), exec,
                    [&class_of](const std::vector<Outcome>& classes, ProfileCode c) {
                      return classes[class_of[c]];
                    });
}

namespace reference {

namespace {

void tally_rule(BiconditionalReport& report, const Rule& rule, const Rule& majority,
                std::uint64_t index, const Limits& limits) {
  const bool passes = mayskit::reference::check_anonymous(rule, limits).passed() &&
                      mayskit::reference::check_neutral(rule, limits).passed() &&
                      mayskit::reference::check_monotone(rule, limits).passed();
  const bool equal = rules_equal(rule, majority, limits);
  if (passes) {
    ++report.passing;
    if (report.passing_rules.size() < kMaxListedRules) report.passing_rules.push_back(index);
  }
  report.equal_to_majority += equal;
  report.mismatches += passes != equal;
}

}  // namespace

BiconditionalReport verify_biconditional_exhaustive(VoterCount n, const Limits& limits) {
  const auto started = std::chrono::steady_clock::now();
  BiconditionalReport report;
  report.n = n;
  report.mode = EnumerationMode::Full;
  const Rule majority = Rule::majority(n);
  for (std::uint64_t i = 0; const Rule& rule : enumerate_all_rules(n, limits)) {
    tally_rule(report, rule, majority, i++, limits);
    ++report.rules_examined;
  }
  return finish_reference(std::move(report), table_index(majority_as_table(n).outcomes()),
                          started);
}

BiconditionalReport verify_anonymous_restricted(VoterCount n, const Limits& limits) {
  const auto started = std::chrono::steady_clock::now();
  BiconditionalReport report;
  report.n = n;
  report.mode = EnumerationMode::Anonymous;
  const Rule majority = Rule::majority(n);
  for (std::uint64_t i = 0; const Rule& rule : enumerate_anonymous_rules(n, limits)) {
    tally_rule(report, rule, majority, i++, limits);
    ++report.rules_examined;
  }
  return finish_reference(std::move(report), table_index(majority_class_outcomes(n)), started);
}

}  // namespace reference
}  // namespace mayskit

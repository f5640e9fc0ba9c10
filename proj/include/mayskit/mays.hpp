#pragma once

// Exhaustive checks of the biconditional
//
//   anonymous(r) && neutral(r) && monotone(r)  <=>  r == majority
//
// over finite profile spaces.
//
// The full engine enumerates every outcome table on n voters (3^(3^n) rules,
// so n <= 2). The anonymous engine enumerates functions from count classes
// (a, b) to outcomes and lifts each to a table; an anonymous rule depends only
// on the tally, so this covers the whole anonymous stratum for n <= 4.
//
// Rule indices are little-endian base-3 numbers over the table entries (full)
// or over the count classes (anonymous), with the rule-file outcome digits
// Tie=0, ForWins=1, AgainstWins=2.

#include <array>
#include <cstdint>
#include <ranges>
#include <string_view>
#include <vector>

#include "mayskit/core.hpp"
#include "mayskit/options.hpp"
#include "mayskit/properties.hpp"
#include "mayskit/rules.hpp"

namespace mayskit {

struct CountClass {
  std::size_t for_count = 0;
  std::size_t against_count = 0;

  friend bool operator==(const CountClass&, const CountClass&) = default;
};

/// Count classes of n voters in canonical order: a = 0..n, then b = 0..n-a.
std::vector<CountClass> count_classes(VoterCount n);

/// Position of (a, b) in count_classes(n).
std::size_t count_class_index(VoterCount n, std::size_t for_count, std::size_t against_count);

enum class EnumerationMode { Full, Anonymous };

std::string_view to_string(EnumerationMode m);

struct BiconditionalReport {
  VoterCount n = 0;
  EnumerationMode mode = EnumerationMode::Full;
  std::uint64_t rules_examined = 0;
  /// Rules passing all three axioms.
  std::uint64_t passing = 0;
  /// Rules pointwise equal to majority.
  std::uint64_t equal_to_majority = 0;
  /// Rules where "passes all three" and "equals majority" disagree.
  std::uint64_t mismatches = 0;
  std::vector<std::uint64_t> passing_rules;
  std::uint64_t majority_rule = 0;
  /// The passing set is exactly {majority}.
  bool passing_set_is_majority = false;
  double runtime_seconds = 0.0;
};

/// The three checks against Majority(n). Bounded by limits.max_forward_n.
std::array<AxiomReport, 3> verify_forward(VoterCount n, const ExecOptions& exec = {},
                                          const Limits& limits = {});

/// Number of outcome tables on n voters; throws BudgetError past max_full_n.
std::uint64_t full_rule_count(VoterCount n, const Limits& limits = {});
Rule full_rule_at(VoterCount n, std::uint64_t index);

/// Every outcome table on n voters in index order.
inline auto enumerate_all_rules(VoterCount n, const Limits& limits = {}) {
  return std::views::iota(std::uint64_t{0}, full_rule_count(n, limits)) |
         std::views::transform([n](std::uint64_t i) { return full_rule_at(n, i); });
}

/// Number of count-class functions; throws BudgetError past max_anonymous_n.
std::uint64_t anonymous_rule_count(VoterCount n, const Limits& limits = {});
/// Lift of the index-th count-class function to a table rule.
Rule anonymous_rule_at(VoterCount n, std::uint64_t index);

inline auto enumerate_anonymous_rules(VoterCount n, const Limits& limits = {}) {
  return std::views::iota(std::uint64_t{0}, anonymous_rule_count(n, limits)) |
         std::views::transform([n](std::uint64_t i) { return anonymous_rule_at(n, i); });
}

BiconditionalReport verify_biconditional_exhaustive(VoterCount n, const ExecOptions& exec = {},
                                                    const Limits& limits = {});

BiconditionalReport verify_anonymous_restricted(VoterCount n, const ExecOptions& exec = {},
                                                const Limits& limits = {});

namespace reference {

/// Serial versions built on Rule objects and the reference checkers.
BiconditionalReport verify_biconditional_exhaustive(VoterCount n, const Limits& limits = {});
BiconditionalReport verify_anonymous_restricted(VoterCount n, const Limits& limits = {});

}  // namespace reference

}  // namespace mayskit

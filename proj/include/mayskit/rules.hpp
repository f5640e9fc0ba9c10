#pragma once

// Social choice functions over n voters: the built-in simple majority rule or
// an explicit outcome table indexed by profile code. Both are total, so every
// rule is decisive by construction.

#include <span>
#include <vector>

#include "mayskit/core.hpp"
#include "mayskit/options.hpp"

namespace mayskit {

/// ForWins if For ballots outnumber Against ballots, AgainstWins if the
/// reverse holds, Tie otherwise.
Outcome majority_election(const Profile& p);

class Rule {
 public:
  static Rule majority(VoterCount n) { return Rule(n, {}, true); }
  /// Throws ContractError unless table.size() == 3^n.
  static Rule table(VoterCount n, std::vector<Outcome> table);
  /// Table rule with the same outcome everywhere.
  static Rule constant(VoterCount n, Outcome o, const Limits& limits = {});

  VoterCount voters() const noexcept { return n_; }
  bool is_majority() const noexcept { return majority_; }
  /// Empty for the built-in majority rule.
  std::span<const Outcome> outcomes() const noexcept { return table_; }

  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  Rule(VoterCount n, std::vector<Outcome> table, bool majority)
      : n_(n), majority_(majority), table_(std::move(table)) {}

  VoterCount n_ = 0;
  bool majority_ = false;
  std::vector<Outcome> table_;
};

/// Throws ContractError when p has a different voter count than r.
Outcome eval(const Rule& r, const Profile& p);

/// Outcome at a profile code; code must be below 3^n.
Outcome eval_code(const Rule& r, ProfileCode code);

/// Throws BudgetError when n exceeds limits.max_table_n.
void require_table_budget(VoterCount n, const Limits& limits, const char* what);

Rule majority_as_table(VoterCount n, const Limits& limits = {});

/// Pointwise equality over every profile on n voters.
bool rules_equal(const Rule& r1, const Rule& r2, const Limits& limits = {});

/// Little-endian base-3 index of an outcome table (digits as in rule files).
std::uint64_t table_index(std::span<const Outcome> table);

}  // namespace mayskit

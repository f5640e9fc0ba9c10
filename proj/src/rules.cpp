#include "mayskit/rules.hpp"

#include <string>

#include "mayskit/counting.hpp"

namespace mayskit {
namespace {

void require_same_arity(VoterCount a, VoterCount b) {
  if (a != b) {
    throw ContractError("arity mismatch: rule has " + std::to_string(a) + " voters, got " +
                        std::to_string(b));
  }
}

Outcome majority_from_code(VoterCount n, ProfileCode code) {
  std::size_t pro = 0;
  std::size_t con = 0;
  for (VoterCount v = 0; v < n; ++v, code /= 3) {
    const auto d = code % 3;
    pro += d == 1;
    con += d == 2;
  }
  if (con < pro) return Outcome::ForWins;
  if (pro < con) return Outcome::AgainstWins;
  return Outcome::Tie;
}

}  // namespace

Outcome majority_election(const Profile& p) {
  const std::size_t true_num = count(is_for, p);
  const std::size_t false_num = count(is_against, p);
  if (false_num < true_num) return Outcome::ForWins;
  if (true_num < false_num) return Outcome::AgainstWins;
  return Outcome::Tie;
}

Rule Rule::table(VoterCount n, std::vector<Outcome> table) {
  if (table.size() != pow3(n)) {
    throw ContractError("rule table for " + std::to_string(n) + " voters needs " +
                        std::to_string(pow3(n)) + " entries, got " +
                        std::to_string(table.size()));
  }
  return Rule(n, std::move(table), false);
}

Rule Rule::constant(VoterCount n, Outcome o, const Limits& limits) {
  require_table_budget(n, limits, "constant rule");
  return table(n, std::vector<Outcome>(pow3(n), o));
}

Outcome eval(const Rule& r, const Profile& p) {
  require_same_arity(r.voters(), p.size());
  if (r.is_majority()) return majority_election(p);
  return r.outcomes()[encode_profile(p)];
}

Outcome eval_code(const Rule& r, ProfileCode code) {
  if (r.is_majority()) return majority_from_code(r.voters(), code);
  return r.outcomes()[code];
}

void require_table_budget(VoterCount n, const Limits& limits, const char* what) {
  if (n > limits.max_table_n) {
    throw BudgetError(std::string(what) + ": n=" + std::to_string(n) +
                      " exceeds the table budget (max n=" + std::to_string(limits.max_table_n) +
                      ", 3^n profiles)");
  }
}

Rule majority_as_table(VoterCount n, const Limits& limits) {
  require_table_budget(n, limits, "majority_as_table");
  std::vector<Outcome> table;
  table.reserve(pow3(n));
  for (const Profile& p : all_profiles(n)) table.push_back(majority_election(p));
  return Rule::table(n, std::move(table));
}

bool rules_equal(const Rule& r1, const Rule& r2, const Limits& limits) {
  require_same_arity(r1.voters(), r2.voters());
  if (r1.is_majority() && r2.is_majority()) return true;
  require_table_budget(r1.voters(), limits, "rules_equal");
  const ProfileCode size = pow3(r1.voters());
  for (ProfileCode c = 0; c < size; ++c) {
    if (eval_code(r1, c) != eval_code(r2, c)) return false;
  }
  return true;
}

std::uint64_t table_index(std::span<const Outcome> table) {
  std::uint64_t index = 0;
  for (auto it = table.rbegin(); it != table.rend(); ++it) {
    index = index * 3 + static_cast<std::uint64_t>(*it);
  }
  return index;
}

}  // namespace mayskit

#pragma once

// Random generators shared by the unit and acceptance suites. Every
// generator takes the engine explicitly so runs are reproducible.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "mayskit/core.hpp"
#include "mayskit/rules.hpp"
#include "mayskit/transforms.hpp"

namespace mayskit::testing {

using Rng = std::mt19937_64;

inline Ballot random_ballot(Rng& rng) {
  return static_cast<Ballot>(std::uniform_int_distribution<int>(0, 2)(rng));
}

inline Profile random_profile(Rng& rng, VoterCount n) {
  std::vector<Ballot> b(n);
  for (auto& x : b) x = random_ballot(rng);
  return Profile(std::move(b));
}

inline Profile random_profile(Rng& rng, VoterCount min_n, VoterCount max_n) {
  return random_profile(rng, std::uniform_int_distribution<VoterCount>(min_n, max_n)(rng));
}

inline VoterId random_voter(Rng& rng, VoterCount n) {
  return std::uniform_int_distribution<VoterId>(0, n - 1)(rng);
}

/// A random list of voter ids (duplicates allowed) of length up to max_len.
inline VoterList random_voter_list(Rng& rng, VoterCount n, std::size_t max_len) {
  VoterList l(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
  for (auto& v : l) v = random_voter(rng, n);
  return l;
}

/// A random duplicate-free sub-list of 0..n-1 in random order.
inline VoterList random_nodup_list(Rng& rng, VoterCount n) {
  VoterList all = all_voters(n);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::uniform_int_distribution<std::size_t>(0, n)(rng));
  return all;
}

inline Rule random_table_rule(Rng& rng, VoterCount n) {
  std::vector<Outcome> t(pow3(n));
  std::uniform_int_distribution<int> d(0, 2);
  for (auto& o : t) o = static_cast<Outcome>(d(rng));
  return Rule::table(n, std::move(t));
}

/// The rule "voter 0's ballot decides".
inline Rule dictator_rule(VoterCount n) {
  std::vector<Outcome> t;
  for (const Profile& p : all_profiles(n)) {
    t.push_back(p[0] == Ballot::For       ? Outcome::ForWins
                : p[0] == Ballot::Against ? Outcome::AgainstWins
                                          : Outcome::Tie);
  }
  return Rule::table(n, std::move(t));
}

}  // namespace mayskit::testing

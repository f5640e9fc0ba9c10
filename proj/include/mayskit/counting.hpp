#pragma once

#include <cstddef>
#include <span>

#include "mayskit/core.hpp"

namespace mayskit {

using BallotPredicate = bool (*)(Ballot);

constexpr bool is_for(Ballot b) { return b == Ballot::For; }
constexpr bool is_against(Ballot b) { return b == Ballot::Against; }
constexpr bool is_indifferent(Ballot b) { return b == Ballot::Indifferent; }

/// For/Against/Indifferent counts; for + against + indifferent == n.
struct Tally {
  std::size_t for_count = 0;
  std::size_t against_count = 0;
  std::size_t indifferent_count = 0;

  friend bool operator==(const Tally&, const Tally&) = default;
};

/// Number of positions of `voters` (counted with multiplicity) whose ballot
/// satisfies `pred`. Throws std::out_of_range on an invalid voter id.
std::size_t count_helper(BallotPredicate pred, const Profile& p, std::span<const VoterId> voters);

/// count_helper over the full voter set 0..n-1.
std::size_t count(BallotPredicate pred, const Profile& p);

Tally tally(const Profile& p);

}  // namespace mayskit

#pragma once

// Profile transformations used by the axioms and by the refutation chain.
//
// `swaps` and `upgrade_vote_list` are right folds: the last list element is
// applied to the input first and the head is applied last. Certificates
// replay them in that order.

#include <span>
#include <vector>

#include "mayskit/core.hpp"

namespace mayskit {

struct SwapPair {
  VoterId first = 0;
  VoterId second = 0;

  friend bool operator==(const SwapPair&, const SwapPair&) = default;
};

using SwapList = std::vector<SwapPair>;
using VoterList = std::vector<VoterId>;

/// For <-> Against; Indifferent is fixed.
constexpr Ballot flip(Ballot b) {
  switch (b) {
    case Ballot::For: return Ballot::Against;
    case Ballot::Against: return Ballot::For;
    case Ballot::Indifferent: break;
  }
  return Ballot::Indifferent;
}

/// ForWins <-> AgainstWins; Tie is fixed.
constexpr Outcome flip(Outcome o) {
  switch (o) {
    case Outcome::ForWins: return Outcome::AgainstWins;
    case Outcome::AgainstWins: return Outcome::ForWins;
    case Outcome::Tie: break;
  }
  return Outcome::Tie;
}

Profile flip_vote(const Profile& p);

/// Exchanges the ballots of v1 and v2.
Profile swap(VoterId v1, VoterId v2, const Profile& p);

/// Sets voter v's ballot to c.
Profile update(VoterId v, Ballot c, const Profile& p);

Profile swaps(const Profile& p, std::span<const SwapPair> l);

/// Every listed voter ends with a For ballot.
Profile upgrade_vote_list(const Profile& p, std::span<const VoterId> l);

/// Sub-list of l (order kept) of voters with p[v]=For and q[v]=Against.
VoterList left_true_right_false(const Profile& p, const Profile& q, std::span<const VoterId> l);

/// Sub-list of l (order kept) of voters with p[v]=Against and q[v]=For.
VoterList left_false_right_true(const Profile& p, const Profile& q, std::span<const VoterId> l);

/// A swap list l with swaps(q, l) == p.
///
/// Requires equal voter counts, identical Indifferent positions and equal For
/// counts; throws ContractError naming the failed hypothesis otherwise. The
/// result zips the two partition lists over all voters in ascending order.
SwapList build_swap_list(const Profile& p, const Profile& q);

/// 0, 1, ..., n-1.
VoterList all_voters(VoterCount n);

}  // namespace mayskit

#include "mayskit/transforms.hpp"

#include <numeric>
#include <string>

#include "mayskit/counting.hpp"

namespace mayskit {
namespace {

void check_same_size(const Profile& p, const Profile& q) {
  if (p.size() != q.size()) {
    throw ContractError("profiles have different voter counts (" + std::to_string(p.size()) +
                        " vs " + std::to_string(q.size()) + ")");
  }
}

template <class Keep>
VoterList filter_voters(const Profile& p, const Profile& q, std::span<const VoterId> l, Keep keep) {
  check_same_size(p, q);
  VoterList out;
  for (VoterId v : l) {
    if (keep(p.at(v), q.at(v))) out.push_back(v);
  }
  return out;
}

}  // namespace

Profile flip_vote(const Profile& p) {
  std::vector<Ballot> out;
  out.reserve(p.size());
  for (Ballot b : p) out.push_back(flip(b));
  return Profile(std::move(out));
}

Profile swap(VoterId v1, VoterId v2, const Profile& p) {
  check_voter(p, v1);
  check_voter(p, v2);
  Profile out = p;
  out.set(v1, p[v2]);
  out.set(v2, p[v1]);
  return out;
}

Profile update(VoterId v, Ballot c, const Profile& p) {
  Profile out = p;
  out.set(v, c);
  return out;
}

Profile swaps(const Profile& p, std::span<const SwapPair> l) {
  Profile out = p;
  for (auto it = l.rbegin(); it != l.rend(); ++it) out = swap(it->first, it->second, out);
  return out;
}

Profile upgrade_vote_list(const Profile& p, std::span<const VoterId> l) {
  Profile out = p;
  for (auto it = l.rbegin(); it != l.rend(); ++it) out.set(*it, Ballot::For);
  return out;
}

VoterList left_true_right_false(const Profile& p, const Profile& q, std::span<const VoterId> l) {
  return filter_voters(p, q, l, [](Ballot a, Ballot b) {
    return a == Ballot::For && b == Ballot::Against;
  });
}

VoterList left_false_right_true(const Profile& p, const Profile& q, std::span<const VoterId> l) {
  return filter_voters(p, q, l, [](Ballot a, Ballot b) {
    return a == Ballot::Against && b == Ballot::For;
  });
}

SwapList build_swap_list(const Profile& p, const Profile& q) {
  check_same_size(p, q);
  for (VoterId v = 0; v < p.size(); ++v) {
    if ((p[v] == Ballot::Indifferent) != (q[v] == Ballot::Indifferent)) {
      throw ContractError("build_swap_list: Indifferent positions differ at voter " +
                          std::to_string(v));
    }
  }
  if (count(is_for, p) != count(is_for, q)) {
    throw ContractError("build_swap_list: For counts differ (" + std::to_string(count(is_for, p)) +
                        " vs " + std::to_string(count(is_for, q)) + ")");
  }
  const VoterList voters = all_voters(p.size());
  const VoterList l1 = left_true_right_false(p, q, voters);
  const VoterList l2 = left_false_right_true(p, q, voters);
  // Equal lengths follow from the two hypotheses above.
  SwapList out;
  out.reserve(l1.size());
  for (std::size_t i = 0; i < l1.size() && i < l2.size(); ++i) out.push_back({l1[i], l2[i]});
  return out;
}

VoterList all_voters(VoterCount n) {
  VoterList out(n);
  std::iota(out.begin(), out.end(), VoterId{0});
  return out;
}

}  // namespace mayskit

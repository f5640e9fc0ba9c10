#include "mayskit/counting.hpp"

namespace mayskit {

std::size_t count_helper(BallotPredicate pred, const Profile& p, std::span<const VoterId> voters) {
  std::size_t k = 0;
  for (VoterId v : voters) {
    if (pred(p.at(v))) ++k;
  }
  return k;
}

std::size_t count(BallotPredicate pred, const Profile& p) {
  std::size_t k = 0;
  for (Ballot b : p) {
    if (pred(b)) ++k;
  }
  return k;
}

Tally tally(const Profile& p) {
  Tally t;
  t.for_count = count(is_for, p);
  t.against_count = count(is_against, p);
  t.indifferent_count = p.size() - t.for_count - t.against_count;
  return t;
}

}  // namespace mayskit

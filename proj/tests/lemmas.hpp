#pragma once

// Randomized checks of the counting and transform lemmas. Each check runs a
// fixed number of generated cases and reports the first counterexample.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mayskit/counting.hpp"
#include "mayskit/transforms.hpp"
#include "support.hpp"

namespace mayskit::testing {

struct LemmaResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

namespace detail {

inline void record(LemmaResult& r, bool holds, const std::string& what) {
  ++r.cases;
  if (holds) return;
  if (r.failures++ == 0) r.first_failure = what;
}

inline bool contains(const VoterList& l, VoterId v) {
  return std::find(l.begin(), l.end(), v) != l.end();
}

inline std::vector<VoterId> indifferent_set(const Profile& p) {
  std::vector<VoterId> out;
  for (VoterId v = 0; v < p.size(); ++v) {
    if (p[v] == Ballot::Indifferent) out.push_back(v);
  }
  return out;
}

/// Permutes the non-Indifferent ballots of p among the positions in `where`.
inline Profile permute_decided(Rng& rng, const Profile& p, const VoterList& where) {
  VoterList slots;
  std::vector<Ballot> ballots;
  for (VoterId v : where) {
    if (p[v] != Ballot::Indifferent) {
      slots.push_back(v);
      ballots.push_back(p[v]);
    }
  }
  std::shuffle(ballots.begin(), ballots.end(), rng);
  Profile q = p;
  for (std::size_t i = 0; i < slots.size(); ++i) q.set(slots[i], ballots[i]);
  return q;
}

inline Ballot random_decided(Rng& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? Ballot::For : Ballot::Against;
}

}  // namespace detail

inline LemmaResult lemma_swap_same(Rng& rng, int cases) {
  LemmaResult r{"swap_same"};
  for (int i = 0; i < cases; ++i) {
    const Profile p = random_profile(rng, 1, 12);
    const VoterId v = random_voter(rng, p.size());
    detail::record(r, swap(v, v, p) == p, p.to_string());
  }
  return r;
}

inline LemmaResult lemma_swap_involution(Rng& rng, int cases) {
  LemmaResult r{"swap involution"};
  for (int i = 0; i < cases; ++i) {
    const Profile p = random_profile(rng, 1, 12);
    const VoterId a = random_voter(rng, p.size());
    const VoterId b = random_voter(rng, p.size());
    const Profile s = swap(a, b, p);
    const bool moved = s[a] == p[b] && s[b] == p[a];
    detail::record(r, moved && swap(a, b, s) == p, p.to_string());
  }
  return r;
}

inline LemmaResult lemma_swap_invariant_count(Rng& rng, int cases) {
  LemmaResult r{"swap_invariant_count"};
  const BallotPredicate preds[] = {is_for, is_against, is_indifferent};
  for (int i = 0; i < cases; ++i) {
    const Profile p = random_profile(rng, 1, 12);
    VoterList l = random_nodup_list(rng, p.size());
    if (l.empty()) l.push_back(random_voter(rng, p.size()));
    const VoterId v1 = l[std::uniform_int_distribution<std::size_t>(0, l.size() - 1)(rng)];
    const VoterId v2 = l[std::uniform_int_distribution<std::size_t>(0, l.size() - 1)(rng)];
    const BallotPredicate f = preds[i % 3];
    detail::record(r, count_helper(f, p, l) == count_helper(f, swap(v1, v2, p), l), p.to_string());
  }
  return r;
}

inline LemmaResult lemma_swap_not_in_list(Rng& rng, int cases) {
  LemmaResult r{"swap_not_in_list"};
  const BallotPredicate preds[] = {is_for, is_against, is_indifferent};
  for (int i = 0; i < cases; ++i) {
    const Profile p = random_profile(rng, 2, 12);
    const VoterId v1 = random_voter(rng, p.size());
    const VoterId v2 = random_voter(rng, p.size());
    VoterList l;
    for (VoterId v : random_nodup_list(rng, p.size())) {
      if (v != v1 && v != v2) l.push_back(v);
    }
    const BallotPredicate f = preds[i % 3];
    detail::record(r, count_helper(f, p, l) == count_helper(f, swap(v1, v2, p), l), p.to_string());
  }
  return r;
}

inline LemmaResult lemma_flip_involution(Rng& rng, int cases) {
  LemmaResult r{"flip involution"};
  for (int i = 0; i < cases; ++i) {
    const Profile p = random_profile(rng, 0, 12);
    const auto o = static_cast<Outcome>(i % 3);
    const Ballot b = random_ballot(rng);
    detail::record(r, flip_vote(flip_vote(p)) == p && flip(flip(o)) == o && flip(flip(b)) == b,
                   p.to_string());
  }
  return r;
}

inline LemmaResult lemma_flip_reverse_count(Rng& rng, int cases) {
  LemmaResult r{"flip_reverse_count1/2"};
  for (int i = 0; i < cases; ++i) {
    const Profile p = random_profile(rng, 1, 12);
    const VoterList l = random_voter_list(rng, p.size(), 15);
    const Profile f = flip_vote(p);
    const bool one = count_helper(is_against, f, l) == count_helper(is_for, p, l);
    const bool two = count_helper(is_for, f, l) == count_helper(is_against, p, l);
    detail::record(r, one && two, p.to_string());
  }
  return r;
}

/// All nine (old ballot, new ballot) transitions for a voter inside a
/// duplicate-free list, with the For/Against count deltas written out.
inline LemmaResult lemma_update_count_family(Rng& rng, int cases) {
  LemmaResult r{"update count family (9 cases)"};
  struct Row {
    Ballot from, to;
    int d_for, d_against;
  };
  // clang-format off
  static constexpr Row rows[] = {
      {Ballot::For,         Ballot::For,          0,  0},
      {Ballot::For,         Ballot::Against,     -1, +1},
      {Ballot::For,         Ballot::Indifferent, -1,  0},
      {Ballot::Against,     Ballot::For,         +1, -1},
      {Ballot::Against,     Ballot::Against,      0,  0},
      {Ballot::Against,     Ballot::Indifferent,  0, -1},
      {Ballot::Indifferent, Ballot::For,         +1,  0},
      {Ballot::Indifferent, Ballot::Against,      0, +1},
      {Ballot::Indifferent, Ballot::Indifferent,  0,  0},
  };
  // clang-format on
  for (int i = 0; i < cases; ++i) {
    const Row& row = rows[i % 9];
    Profile p = random_profile(rng, 1, 12);
    VoterList l = random_nodup_list(rng, p.size());
    if (l.empty()) l.push_back(random_voter(rng, p.size()));
    const VoterId v = l[std::uniform_int_distribution<std::size_t>(0, l.size() - 1)(rng)];
    p.set(v, row.from);
    const Profile u = update(v, row.to, p);
    const auto fa = static_cast<long>(count_helper(is_for, p, l));
    const auto fb = static_cast<long>(count_helper(is_against, p, l));
    const auto ua = static_cast<long>(count_helper(is_for, u, l));
    const auto ub = static_cast<long>(count_helper(is_against, u, l));
    detail::record(r, ua == fa + row.d_for && ub == fb + row.d_against, p.to_string());
  }
  return r;
}

inline LemmaResult lemma_upgrade_not_in_list(Rng& rng, int cases) {
  LemmaResult r{"upgrade_not_in_list"};
  const BallotPredicate preds[] = {is_for, is_against, is_indifferent};
  for (int i = 0; i < cases; ++i) {
    const Profile p = random_profile(rng, 1, 12);
    const VoterId v = random_voter(rng, p.size());
    VoterList l;
    for (VoterId x : random_voter_list(rng, p.size(), 15)) {
      if (x != v) l.push_back(x);
    }
    const BallotPredicate f = preds[i % 3];
    const Ballot c = random_ballot(rng);
    detail::record(r, count_helper(f, p, l) == count_helper(f, update(v, c, p), l), p.to_string());
  }
  return r;
}

inline LemmaResult lemma_upgrade_vote_list_tally(Rng& rng, int cases) {
  LemmaResult r{"upgrade_vote_list tally arithmetic"};
  for (int i = 0; i < cases; ++i) {
    const Profile p = random_profile(rng, 0, 12);
    VoterList against;
    for (VoterId v = 0; v < p.size(); ++v) {
      if (p[v] == Ballot::Against) against.push_back(v);
    }
    std::shuffle(against.begin(), against.end(), rng);
    against.resize(std::uniform_int_distribution<std::size_t>(0, against.size())(rng));
    const Profile u = upgrade_vote_list(p, against);
    const Tally before = tally(p);
    const Tally after = tally(u);
    bool ok = after.for_count == before.for_count + against.size() &&
              after.against_count + against.size() == before.against_count &&
              detail::indifferent_set(u) == detail::indifferent_set(p);
    for (VoterId v : against) ok = ok && u[v] == Ballot::For;
    detail::record(r, ok, p.to_string());
  }
  return r;
}

inline LemmaResult lemma_count_true_difference_relation(Rng& rng, int cases) {
  LemmaResult r{"count_true_difference_relation"};
  for (int i = 0; i < cases; ++i) {
    const Profile p = random_profile(rng, 1, 12);
    const VoterList l = random_nodup_list(rng, p.size());
    Profile q = detail::permute_decided(rng, p, l);
    for (VoterId v = 0; v < p.size(); ++v) {
      if (!detail::contains(l, v) && p[v] != Ballot::Indifferent) q.set(v, detail::random_decided(rng));
    }
    // Preconditions: same Indifferent set, same For count over l.
    const bool pre = detail::indifferent_set(p) == detail::indifferent_set(q) &&
                     count_helper(is_for, p, l) == count_helper(is_for, q, l);
    const auto l1 = left_true_right_false(p, q, l);
    const auto l2 = left_false_right_true(p, q, l);
    bool disjoint = true;
    for (VoterId v : l1) disjoint = disjoint && !detail::contains(l2, v);
    detail::record(r, pre && disjoint && l1.size() == l2.size(), p.to_string() + " " + q.to_string());
  }
  return r;
}

inline LemmaResult lemma_build_swap_list(Rng& rng, int cases) {
  LemmaResult r{"build_swap_list correctness"};
  for (int i = 0; i < cases; ++i) {
    const Profile p = random_profile(rng, 0, 12);
    const Profile q = detail::permute_decided(rng, p, all_voters(p.size()));
    const SwapList l = build_swap_list(p, q);
    const Profile replay = swaps(q, l);
    bool preserves = true;
    Profile at = q;
    for (auto it = l.rbegin(); it != l.rend(); ++it) {
      at = swap(it->first, it->second, at);
      preserves = preserves && detail::indifferent_set(at) == detail::indifferent_set(p);
    }
    detail::record(r, replay == p && preserves, p.to_string() + " " + q.to_string());
  }
  return r;
}

inline std::vector<LemmaResult> run_all_lemmas(std::uint64_t seed, int cases) {
  Rng rng(seed);
  return {
      lemma_swap_same(rng, cases),
      lemma_swap_involution(rng, cases),
      lemma_swap_invariant_count(rng, cases),
      lemma_swap_not_in_list(rng, cases),
      lemma_flip_involution(rng, cases),
      lemma_flip_reverse_count(rng, cases),
      lemma_update_count_family(rng, cases),
      lemma_upgrade_not_in_list(rng, cases),
      lemma_upgrade_vote_list_tally(rng, cases),
      lemma_count_true_difference_relation(rng, cases),
      lemma_build_swap_list(rng, cases),
  };
}

}  // namespace mayskit::testing

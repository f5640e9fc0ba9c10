#include "mayskit/properties.hpp"

#include <random>

#include "kernels.hpp"
#include "mayskit/transforms.hpp"

namespace mayskit {
namespace detail {

ProfileSpace::ProfileSpace(VoterCount voters) : n(voters), size(pow3(voters)), place(voters) {
  for (VoterCount v = 0; v < n; ++v) place[v] = pow3(v);
  flipped.resize(size);
  // flip maps digit 1 <-> 2, i.e. d -> (3 - d) % 3.
  flipped[0] = 0;
  for (ProfileCode c = 1; c < size; ++c) {
    const auto d = c % 3;
    flipped[c] = flipped[c / 3] * 3 + (3 - d) % 3;
  }
}

}  // namespace detail

namespace {

using detail::Hit;

AxiomWitness make_witness(Axiom axiom, VoterCount n, const Hit& hit) {
  AxiomWitness w;
  w.axiom = axiom;
  w.code = hit.code;
  w.profile = decode_profile(n, hit.code);
  if (axiom == Axiom::Anonymity) {
    w.v1 = hit.first;
    w.v2 = hit.second;
  } else if (axiom == Axiom::Monotonicity) {
    w.voter = hit.first;
    w.clause = static_cast<int>(hit.second);
  }
  return w;
}

AxiomReport run_kernel(const Rule& r, Axiom axiom, const ExecOptions& exec, const Limits& limits) {
  require_table_budget(r.voters(), limits, "axiom check");
  const detail::ProfileSpace space(r.voters());

  std::vector<Outcome> materialized;
  std::span<const Outcome> table = r.outcomes();
  if (r.is_majority()) {
    materialized.reserve(space.size);
    for (ProfileCode c = 0; c < space.size; ++c) materialized.push_back(eval_code(r, c));
    table = materialized;
  }
  const auto lookup = [table](ProfileCode c) { return table[c]; };

  std::optional<Hit> hit;
  switch (axiom) {
    case Axiom::Anonymity:
      hit = detail::first_hit(space.size, exec, [&](ProfileCode b, ProfileCode e) {
        return detail::scan_anonymity(space, lookup, b, e);
      });
      break;
    case Axiom::Neutrality:
      hit = detail::first_hit(space.size, exec, [&](ProfileCode b, ProfileCode e) {
        return detail::scan_neutrality(space, lookup, b, e);
      });
      break;
    case Axiom::Monotonicity:
      hit = detail::first_hit(space.size, exec, [&](ProfileCode b, ProfileCode e) {
        return detail::scan_monotonicity(space, lookup, b, e);
      });
      break;
  }
  AxiomReport report{axiom, std::nullopt};
  if (hit) report.witness = make_witness(axiom, r.voters(), *hit);
  return report;
}

bool for_or_tie(Outcome o) { return o != Outcome::AgainstWins; }

// Clause c of the monotonicity definition at (p, v): nullopt if the clause
// does not apply to p[v], otherwise the updated profile that must be ForWins.
std::optional<Profile> monotone_target(const Profile& p, VoterId v, int clause) {
  switch (clause) {
    case 1:
      if (p[v] == Ballot::Against) return update(v, Ballot::Indifferent, p);
      break;
    case 2:
      if (p[v] == Ballot::Against) return update(v, Ballot::For, p);
      break;
    case 3:
      if (p[v] == Ballot::Indifferent) return update(v, Ballot::For, p);
      break;
    default:
      break;
  }
  return std::nullopt;
}

ProfileCode code_if_representable(const Profile& p) {
  return p.size() < detail::kMaxDigits ? encode_profile(p) : 0;
}

}  // namespace

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::Anonymity: return "anonymity";
    case Axiom::Neutrality: return "neutrality";
    case Axiom::Monotonicity: return "monotonicity";
  }
  return "?";
}

AxiomReport check_anonymous(const Rule& r, const ExecOptions& exec, const Limits& limits) {
  return run_kernel(r, Axiom::Anonymity, exec, limits);
}

AxiomReport check_neutral(const Rule& r, const ExecOptions& exec, const Limits& limits) {
  return run_kernel(r, Axiom::Neutrality, exec, limits);
}

AxiomReport check_monotone(const Rule& r, const ExecOptions& exec, const Limits& limits) {
  return run_kernel(r, Axiom::Monotonicity, exec, limits);
}

AxiomReport check_axiom(const Rule& r, Axiom axiom, const ExecOptions& exec, const Limits& limits) {
  return run_kernel(r, axiom, exec, limits);
}

std::array<AxiomReport, 3> check_all(const Rule& r, const ExecOptions& exec, const Limits& limits) {
  return {check_anonymous(r, exec, limits), check_neutral(r, exec, limits),
          check_monotone(r, exec, limits)};
}

bool witness_violates(const Rule& r, const AxiomWitness& w) {
  const Profile& p = w.profile;
  switch (w.axiom) {
    case Axiom::Anonymity:
      return eval(r, p) != eval(r, swap(w.v1, w.v2, p));
    case Axiom::Neutrality:
      return eval(r, p) != flip(eval(r, flip_vote(p)));
    case Axiom::Monotonicity: {
      check_voter(p, w.voter);
      if (!for_or_tie(eval(r, p))) return false;
      const auto target = monotone_target(p, w.voter, w.clause);
      return target && eval(r, *target) != Outcome::ForWins;
    }
  }
  return false;
}

AxiomReport sample_check(const Rule& r, Axiom axiom, std::uint64_t samples, std::uint64_t seed) {
  const VoterCount n = r.voters();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ballot(0, 2);
  std::uniform_int_distribution<VoterId> voter(0, n == 0 ? 0 : n - 1);

  AxiomReport report{axiom, std::nullopt};
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<Ballot> ballots(n);
    for (auto& b : ballots) b = static_cast<Ballot>(ballot(rng));
    AxiomWitness w;
    w.axiom = axiom;
    w.profile = Profile(std::move(ballots));
    w.code = code_if_representable(w.profile);
    if (axiom == Axiom::Anonymity) {
      if (n == 0) continue;
      w.v1 = voter(rng);
      w.v2 = voter(rng);
      if (witness_violates(r, w)) {
        report.witness = std::move(w);
        return report;
      }
    } else if (axiom == Axiom::Neutrality) {
      if (witness_violates(r, w)) {
        report.witness = std::move(w);
        return report;
      }
    } else {
      for (VoterId v = 0; v < n; ++v) {
        for (int clause = 1; clause <= 3; ++clause) {
          w.voter = v;
          w.clause = clause;
          if (witness_violates(r, w)) {
            report.witness = std::move(w);
            return report;
          }
        }
      }
    }
  }
  return report;
}

namespace reference {

AxiomReport check_anonymous(const Rule& r, const Limits& limits) {
  require_table_budget(r.voters(), limits, "axiom check");
  const VoterCount n = r.voters();
  for (const Profile& p : all_profiles(n)) {
    for (VoterId v1 = 0; v1 < n; ++v1) {
      for (VoterId v2 = 0; v2 < n; ++v2) {
        if (eval(r, p) != eval(r, swap(v1, v2, p))) {
          AxiomWitness w{Axiom::Anonymity, p, encode_profile(p), v1, v2};
          return {Axiom::Anonymity, std::move(w)};
        }
      }
    }
  }
  return {Axiom::Anonymity, std::nullopt};
}

AxiomReport check_neutral(const Rule& r, const Limits& limits) {
  require_table_budget(r.voters(), limits, "axiom check");
  for (const Profile& p : all_profiles(r.voters())) {
    if (eval(r, p) != flip(eval(r, flip_vote(p)))) {
      AxiomWitness w{Axiom::Neutrality, p, encode_profile(p)};
      return {Axiom::Neutrality, std::move(w)};
    }
  }
  return {Axiom::Neutrality, std::nullopt};
}

AxiomReport check_monotone(const Rule& r, const Limits& limits) {
  require_table_budget(r.voters(), limits, "axiom check");
  const VoterCount n = r.voters();
  for (const Profile& p : all_profiles(n)) {
    if (!for_or_tie(eval(r, p))) continue;
    for (VoterId v = 0; v < n; ++v) {
      for (int clause = 1; clause <= 3; ++clause) {
        const auto target = monotone_target(p, v, clause);
        if (target && eval(r, *target) != Outcome::ForWins) {
          AxiomWitness w{Axiom::Monotonicity, p, encode_profile(p), 0, 0, v, clause};
          return {Axiom::Monotonicity, std::move(w)};
        }
      }
    }
  }
  return {Axiom::Monotonicity, std::nullopt};
}

}  // namespace reference
}  // namespace mayskit

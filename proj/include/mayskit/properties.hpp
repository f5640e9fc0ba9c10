#pragma once

// Decision procedures for anonymity, neutrality and monotonicity over the
// finite profile space of a rule.
//
//   anonymity:    r(p) == r(swap(v1, v2, p))                for all p, v1, v2
//   neutrality:   r(p) == flip(r(flip_vote(p)))             for all p
//   monotonicity: r(p) in {ForWins, Tie} implies, for every voter v,
//                   clause 1: p[v]=Against     => r(update(v, Indifferent, p)) == ForWins
//                   clause 2: p[v]=Against     => r(update(v, For, p))         == ForWins
//                   clause 3: p[v]=Indifferent => r(update(v, For, p))         == ForWins
//
// A failing report carries the first witness in profile-code order, then
// voter order (v1 before v2), then clause order. The default entry points run
// OpenMP kernels; `reference::` holds the serial versions written directly
// against the transforms, kept as the test oracle.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "mayskit/core.hpp"
#include "mayskit/options.hpp"
#include "mayskit/rules.hpp"

namespace mayskit {

enum class Axiom { Anonymity, Neutrality, Monotonicity };

std::string_view to_string(Axiom a);

struct AxiomWitness {
  Axiom axiom = Axiom::Anonymity;
  Profile profile;
  ProfileCode code = 0;
  VoterId v1 = 0;  // anonymity
  VoterId v2 = 0;  // anonymity
  VoterId voter = 0;  // monotonicity
  int clause = 0;     // monotonicity, 1..3

  friend bool operator==(const AxiomWitness&, const AxiomWitness&) = default;
};

struct AxiomReport {
  Axiom axiom = Axiom::Anonymity;
  std::optional<AxiomWitness> witness;

  bool passed() const noexcept { return !witness.has_value(); }
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

AxiomReport check_anonymous(const Rule& r, const ExecOptions& exec = {}, const Limits& limits = {});
AxiomReport check_neutral(const Rule& r, const ExecOptions& exec = {}, const Limits& limits = {});
AxiomReport check_monotone(const Rule& r, const ExecOptions& exec = {}, const Limits& limits = {});
AxiomReport check_axiom(const Rule& r, Axiom axiom, const ExecOptions& exec = {},
                        const Limits& limits = {});

/// Anonymity, neutrality, monotonicity, in that order.
std::array<AxiomReport, 3> check_all(const Rule& r, const ExecOptions& exec = {},
                                     const Limits& limits = {});

/// Replays a witness through eval and the transforms. True iff the axiom
/// equation it names really fails for r at that instance.
bool witness_violates(const Rule& r, const AxiomWitness& w);

/// Random-profile checking for rules too large to enumerate (built-in
/// majority at large n). Incomplete: a pass only means no sampled instance
/// failed. The witness is the first failing instance in sample order.
AxiomReport sample_check(const Rule& r, Axiom axiom, std::uint64_t samples, std::uint64_t seed);

namespace reference {

AxiomReport check_anonymous(const Rule& r, const Limits& limits = {});
AxiomReport check_neutral(const Rule& r, const Limits& limits = {});
AxiomReport check_monotone(const Rule& r, const Limits& limits = {});

}  // namespace reference

}  // namespace mayskit

#pragma once

// Certificate-producing refutation of rules that differ from majority.
//
// Given a profile p where r(p) differs from majority(p), the disagreement is
// classified into one of six rows by comparing the tally (a For, b Against)
// and r(p):
//
//   row 1: a > b, AgainstWins    row 2: a > b, Tie
//   row 3: a < b, ForWins        row 4: a < b, Tie
//   row 5: a = b, AgainstWins    row 6: a = b, ForWins
//
// Rows 3, 4 and 6 are reduced to rows 1, 2 and 5 by flipping every ballot;
// the reduced cases are numbered 1 (row 1), 2 (row 2) and 3 (row 5). On the
// working profile w the chain is
//
//   w --flip--> p1 --upgrade (a-b) Against voters--> p2 --swaps--> w
//
// and forces r(w) = ForWins, which contradicts the case hypothesis. Each step
// carries the outcome constraint it starts from and the one the axiom forces
// after it, so replaying a certificate against r finds a step whose axiom
// instance fails.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mayskit/core.hpp"
#include "mayskit/options.hpp"
#include "mayskit/properties.hpp"
#include "mayskit/rules.hpp"

namespace mayskit {

/// "equals X" or "in {ForWins, Tie}".
class Constraint {
 public:
  static Constraint equals(Outcome o) { return Constraint(false, o); }
  static Constraint for_or_tie() { return Constraint(true, Outcome::ForWins); }
  /// Inverse of to_string(): "ForWins", "AgainstWins", "Tie" or "ForWins|Tie".
  static Constraint parse(std::string_view s);

  bool is_for_or_tie() const noexcept { return weak_; }
  Outcome value() const noexcept { return value_; }
  bool satisfied_by(Outcome o) const noexcept {
    return weak_ ? o != Outcome::AgainstWins : o == value_;
  }
  std::string to_string() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;

 private:
  Constraint(bool weak, Outcome value) : weak_(weak), value_(value) {}
  bool weak_;
  Outcome value_;
};

enum class StepKind { Flip, Upgrade, Swap };

std::string_view to_string(StepKind k);

struct TraceStep {
  StepKind kind = StepKind::Flip;
  VoterId voter = 0;                // Upgrade
  Ballot from = Ballot::Against;    // Upgrade
  VoterId v1 = 0;                   // Swap
  VoterId v2 = 0;                   // Swap
  Profile pre;
  Profile post;
  Constraint forced_pre = Constraint::for_or_tie();
  Constraint forced_post = Constraint::for_or_tie();

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Certificate {
  int case_id = 1;  // 1..3 after reduction
  int row = 1;      // 1..6 before reduction
  Profile origin;
  Outcome origin_outcome = Outcome::Tie;
  Profile working;  // origin, or flip_vote(origin) for rows 3, 4, 6
  std::vector<TraceStep> steps;
  Outcome claim = Outcome::ForWins;  // forced at `working` by the last step

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct ReducedCase {
  int case_id = 1;
  int row = 1;
  Profile working;
  bool flipped = false;
};

struct Violation {
  AxiomWitness witness;
  std::size_t step = 0;  // index of the failing step in the certificate
  int case_id = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Equivalent when `violation` is empty.
struct Verdict {
  std::optional<Violation> violation;

  bool equivalent() const noexcept { return !violation.has_value(); }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Malformed certificate: broken chain, transform mismatch, bad constraint
/// shape, or a hypothesis that does not hold for the rule it is checked on.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lowest-code profile where r differs from majority.
std::optional<Profile> find_disagreement(const Rule& r, const Limits& limits = {});

/// Throws ContractError when r agrees with majority at p.
ReducedCase reduce_case(const Rule& r, const Profile& p);

Certificate generate_certificate(const Rule& r, const Profile& p);

/// Rule-independent structural validation; throws CertificateError.
void check_certificate_structure(const Certificate& c);

/// Replays the chain against r and reports the first step whose axiom
/// instance fails. Equivalent is returned only when r has no disagreement
/// with majority at all.
Verdict validate_certificate(const Rule& r, const Certificate& c, const Limits& limits = {});

struct Refutation {
  Verdict verdict;
  std::optional<Certificate> certificate;
};

Refutation refute_with_certificate(const Rule& r, const Limits& limits = {});

/// Equivalent iff r equals majority pointwise.
Verdict refute(const Rule& r, const Limits& limits = {});

/// refute() for each rule, spread over exec.workers threads; output order
/// matches input order.
std::vector<Verdict> refute_many(std::span<const Rule> rules, const ExecOptions& exec = {},
                                 const Limits& limits = {});

}  // namespace mayskit

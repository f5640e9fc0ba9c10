#include "mayskit/refute.hpp"

#include <omp.h>

#include <exception>
#include <mutex>

#include "mayskit/counting.hpp"
#include "mayskit/transforms.hpp"

namespace mayskit {
namespace {

// Row of the six-way disagreement table; 0 when the outcome is majority's.
int classify_row(const Tally& t, Outcome got) {
  if (t.for_count > t.against_count) {
    return got == Outcome::AgainstWins ? 1 : got == Outcome::Tie ? 2 : 0;
  }
  if (t.for_count < t.against_count) {
    return got == Outcome::ForWins ? 3 : got == Outcome::Tie ? 4 : 0;
  }
  return got == Outcome::AgainstWins ? 5 : got == Outcome::ForWins ? 6 : 0;
}

bool row_is_flipped(int row) { return row == 3 || row == 4 || row == 6; }

int case_of_row(int row) {
  switch (row) {
    case 1: case 3: return 1;
    case 2: case 4: return 2;
    default: return 3;
  }
}

Outcome case_hypothesis(int case_id) {
  return case_id == 2 ? Outcome::Tie : Outcome::AgainstWins;
}

TraceStep flip_step(const Profile& pre, Constraint forced_pre, Constraint forced_post) {
  TraceStep s;
  s.kind = StepKind::Flip;
  s.pre = pre;
  s.post = flip_vote(pre);
  s.forced_pre = forced_pre;
  s.forced_post = forced_post;
  return s;
}

Profile apply_step(const TraceStep& s) {
  switch (s.kind) {
    case StepKind::Flip: return flip_vote(s.pre);
    case StepKind::Upgrade: return update(s.voter, Ballot::For, s.pre);
    case StepKind::Swap: return swap(s.v1, s.v2, s.pre);
  }
  return s.pre;
}

[[noreturn]] void fail(std::size_t step, const std::string& what) {
  throw CertificateError("certificate step " + std::to_string(step) + ": " + what);
}

bool entails_for_or_tie(const Constraint& c) {
  return c.is_for_or_tie() || c.value() != Outcome::AgainstWins;
}

void check_step_shape(std::size_t k, const TraceStep& s) {
  switch (s.kind) {
    case StepKind::Flip:
      if (s.forced_pre.is_for_or_tie() || s.forced_post.is_for_or_tie() ||
          s.forced_post.value() != flip(s.forced_pre.value())) {
        fail(k, "flip step must force 'equals X' to 'equals flip(X)'");
      }
      break;
    case StepKind::Upgrade:
      if (s.from != Ballot::Against && s.from != Ballot::Indifferent) {
        fail(k, "upgrade must start from Against or Indifferent");
      }
      if (s.pre.at(s.voter) != s.from) fail(k, "upgrade 'from' ballot does not match pre profile");
      if (!entails_for_or_tie(s.forced_pre)) fail(k, "upgrade needs a ForWins-or-Tie premise");
      if (!(s.forced_post.is_for_or_tie() || s.forced_post.value() == Outcome::ForWins)) {
        fail(k, "upgrade can only force ForWins or ForWins|Tie");
      }
      break;
    case StepKind::Swap:
      if (s.forced_pre != s.forced_post) fail(k, "swap must preserve its constraint");
      break;
  }
}

AxiomWitness witness_for_step(const TraceStep& s) {
  AxiomWitness w;
  w.profile = s.pre;
  w.code = encode_profile(s.pre);
  switch (s.kind) {
    case StepKind::Flip:
      w.axiom = Axiom::Neutrality;
      break;
    case StepKind::Upgrade:
      w.axiom = Axiom::Monotonicity;
      w.voter = s.voter;
      w.clause = s.from == Ballot::Against ? 2 : 3;
      break;
    case StepKind::Swap:
      w.axiom = Axiom::Anonymity;
      w.v1 = s.v1;
      w.v2 = s.v2;
      break;
  }
  return w;
}

}  // namespace

Constraint Constraint::parse(std::string_view s) {
  if (s == "ForWins|Tie") return for_or_tie();
  return equals(outcome_from_string(s));
}

std::string Constraint::to_string() const {
  return weak_ ? std::string("ForWins|Tie") : std::string(mayskit::to_string(value_));
}

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::Flip: return "flip";
    case StepKind::Upgrade: return "upgrade";
    case StepKind::Swap: return "swap";
  }
  return "?";
}

std::optional<Profile> find_disagreement(const Rule& r, const Limits& limits) {
  require_table_budget(r.voters(), limits, "find_disagreement");
  if (r.is_majority()) return std::nullopt;
  const ProfileCode size = pow3(r.voters());
  for (ProfileCode c = 0; c < size; ++c) {
    const Profile p = decode_profile(r.voters(), c);
    if (eval(r, p) != majority_election(p)) return p;
  }
  return std::nullopt;
}

ReducedCase reduce_case(const Rule& r, const Profile& p) {
  const Outcome got = eval(r, p);
  if (got == majority_election(p)) {
    throw ContractError("reduce_case: rule agrees with majority at " + p.to_string());
  }
  const int row = classify_row(tally(p), got);
  const bool flipped = row_is_flipped(row);
  return {case_of_row(row), row, flipped ? flip_vote(p) : p, flipped};
}

Certificate generate_certificate(const Rule& r, const Profile& p) {
  const ReducedCase reduced = reduce_case(r, p);
  Certificate c;
  c.case_id = reduced.case_id;
  c.row = reduced.row;
  c.origin = p;
  c.origin_outcome = eval(r, p);
  c.working = reduced.working;
  c.claim = Outcome::ForWins;

  Constraint current = Constraint::equals(c.origin_outcome);
  if (reduced.flipped) {
    c.steps.push_back(flip_step(p, current, Constraint::equals(flip(c.origin_outcome))));
    current = c.steps.back().forced_post;
  }

  // p1: every ballot of the working profile flipped.
  const Profile& w = reduced.working;
  const Outcome hypothesis = case_hypothesis(reduced.case_id);
  c.steps.push_back(flip_step(w, current, Constraint::equals(flip(hypothesis))));
  current = c.steps.back().forced_post;
  const Profile p1 = c.steps.back().post;

  // p2: the first (a - b) Against voters of p1 moved to For.
  const Tally t = tally(w);
  const std::size_t upgrades = t.for_count - t.against_count;
  VoterList chosen;
  for (VoterId v = 0; v < p1.size() && chosen.size() < upgrades; ++v) {
    if (p1[v] == Ballot::Against) chosen.push_back(v);
  }
  Profile at = p1;
  for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
    TraceStep s;
    s.kind = StepKind::Upgrade;
    s.voter = *it;
    s.from = at[*it];
    s.pre = at;
    s.post = update(*it, Ballot::For, at);
    s.forced_pre = current;
    const bool last = std::next(it) == chosen.rend();
    s.forced_post = (last || current == Constraint::equals(Outcome::ForWins))
                        ? Constraint::equals(Outcome::ForWins)
                        : Constraint::for_or_tie();
    current = s.forced_post;
    at = s.post;
    c.steps.push_back(std::move(s));
  }
  const Profile p2 = upgrade_vote_list(p1, chosen);
  if (at != p2) throw std::logic_error("upgrade steps diverge from upgrade_vote_list");

  // p2 and w share Indifferent positions and For counts, so swaps reach w.
  const SwapList pairs = build_swap_list(w, p2);
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    TraceStep s;
    s.kind = StepKind::Swap;
    s.v1 = it->first;
    s.v2 = it->second;
    s.pre = at;
    s.post = swap(it->first, it->second, at);
    s.forced_pre = current;
    s.forced_post = current;
    at = s.post;
    c.steps.push_back(std::move(s));
  }
  if (at != w) throw std::logic_error("swap chain does not return to the working profile");
  return c;
}

void check_certificate_structure(const Certificate& c) {
  if (c.steps.empty()) throw CertificateError("certificate has no steps");
  const int row = classify_row(tally(c.origin), c.origin_outcome);
  if (row == 0) throw CertificateError("certificate origin outcome agrees with majority");
  if (c.row != row || c.case_id != case_of_row(row)) {
    throw CertificateError("certificate row/case do not match the origin tally and outcome");
  }
  const bool flipped = row_is_flipped(row);
  if (c.working != (flipped ? flip_vote(c.origin) : c.origin)) {
    throw CertificateError("working profile does not match the case reduction");
  }
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const TraceStep& s = c.steps[k];
    if (s.pre.size() != c.origin.size() || s.post.size() != c.origin.size()) {
      fail(k, "profile has the wrong number of voters");
    }
    try {
      if (apply_step(s) != s.post) fail(k, "post profile is not the named transform of pre");
    } catch (const std::out_of_range& e) {
      fail(k, e.what());
    }
    check_step_shape(k, s);
    if (k == 0) {
      if (s.pre != c.origin) fail(k, "chain does not start at the origin profile");
      if (s.forced_pre != Constraint::equals(c.origin_outcome)) {
        fail(k, "chain does not start from the origin outcome");
      }
    } else {
      const TraceStep& prev = c.steps[k - 1];
      if (prev.post != s.pre) fail(k, "pre profile does not match previous post profile");
      if (prev.forced_post != s.forced_pre) fail(k, "constraint does not match previous step");
    }
  }
  const TraceStep& last = c.steps.back();
  if (last.post != c.working) throw CertificateError("chain does not end at the working profile");
  if (last.forced_post != Constraint::equals(c.claim)) {
    throw CertificateError("final constraint differs from the certificate claim");
  }
  // The claim has to contradict what the origin outcome says about `working`.
  const Outcome known = flipped ? flip(c.origin_outcome) : c.origin_outcome;
  if (known == c.claim) throw CertificateError("certificate claim does not contradict its premise");
}

Verdict validate_certificate(const Rule& r, const Certificate& c, const Limits& limits) {
  check_certificate_structure(c);
  if (r.voters() != c.origin.size()) {
    throw CertificateError("certificate is for " + std::to_string(c.origin.size()) +
                           " voters, rule has " + std::to_string(r.voters()));
  }
  if (eval(r, c.origin) != c.origin_outcome) {
    if (!find_disagreement(r, limits)) return Verdict{};
    throw CertificateError("certificate premise r(" + c.origin.to_string() + ") = " +
                           std::string(to_string(c.origin_outcome)) + " does not hold for this rule");
  }
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const TraceStep& s = c.steps[k];
    if (!s.forced_pre.satisfied_by(eval(r, s.pre))) {
      throw std::logic_error("certificate premise lost before step " + std::to_string(k));
    }
    if (!s.forced_post.satisfied_by(eval(r, s.post))) {
      return Verdict{Violation{witness_for_step(s), k, c.case_id}};
    }
  }
  throw std::logic_error("certificate chain closed without a failing step");
}

Refutation refute_with_certificate(const Rule& r, const Limits& limits) {
  const auto p = find_disagreement(r, limits);
  if (!p) return {};
  Certificate c = generate_certificate(r, *p);
  Verdict v = validate_certificate(r, c, limits);
  return {std::move(v), std::move(c)};
}

Verdict refute(const Rule& r, const Limits& limits) {
  return refute_with_certificate(r, limits).verdict;
}

std::vector<Verdict> refute_many(std::span<const Rule> rules, const ExecOptions& exec,
                                 const Limits& limits) {
  std::vector<Verdict> out(rules.size());
  std::exception_ptr error;
  std::mutex error_mutex;
  const int workers = exec.workers > 0 ? exec.workers : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(rules.size());

#pragma omp parallel for schedule(dynamic, 64) num_threads(workers)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = refute(rules[static_cast<std::size_t>(i)], limits);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace mayskit

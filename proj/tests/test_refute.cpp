#include <doctest.h>

#include "mayskit/counting.hpp"
#include "mayskit/mays.hpp"
#include "mayskit/refute.hpp"
#include "mayskit/transforms.hpp"
#include "support.hpp"

using namespace mayskit;

namespace {

Profile P(const char* s) { return Profile::parse(s); }

/// A rule refuted at p must really fail the axiom the verdict names.
void check_refutation_sound(const Rule& r, const Refutation& ref) {
  REQUIRE(ref.certificate.has_value());
  REQUIRE_FALSE(ref.verdict.equivalent());
  const Violation& v = *ref.verdict.violation;
  CHECK(witness_violates(r, v.witness));
  CHECK_FALSE(check_axiom(r, v.witness.axiom).passed());
  CHECK(v.case_id == ref.certificate->case_id);
  CHECK_NOTHROW(check_certificate_structure(*ref.certificate));
}

Rule with_entry(const Rule& base, const Profile& p, Outcome o) {
  std::vector<Outcome> t(base.outcomes().begin(), base.outcomes().end());
  t[encode_profile(p)] = o;
  return Rule::table(base.voters(), std::move(t));
}

}  // namespace

TEST_CASE("Constraint") {
  CHECK(Constraint::for_or_tie().satisfied_by(Outcome::Tie));
  CHECK(Constraint::for_or_tie().satisfied_by(Outcome::ForWins));
  CHECK_FALSE(Constraint::for_or_tie().satisfied_by(Outcome::AgainstWins));
  CHECK_FALSE(Constraint::equals(Outcome::Tie).satisfied_by(Outcome::ForWins));
  for (const char* s : {"ForWins", "AgainstWins", "Tie", "ForWins|Tie"}) {
    CHECK(Constraint::parse(s).to_string() == s);
  }
  CHECK_THROWS(Constraint::parse("Maybe"));
}

TEST_CASE("find_disagreement") {
  CHECK_FALSE(find_disagreement(Rule::majority(3)).has_value());
  CHECK_FALSE(find_disagreement(majority_as_table(3)).has_value());
  CHECK(find_disagreement(Rule::constant(1, Outcome::Tie)) == P("+"));
  CHECK(find_disagreement(Rule::constant(2, Outcome::ForWins)) == P("00"));
  CHECK(find_disagreement(with_entry(majority_as_table(3), P("+-+"), Outcome::Tie)) == P("+-+"));
}

TEST_CASE("reduce_case covers the six rows") {
  struct Row {
    const char* profile;
    Outcome got;
    int row, case_id;
    bool flipped;
  };
  const Row rows[] = {
      {"++-", Outcome::AgainstWins, 1, 1, false}, {"++-", Outcome::Tie, 2, 2, false},
      {"+--", Outcome::ForWins, 3, 1, true},      {"+--", Outcome::Tie, 4, 2, true},
      {"+-0", Outcome::AgainstWins, 5, 3, false}, {"+-0", Outcome::ForWins, 6, 3, true},
  };
  for (const Row& row : rows) {
    const Profile p = P(row.profile);
    const ReducedCase rc = reduce_case(with_entry(majority_as_table(3), p, row.got), p);
    CHECK(rc.row == row.row);
    CHECK(rc.case_id == row.case_id);
    CHECK(rc.flipped == row.flipped);
    CHECK(rc.working == (row.flipped ? flip_vote(p) : p));
  }
  CHECK_THROWS_AS(reduce_case(Rule::majority(3), P("++-")), ContractError);
}

TEST_CASE("certificate for the constant Tie rule on one voter") {
  const Rule all_tie = Rule::constant(1, Outcome::Tie);
  const Refutation ref = refute_with_certificate(all_tie);
  check_refutation_sound(all_tie, ref);
  const Certificate& c = *ref.certificate;
  CHECK(c.origin == P("+"));
  CHECK(c.row == 2);
  CHECK(c.case_id == 2);
  REQUIRE(c.steps.size() == 2);
  CHECK(c.steps[0].kind == StepKind::Flip);
  CHECK(c.steps[1].kind == StepKind::Upgrade);
  const Violation& v = *ref.verdict.violation;
  CHECK(v.step == 1);
  CHECK(v.witness.axiom == Axiom::Monotonicity);
  CHECK(v.witness.profile == P("-"));
  CHECK(v.witness.voter == 0);
  CHECK(v.witness.clause == 2);
}

TEST_CASE("certificate for the constant ForWins rule on one voter") {
  const Rule all_for = Rule::constant(1, Outcome::ForWins);
  const Refutation ref = refute_with_certificate(all_for);
  check_refutation_sound(all_for, ref);
  const Certificate& c = *ref.certificate;
  CHECK(c.origin == P("0"));
  CHECK(c.row == 6);
  CHECK(c.case_id == 3);
  for (const auto& s : c.steps) CHECK(s.kind != StepKind::Upgrade);
  const Violation& v = *ref.verdict.violation;
  CHECK(v.step == 0);
  CHECK(v.witness.axiom == Axiom::Neutrality);
  CHECK(v.witness.profile == P("0"));
}

TEST_CASE("majority is equivalent") {
  for (VoterCount n = 0; n <= 5; ++n) {
    CHECK(refute(Rule::majority(n)).equivalent());
    CHECK(refute(majority_as_table(n)).equivalent());
  }
}

TEST_CASE("every non-majority rule on one voter is refuted soundly") {
  for (const Rule& r : enumerate_all_rules(1)) {
    const Refutation ref = refute_with_certificate(r);
    if (rules_equal(r, Rule::majority(1))) {
      CHECK(ref.verdict.equivalent());
      CHECK_FALSE(ref.certificate.has_value());
    } else {
      check_refutation_sound(r, ref);
    }
  }
}

TEST_CASE("random rules on three voters are refuted soundly") {
  testing::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    // Mostly-majority tables with a few perturbed entries push the first
    // disagreement past code 0 and exercise longer chains.
    Rule r = majority_as_table(3);
    const int edits = 1 + i % 3;
    for (int e = 0; e < edits; ++e) {
      r = with_entry(r, testing::random_profile(rng, 3), testing::random_ballot(rng) == Ballot::For
                                                            ? Outcome::ForWins
                                                            : Outcome::AgainstWins);
    }
    if (i % 4 == 0) r = testing::random_table_rule(rng, 3);
    const Refutation ref = refute_with_certificate(r);
    if (rules_equal(r, Rule::majority(3))) {
      CHECK(ref.verdict.equivalent());
      continue;
    }
    check_refutation_sound(r, ref);
  }
}

TEST_CASE("certificate shape") {
  testing::Rng rng(77);
  for (int i = 0; i < 500; ++i) {
    const VoterCount n = 1 + i % 6;
    const Profile p = testing::random_profile(rng, n);
    const Outcome m = majority_election(p);
    const Outcome got = static_cast<Outcome>((static_cast<int>(m) + 1 + i % 2) % 3);
    const Rule r = with_entry(majority_as_table(n), p, got);
    const Certificate c = generate_certificate(r, p);
    REQUIRE_NOTHROW(check_certificate_structure(c));

    const Tally t = tally(c.working);
    const std::size_t flips = (c.row == 3 || c.row == 4 || c.row == 6) ? 2 : 1;
    std::size_t upgrades = 0;
    for (const auto& s : c.steps) {
      upgrades += s.kind == StepKind::Upgrade;
      // Upgrades and swaps keep the Indifferent positions of the working profile.
      if (s.kind != StepKind::Flip) {
        for (VoterId v = 0; v < n; ++v) {
          REQUIRE((s.post[v] == Ballot::Indifferent) == (c.working[v] == Ballot::Indifferent));
        }
      }
    }
    CHECK(upgrades == t.for_count - t.against_count);
    const std::size_t swaps_expected =
        build_swap_list(c.working, upgrade_vote_list(flip_vote(c.working), [&] {
                          VoterList l;
                          for (const auto& s : c.steps) {
                            if (s.kind == StepKind::Upgrade) l.push_back(s.voter);
                          }
                          return l;
                        }())).size();
    CHECK(c.steps.size() == flips + upgrades + swaps_expected);
    CHECK(c.steps.back().post == c.working);
    CHECK(c.claim == Outcome::ForWins);
  }
}

TEST_CASE("tampered certificates are rejected") {
  const Rule all_tie = Rule::constant(3, Outcome::Tie);
  const Certificate good = *refute_with_certificate(all_tie).certificate;

  Certificate bad = good;
  bad.steps[0].post = bad.steps[0].pre;
  CHECK_THROWS_AS(check_certificate_structure(bad), CertificateError);

  bad = good;
  bad.steps.pop_back();
  CHECK_THROWS_AS(check_certificate_structure(bad), CertificateError);

  bad = good;
  bad.row = 5;
  CHECK_THROWS_AS(check_certificate_structure(bad), CertificateError);

  bad = good;
  bad.steps.back().forced_post = Constraint::for_or_tie();
  CHECK_THROWS_AS(check_certificate_structure(bad), CertificateError);

  bad = good;
  bad.steps.clear();
  CHECK_THROWS_AS(check_certificate_structure(bad), CertificateError);

  CHECK_THROWS_AS(validate_certificate(Rule::majority(2), good), CertificateError);
}

TEST_CASE("validating against another rule") {
  const Certificate c = *refute_with_certificate(Rule::constant(2, Outcome::Tie)).certificate;
  // Majority has no disagreement anywhere.
  CHECK(validate_certificate(majority_as_table(2), c).equivalent());
  // A rule whose outcome at the origin differs from the premise but which
  // still disagrees with majority elsewhere: the certificate does not apply.
  const Rule other = with_entry(Rule::constant(2, Outcome::AgainstWins), c.origin, Outcome::ForWins);
  CHECK_THROWS_AS(validate_certificate(other, c), CertificateError);
}

TEST_CASE("refute_many keeps input order and ignores the worker count") {
  testing::Rng rng(5);
  std::vector<Rule> rules;
  for (int i = 0; i < 200; ++i) rules.push_back(testing::random_table_rule(rng, 2));
  rules.push_back(majority_as_table(2));
  const auto serial = refute_many(rules, ExecOptions{1});
  for (std::size_t i = 0; i < rules.size(); ++i) REQUIRE(serial[i] == refute(rules[i]));
  CHECK(refute_many(rules, ExecOptions{4}) == serial);
  CHECK(serial.back().equivalent());
}

#pragma once

// Ballots, outcomes, profiles and the base-3 profile codec.
//
// Voters are the dense indices 0..n-1. A profile assigns one ballot to every
// voter and is identified with the integer
//
//   code = sum_v digit(p[v]) * 3^v,   digit(Indifferent)=0, For=1, Against=2,
//
// so voter 0 is the least significant digit. These digit values are fixed:
// rule files and certificates depend on them.

#include <cstddef>
#include <cstdint>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mayskit {

enum class Ballot : std::uint8_t { Indifferent = 0, For = 1, Against = 2 };

enum class Outcome : std::uint8_t { Tie = 0, ForWins = 1, AgainstWins = 2 };

using VoterId = std::size_t;
using VoterCount = std::size_t;
using ProfileCode = std::uint64_t;

/// A precondition of an operation did not hold (arity mismatch, lemma
/// hypothesis, malformed argument).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested enumeration exceeds the configured size budget.
class BudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Text or file input could not be parsed.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 3^k, throwing BudgetError when the result does not fit in 64 bits.
std::uint64_t pow3(std::size_t k);

std::string_view to_string(Ballot b);
std::string_view to_string(Outcome o);
char ballot_symbol(Ballot b);
Ballot ballot_from_symbol(char c);
Outcome outcome_from_string(std::string_view s);

class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<Ballot> ballots) : ballots_(std::move(ballots)) {}
  /// n voters, all Indifferent.
  static Profile indifferent(VoterCount n) {
    return Profile(std::vector<Ballot>(n, Ballot::Indifferent));
  }
  /// Parses a literal over {'+','-','0'}, voter 0 leftmost.
  static Profile parse(std::string_view literal);

  VoterCount size() const noexcept { return ballots_.size(); }
  Ballot operator[](VoterId v) const noexcept { return ballots_[v]; }
  /// Bounds-checked access; throws std::out_of_range.
  Ballot at(VoterId v) const;
  void set(VoterId v, Ballot b);

  const std::vector<Ballot>& ballots() const noexcept { return ballots_; }
  auto begin() const noexcept { return ballots_.begin(); }
  auto end() const noexcept { return ballots_.end(); }

  std::string to_string() const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<Ballot> ballots_;
};

ProfileCode encode_profile(const Profile& p);

/// Inverse of encode_profile; throws std::out_of_range unless code < 3^n.
Profile decode_profile(VoterCount n, ProfileCode code);

/// Every profile on n voters in increasing code order.
inline auto all_profiles(VoterCount n) {
  return std::views::iota(ProfileCode{0}, pow3(n)) |
         std::views::transform([n](ProfileCode c) { return decode_profile(n, c); });
}

void check_voter(const Profile& p, VoterId v);

}  // namespace mayskit

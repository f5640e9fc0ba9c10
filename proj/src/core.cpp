#include "mayskit/core.hpp"

#include <limits>

namespace mayskit {

std::uint64_t pow3(std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / 3) {
      throw BudgetError("3^" + std::to_string(k) + " does not fit in 64 bits");
    }
    r *= 3;
  }
  return r;
}

std::string_view to_string(Ballot b) {
  switch (b) {
    case Ballot::For: return "For";
    case Ballot::Against: return "Against";
    case Ballot::Indifferent: return "Indifferent";
  }
  return "?";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::ForWins: return "ForWins";
    case Outcome::AgainstWins: return "AgainstWins";
    case Outcome::Tie: return "Tie";
  }
  return "?";
}

char ballot_symbol(Ballot b) {
  switch (b) {
    case Ballot::For: return '+';
    case Ballot::Against: return '-';
    case Ballot::Indifferent: return '0';
  }
  return '?';
}

Ballot ballot_from_symbol(char c) {
  switch (c) {
    case '+': return Ballot::For;
    case '-': return Ballot::Against;
    case '0': return Ballot::Indifferent;
    default: break;
  }
  throw FormatError(std::string("invalid ballot symbol '") + c + "' (expected '+', '-' or '0')");
}

Outcome outcome_from_string(std::string_view s) {
  if (s == "ForWins") return Outcome::ForWins;
  if (s == "AgainstWins") return Outcome::AgainstWins;
  if (s == "Tie") return Outcome::Tie;
  throw FormatError("unknown outcome '" + std::string(s) + "'");
}

Profile Profile::parse(std::string_view literal) {
  std::vector<Ballot> ballots;
  ballots.reserve(literal.size());
  for (char c : literal) ballots.push_back(ballot_from_symbol(c));
  return Profile(std::move(ballots));
}

Ballot Profile::at(VoterId v) const {
  check_voter(*this, v);
  return ballots_[v];
}

void Profile::set(VoterId v, Ballot b) {
  check_voter(*this, v);
  ballots_[v] = b;
}

std::string Profile::to_string() const {
  std::string s;
  s.reserve(ballots_.size());
  for (Ballot b : ballots_) s.push_back(ballot_symbol(b));
  return s;
}

void check_voter(const Profile& p, VoterId v) {
  if (v >= p.size()) {
    throw std::out_of_range("voter " + std::to_string(v) + " out of range for " +
                            std::to_string(p.size()) + " voters");
  }
}

ProfileCode encode_profile(const Profile& p) {
  ProfileCode code = 0;
  for (VoterId v = p.size(); v-- > 0;) {
    code = code * 3 + static_cast<ProfileCode>(p[v]);
  }
  return code;
}

Profile decode_profile(VoterCount n, ProfileCode code) {
  if (code >= pow3(n)) {
    throw std::out_of_range("profile code " + std::to_string(code) + " out of range for " +
                            std::to_string(n) + " voters");
  }
  std::vector<Ballot> ballots(n);
  for (VoterId v = 0; v < n; ++v) {
    ballots[v] = static_cast<Ballot>(code % 3);
    code /= 3;
  }
  return Profile(std::move(ballots));
}

}  // namespace mayskit

#pragma once

// Code-arithmetic scans for the three axioms and the OpenMP first-hit driver.
//
// A scan visits profile codes in increasing order and stops at the first
// violated axiom instance. Ties within one code are broken by voter order and
// then clause order, matching the serial reference checkers. The driver splits
// the code range into chunks, scans them in parallel and keeps the hit from
// the lowest chunk, so the answer does not depend on the worker count.

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "mayskit/core.hpp"
#include "mayskit/options.hpp"
#include "mayskit/transforms.hpp"

namespace mayskit::detail {

/// Precomputed powers of three and flip images for one voter count.
struct ProfileSpace {
  explicit ProfileSpace(VoterCount voters);

  VoterCount n;
  ProfileCode size;
  std::vector<ProfileCode> place;    // 3^v
  std::vector<ProfileCode> flipped;  // code of flip_vote(decode(c))
};

struct Hit {
  ProfileCode code = 0;
  VoterId first = 0;   // v1 (anonymity) or voter (monotonicity)
  VoterId second = 0;  // v2 (anonymity) or clause id (monotonicity)
};

constexpr std::size_t kMaxDigits = 41;
using Digits = std::array<std::uint8_t, kMaxDigits>;

inline void split_digits(ProfileCode code, VoterCount n, Digits& d) {
  for (VoterCount v = 0; v < n; ++v, code /= 3) d[v] = static_cast<std::uint8_t>(code % 3);
}

template <class Eval>
std::optional<Hit> scan_anonymity(const ProfileSpace& s, const Eval& eval, ProfileCode begin,
                                  ProfileCode end) {
  Digits d{};
  for (ProfileCode c = begin; c < end; ++c) {
    split_digits(c, s.n, d);
    const Outcome here = eval(c);
    for (VoterId v1 = 0; v1 < s.n; ++v1) {
      for (VoterId v2 = 0; v2 < s.n; ++v2) {
        if (d[v1] == d[v2]) continue;
        const auto delta = static_cast<std::int64_t>(d[v2]) - static_cast<std::int64_t>(d[v1]);
        const ProfileCode swapped =
            c + static_cast<ProfileCode>(delta * static_cast<std::int64_t>(s.place[v1]) -
                                         delta * static_cast<std::int64_t>(s.place[v2]));
        if (eval(swapped) != here) return Hit{c, v1, v2};
      }
    }
  }
  return std::nullopt;
}

template <class Eval>
std::optional<Hit> scan_neutrality(const ProfileSpace& s, const Eval& eval, ProfileCode begin,
                                   ProfileCode end) {
  for (ProfileCode c = begin; c < end; ++c) {
    if (eval(c) != flip(eval(s.flipped[c]))) return Hit{c, 0, 0};
  }
  return std::nullopt;
}

template <class Eval>
std::optional<Hit> scan_monotonicity(const ProfileSpace& s, const Eval& eval, ProfileCode begin,
                                     ProfileCode end) {
  Digits d{};
  for (ProfileCode c = begin; c < end; ++c) {
    if (eval(c) == Outcome::AgainstWins) continue;
    split_digits(c, s.n, d);
    for (VoterId v = 0; v < s.n; ++v) {
      const ProfileCode p3 = s.place[v];
      if (d[v] == static_cast<std::uint8_t>(Ballot::Against)) {
        if (eval(c - 2 * p3) != Outcome::ForWins) return Hit{c, v, 1};
        if (eval(c - p3) != Outcome::ForWins) return Hit{c, v, 2};
      } else if (d[v] == static_cast<std::uint8_t>(Ballot::Indifferent)) {
        if (eval(c + p3) != Outcome::ForWins) return Hit{c, v, 3};
      }
    }
  }
  return std::nullopt;
}

inline int resolve_workers(const ExecOptions& exec) {
  return exec.workers > 0 ? exec.workers : omp_get_max_threads();
}

/// Lowest-code hit of `scan` over [0, size), computed on exec.workers threads.
template <class Scan>
std::optional<Hit> first_hit(ProfileCode size, const ExecOptions& exec, const Scan& scan) {
  const int workers = resolve_workers(exec);
  if (workers <= 1 || size < 4096) return scan(ProfileCode{0}, size);

  const ProfileCode chunk = std::max<ProfileCode>(1024, size / (static_cast<ProfileCode>(workers) * 16));
  const auto chunks = static_cast<std::int64_t>((size + chunk - 1) / chunk);
  std::vector<std::optional<Hit>> found(static_cast<std::size_t>(chunks));
  std::atomic<std::int64_t> best{chunks};

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t k = 0; k < chunks; ++k) {
    if (k > best.load(std::memory_order_relaxed)) continue;
    const ProfileCode begin = static_cast<ProfileCode>(k) * chunk;
    const ProfileCode end = std::min(size, begin + chunk);
    auto hit = scan(begin, end);
    if (!hit) continue;
    found[static_cast<std::size_t>(k)] = hit;
    std::int64_t cur = best.load(std::memory_order_relaxed);
    while (k < cur && !best.compare_exchange_weak(cur, k, std::memory_order_relaxed)) {
    }
  }
  for (const auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace mayskit::detail

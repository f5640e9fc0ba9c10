#pragma once

#include <cstddef>

namespace mayskit {

/// Size budgets for the enumerating operations.
struct Limits {
  /// Largest n for table rules, axiom checks and disagreement scans.
  std::size_t max_table_n = 12;
  /// Largest n for verify_forward.
  std::size_t max_forward_n = 6;
  /// Largest n for enumerating every outcome table (3^(3^n) rules).
  std::size_t max_full_n = 2;
  /// Largest n for the anonymous count-class enumeration.
  std::size_t max_anonymous_n = 4;

  /// Defaults, with MAYSKIT_MAX_N (if set) replacing max_table_n,
  /// max_forward_n and max_anonymous_n. The full-space bound is fixed.
  static Limits from_env();
};

/// Worker configuration for the OpenMP kernels. workers == 0 uses the
/// OpenMP default; results never depend on the value.
struct ExecOptions {
  int workers = 0;
};

}  // namespace mayskit

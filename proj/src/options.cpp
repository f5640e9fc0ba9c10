#include "mayskit/options.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "mayskit/core.hpp"

namespace mayskit {

Limits Limits::from_env() {
  Limits limits;
  const char* raw = std::getenv("MAYSKIT_MAX_N");
  if (raw == nullptr || *raw == '\0') return limits;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw FormatError("MAYSKIT_MAX_N must be a non-negative integer, got '" + std::string(raw) + "'");
  }
  limits.max_table_n = value;
  limits.max_forward_n = value;
  limits.max_anonymous_n = value;
  return limits;
}

}  // namespace mayskit

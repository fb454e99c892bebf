#include "commvar/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "commvar/errors.hpp"

namespace commvar {

namespace {

void override_from(const char* name, unsigned& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  unsigned value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0)
    throw InvalidArgument(std::string(name) + " must be a positive integer, got '" + raw + "'");
  slot = value;
}

}  // namespace

Limits Limits::from_environment() {
  Limits l;
  override_from("COMMVAR_MAX_RANK", l.max_rank);
  override_from("COMMVAR_MAX_N", l.max_n);
  override_from("COMMVAR_MAX_CHAR_M", l.max_char_m);
  return l;
}

const Limits& default_limits() {
  static const Limits limits = Limits::from_environment();
  return limits;
}

}  // namespace commvar

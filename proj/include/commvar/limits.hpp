#pragma once

namespace commvar {

/// Size caps guarding combinatorial and polynomial blowup.
///
/// Defaults may be overridden through the environment variables
/// COMMVAR_MAX_RANK, COMMVAR_MAX_N and COMMVAR_MAX_CHAR_M.
struct Limits {
  unsigned max_rank = 12;
  /// Largest n accepted for rank <= 8; above rank 8 the cap is halved.
  unsigned max_n = 16;
  /// Largest symmetric group S_m for which character tables are built.
  unsigned max_char_m = 10;

  unsigned max_n_for_rank(unsigned rank) const { return rank <= 8 ? max_n : max_n / 2; }

  /// Defaults overridden by whatever the environment provides.
  static Limits from_environment();
};

/// Process-wide limits, read once from the environment.
const Limits& default_limits();

}  // namespace commvar

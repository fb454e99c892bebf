#pragma once

#include <string>
#include <utility>
#include <vector>

#include "commvar/weyl.hpp"

namespace commvar {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  /// Reported for information only; never fails the suite.
  bool informational = false;
};

/// Runs every invariant check that applies to (cartan, n).
std::vector<CheckResult> verify_type(const CartanType& cartan, unsigned n);

/// The `verify --all` matrix: {A1..A4, B2, B3, C3, D4} × n ∈ {0..3}.
std::vector<std::pair<CartanType, unsigned>> verify_all_matrix();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace commvar

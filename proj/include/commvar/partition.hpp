#pragma once

#include <compare>
#include <string>
#include <vector>

#include "commvar/exact_poly.hpp"

namespace commvar {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const;  // |λ|
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Multiplicity of part i.
  unsigned multiplicity(unsigned part) const;
  /// Number of parts equal to 1.
  unsigned fixed_points() const { return multiplicity(1); }

  /// z_λ = Π_i i^{a_i} a_i!, the centralizer order in S_|λ|.
  Integer centralizer_order() const;

  Partition conjugate() const;

  /// "(2,1,1)", "()" for the empty partition.
  std::string to_string() const;
  /// Cycle notation of a representative, "(1)", "(12)(34)", "(123)".
  std::string cycle_notation() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// All partitions of m in reverse lexicographic order: (m), (m-1,1), ..., (1^m).
std::vector<Partition> partitions_of(unsigned m);

/// Conjugacy-class order for S_m: by number of moved points ascending, ties by
/// reverse lexicographic order. For S_4 this is 1^4, 21^2, 31, 4, 2^2.
std::vector<Partition> class_ordered_partitions(unsigned m);

}  // namespace commvar

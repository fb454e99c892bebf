#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "commvar/exact_poly.hpp"
#include "commvar/limits.hpp"
#include "commvar/partition.hpp"
#include "commvar/weyl.hpp"

namespace commvar {

/// χ_λ(μ) by the Murnaghan–Nakayama rule. Throws InvalidArgument when |λ| != |μ|.
long mn_character(const Partition& lambda, const Partition& mu);

/// Character table of S_m.
///
/// Columns follow class_ordered_partitions(m). Rows are in the order used by
/// the χ_1, χ_2, ... labels: the trivial character (m), the sign character
/// (1^m), then the remaining irreducibles by dimension ascending, ties in
/// reverse lexicographic order. For S_4 this gives χ_3 = (2,2),
/// χ_4 = (3,1), χ_5 = (2,1,1).
struct CharacterTable {
  unsigned m = 0;
  std::vector<Partition> rows;
  std::vector<Partition> columns;
  std::vector<Integer> class_sizes;
  Integer group_order;
  std::vector<std::vector<long>> values;  // values[row][column]

  std::size_t row_index(const Partition& irreducible) const;
  std::size_t column_index(const Partition& cycle_type) const;
  /// "χ_3" style label of a row, 1-based.
  std::string chi_label(std::size_t row) const { return "chi_" + std::to_string(row + 1); }
};

/// Throws InvalidArgument when m == 0 or m > limits.max_char_m.
CharacterTable character_table(unsigned m, const Limits& limits = default_limits());

/// Class function: one exact value per conjugacy class.
using ClassFunction = std::vector<Rational>;

/// (1/|W|) Σ_c size(c)·f(c)·g(c). Throws InvalidArgument on length mismatch.
Rational inner_product(const ClassFunction& f, const ClassFunction& g, const WeylData& weyl);
Rational inner_product(const ClassFunction& f, const ClassFunction& g,
                       const std::vector<Integer>& class_sizes, const Integer& order);

/// Polynomial in t whose coefficients are class functions on a fixed group.
class GradedClassFunction {
 public:
  explicit GradedClassFunction(std::size_t class_count) : class_count_(class_count) {}
  /// Entry c is the graded trace (a polynomial) at class c.
  static GradedClassFunction from_class_polys(const std::vector<Poly>& per_class);

  std::size_t class_count() const { return class_count_; }
  const std::map<unsigned, ClassFunction>& coefficients() const { return coeffs_; }
  /// Adds f·t^degree. Throws InvalidArgument on length mismatch.
  void add(unsigned degree, const ClassFunction& f);
  /// Graded trace at class c.
  Poly at_class(std::size_t c) const;

  friend bool operator==(const GradedClassFunction&, const GradedClassFunction&) = default;

 private:
  std::size_t class_count_;
  std::map<unsigned, ClassFunction> coeffs_;  // zero class functions are not stored
};

/// Irreducible label with its multiplicity polynomial.
struct IsotypicComponent {
  Partition irreducible;
  Poly multiplicity;
};

/// Splits every coefficient into irreducible characters. Components appear in
/// table row order; irreducibles with zero multiplicity are omitted. Throws
/// InvariantViolation ("not a character") if a multiplicity is negative or
/// non-integral.
std::vector<IsotypicComponent> decompose_graded(const GradedClassFunction& gcf,
                                                const CharacterTable& table);

/// Inverse of decompose_graded.
GradedClassFunction recombine(const std::vector<IsotypicComponent>& components,
                              const CharacterTable& table);

}  // namespace commvar

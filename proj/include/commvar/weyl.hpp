#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "commvar/exact_poly.hpp"
#include "commvar/limits.hpp"
#include "commvar/partition.hpp"

namespace commvar {

enum class Family { A, B, C, D };

char family_letter(Family f);

/// Classical Cartan type. A_{m-1} ~ SU(m), B_n ~ Spin(2n+1), C_n ~ Sp(n),
/// D_n ~ Spin(2n). Only the Weyl group and its reflection representation
/// matter to the engine, so non-simply-connected forms share these labels.
class CartanType {
 public:
  /// Throws InvalidArgument on rank below the family minimum
  /// (A >= 1, B/C >= 2, D >= 3) or above limits.max_rank.
  CartanType(Family family, unsigned rank, const Limits& limits = default_limits());

  /// Accepts "A2", "b3", "SU(3)", "Sp(3)" (case-insensitive letters).
  static CartanType parse(std::string_view text, const Limits& limits = default_limits());
  static constexpr std::string_view grammar =
      "<A|B|C|D><rank> (e.g. A2, B3, C3, D4), SU(<m>) for A<m-1>, or Sp(<m>) for C<m>";

  Family family() const { return family_; }
  unsigned rank() const { return rank_; }
  /// B and C have the same Weyl group.
  bool hyperoctahedral() const { return family_ != Family::A; }
  std::string name() const;  // "A2"

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  Family family_;
  unsigned rank_;
};

/// Conjugacy class label. Family A uses `positive` only (cycle type of a
/// permutation of rank+1 points). Families B/C/D use signed cycle type:
/// `positive` holds positive cycle lengths, `negative` the negative ones.
struct ClassDescriptor {
  Partition positive;
  Partition negative;

  std::string to_string(Family family) const;
  friend bool operator==(const ClassDescriptor&, const ClassDescriptor&) = default;
};

struct ConjClassData {
  ClassDescriptor descriptor;
  Integer size;
  /// det(1 - s·w) on the reflection representation, as a polynomial in s.
  Poly det_poly;
};

struct WeylData {
  CartanType cartan;
  Integer order;
  std::vector<unsigned> degrees;
  std::vector<ConjClassData> classes;

  /// Index of the identity class (always 0).
  static constexpr std::size_t identity_index = 0;
};

Integer weyl_order(const CartanType& cartan);
std::vector<unsigned> invariant_degrees(const CartanType& cartan);

/// One entry per conjugacy class, identity first.
///
/// Type A classes follow class_ordered_partitions(rank+1), which is also the
/// column order of character_table(rank+1). For D_n the two halves of a split
/// class (all cycles positive and even) are kept merged: every quantity here
/// depends only on signed cycle type.
std::vector<ConjClassData> conjugacy_classes(const CartanType& cartan);

/// Throws InvalidArgument if the descriptor does not describe a class of the type.
Poly reflection_det_poly(const CartanType& cartan, const ClassDescriptor& descriptor);

WeylData weyl_data(const CartanType& cartan);

}  // namespace commvar

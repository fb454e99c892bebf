#pragma once

#include <set>
#include <vector>

#include "commvar/chartab.hpp"
#include "commvar/exact_poly.hpp"
#include "commvar/weyl.hpp"

namespace commvar {

// Cohomology of the generic component R_{n,G} of Hom(Z^n, G), obtained by
// averaging graded traces over the Weyl group:
//
//   H(R_{n,G})   = H(G/T × T^n)^W
//   H_G(R_{n,G}) = H_T(T^n)^W
//
// Grading: H(T^n) generators sit in degree 1, while H(G/T) and H_T are
// generated in degree 2. Every output uses topological degree in t.

struct PoincareResult {
  CartanType cartan;
  unsigned n;
  Poly poly;
  Integer total_dim;  // poly(1) == 2^{n·rank}
};

struct EquivariantResult {
  CartanType cartan;
  unsigned n;
  /// P(t) / Π_i (1 - t^{2 d_i}).
  RationalFunction series;
  std::vector<Integer> truncation;
};

struct EngineOptions {
  /// Worker threads for per-class terms; 0 picks hardware concurrency.
  unsigned threads = 0;
  /// Bypass the n cap (tests and verification only).
  bool ignore_caps = false;
};

/// Graded trace of w on Λ(t*)^{⊗n}: det(1 + t·w)^n = det_poly(-t)^n.
Poly exterior_char(const ConjClassData& cls, unsigned n);

/// Π_i (1 - t^{2 d_i}).
Poly invariant_denominator(const WeylData& weyl);

/// Graded trace of w on the coinvariant algebra with generators in degree 2:
/// Π_i (1 - t^{2 d_i}) / det(1 - t^2·w). Throws InexactDivision on bad class data.
Poly coinvariant_graded_char(const WeylData& weyl, const ConjClassData& cls);

/// (1/|W|) Σ_c size(c)·E_c(t)^n·C_c(t). Throws InvariantViolation if a
/// coefficient comes out negative or non-integral.
PoincareResult poincare_poly(const CartanType& cartan, unsigned n, const EngineOptions& opts = {});
PoincareResult poincare_poly(const WeylData& weyl, unsigned n, const EngineOptions& opts = {});

/// Equivariant Hilbert series in factorized form with its expansion through `truncate`.
EquivariantResult equivariant_hilbert(const CartanType& cartan, unsigned n, unsigned truncate,
                                      const EngineOptions& opts = {});

/// The same series as a direct class sum (1/|W|) Σ_c size(c)·E_c(t)^n / det_poly_c(t^2),
/// accumulated over the least common denominator and reduced. Independent of
/// poincare_poly; used to cross-check the factorization.
RationalFunction equivariant_series_by_classes(const WeylData& weyl, unsigned n);

/// Coefficient of t^degree in the Poincaré polynomial.
Integer betti(const CartanType& cartan, unsigned n, unsigned degree);

/// Primes dividing |W|: the only primes at which H^*(R_{n,G}; Z) can carry torsion.
std::set<unsigned long> torsion_primes(const CartanType& cartan);

/// Closed form for G = SU(2): C(n, d) for even d, C(n, d-2) for odd d.
Integer su2_betti_oracle(unsigned n, unsigned degree);

/// Character-coefficient form of the type A computation.
struct WDecomposition {
  CharacterTable table;
  /// Λ t* with generators in degree 1 (the factor raised to the n-th power).
  std::vector<IsotypicComponent> exterior;
  /// H(G/T) in topological degree.
  std::vector<IsotypicComponent> coinvariant;
  /// H(G/T × T^n) = exterior^n · coinvariant.
  std::vector<IsotypicComponent> total;
};

/// Throws InvalidArgument("unsupported family") unless the type is A.
WDecomposition graded_w_decomposition(const CartanType& cartan, unsigned n);

/// Per-class graded characters of a type A group as a graded class function
/// indexed by the columns of character_table(rank+1).
GradedClassFunction class_polys_to_gcf(const WeylData& weyl, const std::vector<Poly>& per_class);

}  // namespace commvar

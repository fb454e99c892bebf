#include <doctest.h>

#include "commvar/cohomology.hpp"
#include "commvar/errors.hpp"
#include "oracles.hpp"

using namespace commvar;

namespace {

const CartanType A1(Family::A, 1), A2(Family::A, 2), A3(Family::A, 3), B3(Family::B, 3);

std::vector<CartanType> all_types_rank_le(unsigned max_rank) {
  std::vector<CartanType> out;
  for (unsigned r = 1; r <= max_rank; ++r) out.emplace_back(Family::A, r);
  for (unsigned r = 2; r <= max_rank; ++r) out.emplace_back(Family::B, r), out.emplace_back(Family::C, r);
  for (unsigned r = 3; r <= max_rank; ++r) out.emplace_back(Family::D, r);
  return out;
}

const ConjClassData& find_class(const WeylData& w, std::vector<unsigned> cycle_type) {
  for (const auto& c : w.classes)
    if (c.descriptor.positive.parts() == cycle_type) return c;
  throw std::logic_error("class not found");
}

Poly from_oracle(const std::vector<mpq_class>& coeffs) { return Poly::from_dense(coeffs); }

}  // namespace

TEST_CASE("exterior_char") {
  const WeylData a1 = weyl_data(A1), a2 = weyl_data(A2);
  CHECK(exterior_char(find_class(a1, {1, 1}), 1) == Poly{1, 1});
  CHECK(exterior_char(find_class(a1, {2}), 1) == Poly{1, -1});
  CHECK(exterior_char(find_class(a2, {3}), 1) == Poly{1, -1, 1});
  CHECK(exterior_char(find_class(a2, {3}), 0) == Poly(1));
}

TEST_CASE("coinvariant_graded_char") {
  const WeylData a1 = weyl_data(A1), a2 = weyl_data(A2);
  CHECK(coinvariant_graded_char(a1, find_class(a1, {1, 1})) == Poly{1, 0, 1});
  CHECK(coinvariant_graded_char(a1, find_class(a1, {2})) == Poly{1, 0, -1});
  CHECK(coinvariant_graded_char(a2, find_class(a2, {1, 1, 1})) == Poly{1, 0, 2, 0, 2, 0, 1});
  ConjClassData broken = find_class(a2, {3});
  broken.det_poly = Poly{1, 0, 1};
  CHECK_THROWS_AS(coinvariant_graded_char(a2, broken), InexactDivision);
}

TEST_CASE("coinvariant characters: degree, regular representation, one trivial summand") {
  for (const CartanType& t : all_types_rank_le(5)) {
    CAPTURE(t.name());
    const WeylData w = weyl_data(t);
    unsigned top = 0;
    for (unsigned d : w.degrees) top += 2 * d - 2;
    Poly avg;
    for (std::size_t i = 0; i < w.classes.size(); ++i) {
      const Poly c = coinvariant_graded_char(w, w.classes[i]);
      CHECK(c.degree() == top);
      CHECK(eval(c, 1) == (i == 0 ? Rational(w.order) : Rational(0)));
      avg += c.scaled(Rational(w.classes[i].size));
    }
    CHECK(avg.scaled(1 / Rational(w.order)) == Poly(1));
  }
}

TEST_CASE("poincare_poly examples") {
  CHECK(poincare_poly(A1, 1).poly == Poly{1, 0, 0, 1});
  CHECK(poincare_poly(A1, 2).poly == Poly{1, 0, 1, 2});
  CHECK(poincare_poly(A1, 0).poly == Poly(1));
  CHECK(poincare_poly(A1, 2).total_dim == 4);
}

TEST_CASE("poincare_poly for SU(2) against the binomial closed form, n <= 8") {
  for (unsigned n = 0; n <= 8; ++n) {
    const Poly p = poincare_poly(A1, n).poly;
    for (unsigned d = 0; d <= n + 4; ++d) {
      const mpz_class want = d % 2 == 0 ? oracle::binomial(n, d) : oracle::binomial(n, long(d) - 2);
      CHECK(p.coeff(d) == Rational(want));
      CHECK(betti(A1, n, d) == want);
      CHECK(su2_betti_oracle(n, d) == want);
    }
  }
}

TEST_CASE("poincare_poly for SU(3) against the character-table expression") {
  // <chi_1, (chi_1 + chi_3 t + chi_2 t^2)^n (chi_1 + chi_3 t^2 + chi_3 t^4 + chi_2 t^6)>
  // over the classes (1), (12), (123) of S_3 with sizes 1, 3, 2.
  const std::vector<std::vector<long>> chi{{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  const std::vector<long> sizes{1, 3, 2};
  for (unsigned n = 0; n <= 6; ++n) {
    oracle::IntPoly sum;
    for (std::size_t c = 0; c < 3; ++c) {
      const oracle::IntPoly ext{chi[0][c], chi[2][c], chi[1][c]};
      const oracle::IntPoly coinv{chi[0][c], 0, chi[2][c], 0, chi[2][c], 0, chi[1][c]};
      sum = oracle::add(sum, oracle::scale(oracle::mul(oracle::power(ext, n), coinv), sizes[c]));
    }
    CHECK(poincare_poly(A2, n).poly == from_oracle(oracle::divide(sum, 6)));
  }
}

TEST_CASE("dimension identity, product formula and positivity") {
  for (const CartanType& t : all_types_rank_le(5)) {
    CAPTURE(t.name());
    const WeylData w = weyl_data(t);
    for (unsigned n = 0; n <= 4; ++n) {
      const PoincareResult r = poincare_poly(w, n);
      Integer want = 1;
      want <<= n * t.rank();
      CHECK(r.total_dim == want);
      CHECK(r.poly.has_integer_coefficients());
      for (const auto& [d, c] : r.poly.terms()) CHECK(c > 0);
    }
    oracle::IntPoly prod{1};
    for (unsigned d : w.degrees) {
      oracle::IntPoly gen(2 * d, 0);
      gen[0] = 1;
      gen[2 * d - 1] = 1;
      prod = oracle::mul(prod, gen);
    }
    CHECK(poincare_poly(w, 1).poly == from_oracle(oracle::divide(prod, 1)));
  }
}

TEST_CASE("poincare_poly threaded and serial agree") {
  const WeylData w = weyl_data(CartanType(Family::D, 5));
  EngineOptions serial, threaded;
  serial.threads = 1;
  threaded.threads = 4;
  CHECK(poincare_poly(w, 3, serial).poly == poincare_poly(w, 3, threaded).poly);
}

TEST_CASE("n cap") {
  CHECK_THROWS_AS(poincare_poly(A1, 17), InvalidArgument);
  EngineOptions opts;
  opts.ignore_caps = true;
  CHECK(poincare_poly(A1, 17, opts).total_dim == Integer(1) << 17);
}

TEST_CASE("equivariant_hilbert examples") {
  using V = std::vector<Integer>;
  CHECK(equivariant_hilbert(A1, 1, 8).truncation == V{1, 0, 0, 1, 1, 0, 0, 1, 1});
  const auto pt = equivariant_hilbert(A1, 0, 4);
  // H_{SU(2)}(pt): one invariant generator, topological degree 4.
  CHECK(pt.truncation == V{1, 0, 0, 0, 1});
  CHECK(pt.series == RationalFunction(Poly(1), Poly{1, 0, 0, 0, -1}));

  // (1+t^3)(1+t^5) / ((1-t^4)(1-t^6)), expanded by counting
  const auto a2 = equivariant_hilbert(A2, 1, 30);
  std::vector<Integer> ways(31, 0);
  ways[0] = 1;
  for (unsigned d : {4u, 6u})
    for (unsigned k = d; k <= 30; ++k) ways[k] += ways[k - d];
  for (unsigned k = 0; k <= 30; ++k) {
    Integer want = ways[k];
    if (k >= 3) want += ways[k - 3];
    if (k >= 5) want += ways[k - 5];
    if (k >= 8) want += ways[k - 8];
    CHECK(a2.truncation[k] == want);
  }
}

TEST_CASE("equivariant series: class sum equals the factorized form") {
  for (const CartanType& t : all_types_rank_le(4)) {
    CAPTURE(t.name());
    const WeylData w = weyl_data(t);
    for (unsigned n = 0; n <= 3; ++n) {
      const RationalFunction direct = equivariant_series_by_classes(w, n);
      const RationalFunction factorized(poincare_poly(w, n).poly, invariant_denominator(w));
      CHECK(direct == factorized);
      CHECK(direct.reduced() == direct);
    }
  }
}

TEST_CASE("equivariant SU(2) matches the even-total-degree direct sum") {
  // ⊕_{i+j even} Λ^i C^n ⊗ y^j, exterior degree i, y in degree 2.
  for (unsigned n = 0; n <= 5; ++n) {
    const auto r = equivariant_hilbert(A1, n, 24);
    for (unsigned k = 0; k <= 24; ++k) {
      mpz_class want = 0;
      for (unsigned i = 0; i <= n && i <= k; ++i)
        if ((k - i) % 2 == 0 && (i + (k - i) / 2) % 2 == 0) want += oracle::binomial(n, i);
      CHECK(r.truncation[k] == want);
    }
  }
}

TEST_CASE("torsion_primes") {
  using S = std::set<unsigned long>;
  CHECK(torsion_primes(A1) == S{2});
  CHECK(torsion_primes(A2) == S{2, 3});
  CHECK(torsion_primes(B3) == S{2, 3});
  CHECK(torsion_primes(CartanType(Family::A, 6)) == S{2, 3, 5, 7});
  CHECK(torsion_primes(CartanType(Family::D, 4)) == S{2, 3});
}

TEST_CASE("su2_betti_oracle") {
  CHECK(su2_betti_oracle(2, 0) == 1);
  CHECK(su2_betti_oracle(2, 3) == 2);
  CHECK(su2_betti_oracle(5, 1) == 0);
  CHECK(betti(A1, 3, 2) == 3);
  CHECK(betti(A1, 3, 3) == 3);
  CHECK(betti(A1, 3, 9) == 0);
}

TEST_CASE("graded_w_decomposition") {
  const auto a1 = graded_w_decomposition(A1, 2);
  REQUIRE(a1.exterior.size() == 2);
  CHECK(a1.exterior[0].multiplicity == Poly(1));
  CHECK(a1.exterior[1].multiplicity == Poly{0, 1});
  CHECK(a1.coinvariant[1].multiplicity == Poly{0, 0, 1});
  CHECK(a1.total[0].multiplicity == poincare_poly(A1, 2).poly);

  const auto a2 = graded_w_decomposition(A2, 1);
  REQUIRE(a2.exterior.size() == 3);
  CHECK(a2.exterior[0].multiplicity == Poly(1));            // χ_1
  CHECK(a2.exterior[1].multiplicity == Poly{0, 0, 1});      // χ_2 t^2
  CHECK(a2.exterior[2].multiplicity == Poly{0, 1});         // χ_3 t

  const auto a3 = graded_w_decomposition(A3, 1);
  CHECK(a3.exterior.size() == 4);
  CHECK_THROWS_AS(graded_w_decomposition(B3, 1), InvalidArgument);
  CHECK_THROWS_WITH(graded_w_decomposition(CartanType(Family::D, 4), 1),
                    doctest::Contains("unsupported family"));
}

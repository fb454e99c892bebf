#include "commvar/verify.hpp"

#include <algorithm>
#include <functional>

#include "commvar/chartab.hpp"
#include "commvar/cohomology.hpp"
#include "commvar/errors.hpp"

namespace commvar {

namespace {

constexpr unsigned kMolienDegree = 30;

class Suite {
 public:
  explicit Suite(std::string prefix) : prefix_(std::move(prefix)) {}

  // Exceptions from the check body count as failures.
  void check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
      auto [ok, detail] = body();
      results_.push_back({prefix_ + name, ok, std::move(detail)});
    } catch (const std::exception& e) {
      results_.push_back({prefix_ + name, false, std::string("exception: ") + e.what()});
    }
  }
  void info(const std::string& name, std::string detail) {
    results_.push_back({prefix_ + name, true, std::move(detail), true});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string prefix_;
  std::vector<CheckResult> results_;
};

std::pair<bool, std::string> expect_poly(const Poly& got, const Poly& want) {
  if (got == want) return {true, got.to_string()};
  return {false, "got " + got.to_string() + ", expected " + want.to_string()};
}

}  // namespace

std::vector<CheckResult> verify_type(const CartanType& cartan, unsigned n) {
  Suite s(cartan.name() + " n=" + std::to_string(n) + ": ");
  const WeylData weyl = weyl_data(cartan);
  const unsigned rank = cartan.rank();
  EngineOptions opts;
  opts.ignore_caps = true;

  s.check("class sizes sum to |W|", [&] {
    Integer sum = 0;
    for (const auto& c : weyl.classes) sum += c.size;
    return std::pair{sum == weyl.order, sum.get_str() + " vs " + weyl.order.get_str()};
  });
  s.check("product of invariant degrees is |W|", [&] {
    Integer prod = 1;
    for (unsigned d : weyl.degrees) prod *= d;
    return std::pair{prod == weyl.order && weyl.degrees.size() == rank,
                     prod.get_str() + " from " + std::to_string(weyl.degrees.size()) + " degrees"};
  });
  s.check("identity class", [&] {
    const auto& id = weyl.classes[WeylData::identity_index];
    const Poly want = pow(Poly{1, -1}, rank);
    return std::pair{id.size == 1 && id.det_poly == want, id.det_poly.to_string("s")};
  });
  s.check("det polynomials have degree rank and constant term 1", [&] {
    for (const auto& c : weyl.classes) {
      const bool fixed_vector = eval(c.det_poly, 1) == 0;
      const bool has_positive_cycle = cartan.family() == Family::A
                                          ? c.descriptor.positive.length() > 1
                                          : !c.descriptor.positive.empty();
      if (c.det_poly.degree() != rank || c.det_poly.coeff(0) != 1 || fixed_vector != has_positive_cycle)
        return std::pair{false, c.descriptor.to_string(cartan.family())};
    }
    return std::pair{true, std::to_string(weyl.classes.size()) + " classes"};
  });
  s.check("Molien series matches invariant degrees to degree 30", [&] {
    std::vector<Rational> avg(kMolienDegree + 1, Rational(0));
    for (const auto& c : weyl.classes) {
      auto terms = series_expand(RationalFunction(Poly(Rational(c.size)), c.det_poly), kMolienDegree);
      for (unsigned k = 0; k <= kMolienDegree; ++k) avg[k] += terms[k];
    }
    for (auto& a : avg) a /= Rational(weyl.order);
    Poly den(1);
    for (unsigned d : weyl.degrees) den *= Poly(1) - Poly::monomial(1, d);
    auto want = series_expand(RationalFunction(Poly(1), den), kMolienDegree);
    return std::pair{avg == want, "through degree " + std::to_string(kMolienDegree)};
  });
  s.check("coinvariant character is the regular representation at t=1", [&] {
    for (std::size_t c = 0; c < weyl.classes.size(); ++c) {
      const Rational v = eval(coinvariant_graded_char(weyl, weyl.classes[c]), 1);
      const Rational want = c == WeylData::identity_index ? Rational(weyl.order) : Rational(0);
      if (v != want) return std::pair{false, weyl.classes[c].descriptor.to_string(cartan.family())};
    }
    return std::pair{true, std::string("|W| at identity, 0 elsewhere")};
  });
  s.check("coinvariant algebra has one trivial summand", [&] {
    Poly sum;
    for (const auto& c : weyl.classes) sum += coinvariant_graded_char(weyl, c).scaled(Rational(c.size));
    return expect_poly(sum.scaled(1 / Rational(weyl.order)), Poly(1));
  });

  Poly poincare;
  s.check("Poincare polynomial has non-negative integer coefficients", [&] {
    poincare = poincare_poly(weyl, n, opts).poly;
    return std::pair{true, poincare.to_string()};
  });
  s.check("total dimension is 2^(n*rank)", [&] {
    const Rational got = eval(poincare, 1);
    Integer want = 1;
    want <<= n * rank;
    return std::pair{got == Rational(want), to_string(got) + " vs " + want.get_str()};
  });
  s.check("n=1 product of exterior generators", [&] {
    Poly want(1);
    for (unsigned d : weyl.degrees) want *= Poly(1) + Poly::monomial(1, 2 * d - 1);
    return expect_poly(poincare_poly(weyl, 1, opts).poly, want);
  });
  s.check("equivariant class sum equals P / prod(1 - t^(2d))", [&] {
    const RationalFunction by_classes = equivariant_series_by_classes(weyl, n);
    const RationalFunction factorized(poincare, invariant_denominator(weyl));
    return std::pair{by_classes == factorized,
                     "(" + by_classes.numerator().to_string() + ") / (" +
                         by_classes.denominator().to_string() + ")"};
  });
  s.check("equivariant series coefficients are non-negative integers", [&] {
    const unsigned top = poincare.degree().value_or(0) + 20;
    const auto r = equivariant_hilbert(cartan, n, top, opts);
    return std::pair{true, "through degree " + std::to_string(top)};
  });

  if (cartan.family() == Family::A) {
    const unsigned m = rank + 1;
    if (m <= default_limits().max_char_m) {
      const CharacterTable table = character_table(m);
      s.check("character table orthogonality", [&] {
        const std::size_t k = table.rows.size();
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) {
            ClassFunction fa(table.values[a].begin(), table.values[a].end());
            ClassFunction fb(table.values[b].begin(), table.values[b].end());
            if (inner_product(fa, fb, table.class_sizes, table.group_order) != (a == b ? 1 : 0))
              return std::pair{false, "rows " + std::to_string(a + 1) + "," + std::to_string(b + 1)};
            // column orthogonality: Σ_χ χ(a)χ(b) = [a=b]·|W|/size(a)
            Integer col = 0;
            for (std::size_t r = 0; r < k; ++r) col += table.values[r][a] * table.values[r][b];
            const Integer want = a == b ? Integer(table.group_order / table.class_sizes[a]) : Integer(0);
            if (col != want)
              return std::pair{false, "columns " + std::to_string(a + 1) + "," + std::to_string(b + 1)};
          }
        }
        return std::pair{true, "S_" + std::to_string(m)};
      });
      s.check("decomposition recombines and its invariant part is P", [&] {
        const WDecomposition d = graded_w_decomposition(cartan, n);
        std::vector<Poly> per_class;
        for (const auto& c : weyl.classes) per_class.push_back(pow(exterior_char(c, 1), n) * coinvariant_graded_char(weyl, c));
        if (!(recombine(d.total, d.table) == class_polys_to_gcf(weyl, per_class)))
          return std::pair{false, std::string("recombination differs")};
        Poly invariant;
        for (const auto& comp : d.total)
          if (comp.irreducible == table.rows.front()) invariant = comp.multiplicity;
        return expect_poly(invariant, poincare);
      });
      s.check("coinvariant multiplicities at t=1 are dimensions", [&] {
        const WDecomposition d = graded_w_decomposition(cartan, 0);
        for (const auto& comp : d.coinvariant) {
          const long dim = table.values[table.row_index(comp.irreducible)][0];
          if (eval(comp.multiplicity, 1) != dim) return std::pair{false, comp.irreducible.to_string()};
        }
        return std::pair{d.coinvariant.size() == table.rows.size(), std::string("group ring")};
      });
      if (m == 4) {
        // The SU(4) display pairs against chi_2 (the sign character) rather
        // than chi_1; report that variant next to the invariant one.
        const WDecomposition d = graded_w_decomposition(cartan, n);
        Poly sign_part;
        for (const auto& comp : d.total)
          if (comp.irreducible == table.rows[1]) sign_part = comp.multiplicity;
        s.info("sign-isotypic variant <chi_2, ...>",
               sign_part.to_string() + " (invariant part: " + poincare.to_string() + ")");
      }
    }
  }
  if (cartan.family() == Family::A && rank == 1) {
    s.check("SU(2) closed form for Betti numbers", [&] {
      for (unsigned d = 0; d <= n + 3; ++d)
        if (Rational(su2_betti_oracle(n, d)) != poincare.coeff(d))
          return std::pair{false, "degree " + std::to_string(d)};
      return std::pair{true, std::string("all degrees")};
    });
  }
  return s.take();
}

std::vector<std::pair<CartanType, unsigned>> verify_all_matrix() {
  const std::vector<CartanType> types{
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
      {Family::B, 2}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}};
  std::vector<std::pair<CartanType, unsigned>> out;
  for (const auto& t : types)
    for (unsigned n = 0; n <= 3; ++n) out.emplace_back(t, n);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace commvar

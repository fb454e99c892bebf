#include "commvar/cohomology.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

#include "commvar/errors.hpp"

namespace commvar {

namespace {

void check_n(const CartanType& cartan, unsigned n, const EngineOptions& opts) {
  if (opts.ignore_caps) return;
  const unsigned cap = default_limits().max_n_for_rank(cartan.rank());
  if (n > cap)
    throw InvalidArgument("n=" + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                          " for rank " + std::to_string(cartan.rank()) + " (COMMVAR_MAX_N)");
}

unsigned worker_count(const EngineOptions& opts, std::size_t jobs) {
  unsigned t = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
  if (t == 0) t = 1;
  return static_cast<unsigned>(std::min<std::size_t>(t, jobs));
}

Poly class_term(const WeylData& weyl, const ConjClassData& cls, unsigned n) {
  return (exterior_char(cls, n) * coinvariant_graded_char(weyl, cls)).scaled(Rational(cls.size));
}

}  // namespace

Poly exterior_char(const ConjClassData& cls, unsigned n) {
  return pow(cls.det_poly.scale_variable(-1), n);
}

Poly invariant_denominator(const WeylData& weyl) {
  Poly den(1);
  for (unsigned d : weyl.degrees) den *= Poly(1) - Poly::monomial(1, 2 * d);
  return den;
}

Poly coinvariant_graded_char(const WeylData& weyl, const ConjClassData& cls) {
  return div_exact(invariant_denominator(weyl), cls.det_poly.inflate(2));
}

PoincareResult poincare_poly(const WeylData& weyl, unsigned n, const EngineOptions& opts) {
  check_n(weyl.cartan, n, opts);
  const auto& classes = weyl.classes;
  const unsigned workers = worker_count(opts, classes.size());

  // Contiguous chunks summed in chunk order: exact addition makes the result
  // independent of the split, so threaded and serial runs agree bit for bit.
  auto sum_range = [&](std::size_t begin, std::size_t end) {
    Poly partial;
    for (std::size_t c = begin; c < end; ++c) partial += class_term(weyl, classes[c], n);
    return partial;
  };
  Poly total;
  if (workers <= 1) {
    total = sum_range(0, classes.size());
  } else {
    std::vector<std::future<Poly>> parts;
    const std::size_t chunk = (classes.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < classes.size(); begin += chunk)
      parts.push_back(std::async(std::launch::async, sum_range, begin,
                                 std::min(begin + chunk, classes.size())));
    for (auto& f : parts) total += f.get();
  }

  Poly poly = total.scaled(1 / Rational(weyl.order));
  for (const auto& [d, c] : poly.terms()) {
    if (c.get_den() != 1)
      throw InvariantViolation("non-integral Betti number " + to_string(c) + " in degree " +
                               std::to_string(d) + " for " + weyl.cartan.name());
    if (c < 0)
      throw InvariantViolation("negative coefficient " + to_string(c) + " in degree " +
                               std::to_string(d) + " for " + weyl.cartan.name());
  }
  Integer total_dim = eval(poly, 1).get_num();
  return PoincareResult{weyl.cartan, n, std::move(poly), std::move(total_dim)};
}

PoincareResult poincare_poly(const CartanType& cartan, unsigned n, const EngineOptions& opts) {
  check_n(cartan, n, opts);
  return poincare_poly(weyl_data(cartan), n, opts);
}

EquivariantResult equivariant_hilbert(const CartanType& cartan, unsigned n, unsigned truncate,
                                      const EngineOptions& opts) {
  const WeylData weyl = weyl_data(cartan);
  PoincareResult p = poincare_poly(weyl, n, opts);
  RationalFunction series(std::move(p.poly), invariant_denominator(weyl));
  std::vector<Integer> truncation;
  truncation.reserve(truncate + 1);
  for (const Rational& c : series_expand(series, truncate)) {
    if (c.get_den() != 1 || c < 0)
      throw InvariantViolation("equivariant series coefficient " + to_string(c) +
                               " is not a non-negative integer");
    truncation.push_back(c.get_num());
  }
  return EquivariantResult{cartan, n, std::move(series), std::move(truncation)};
}

RationalFunction equivariant_series_by_classes(const WeylData& weyl, unsigned n) {
  // Classes sharing det(1 - t^2·w) share a denominator; merge them first.
  std::map<Poly::Terms, Poly> by_denominator;
  for (const auto& cls : weyl.classes)
    by_denominator[cls.det_poly.inflate(2).terms()] += exterior_char(cls, n).scaled(Rational(cls.size));

  RationalFunction sum(Poly(), Poly(1));
  for (auto& [den, num] : by_denominator)
    sum = sum + RationalFunction(std::move(num), Poly::from_terms(den));
  return RationalFunction(sum.numerator().scaled(1 / Rational(weyl.order)), sum.denominator())
      .reduced();
}

Integer betti(const CartanType& cartan, unsigned n, unsigned degree) {
  return poincare_poly(cartan, n).poly.coeff(degree).get_num();
}

std::set<unsigned long> torsion_primes(const CartanType& cartan) {
  Integer rest = weyl_order(cartan);
  std::set<unsigned long> primes;
  for (unsigned long p = 2; rest > 1; ++p) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    primes.insert(p);
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) rest /= p;
  }
  return primes;
}

Integer su2_betti_oracle(unsigned n, unsigned degree) {
  Integer out;
  if (degree % 2 == 0) {
    mpz_bin_uiui(out.get_mpz_t(), n, degree);
  } else {
    if (degree < 2) return 0;
    mpz_bin_uiui(out.get_mpz_t(), n, degree - 2);
  }
  return out;
}

GradedClassFunction class_polys_to_gcf(const WeylData& weyl, const std::vector<Poly>& per_class) {
  if (weyl.cartan.family() != Family::A) throw InvalidArgument("unsupported family");
  if (per_class.size() != weyl.classes.size()) throw InvalidArgument("class count mismatch");
  const auto columns = class_ordered_partitions(weyl.cartan.rank() + 1);
  std::vector<Poly> ordered(columns.size());
  for (std::size_t c = 0; c < weyl.classes.size(); ++c) {
    auto it = std::find(columns.begin(), columns.end(), weyl.classes[c].descriptor.positive);
    ordered[static_cast<std::size_t>(it - columns.begin())] = per_class[c];
  }
  return GradedClassFunction::from_class_polys(ordered);
}

WDecomposition graded_w_decomposition(const CartanType& cartan, unsigned n) {
  if (cartan.family() != Family::A)
    throw InvalidArgument(std::string("unsupported family ") + family_letter(cartan.family()) +
                          ": character decompositions are available for type A only");
  const WeylData weyl = weyl_data(cartan);
  CharacterTable table = character_table(cartan.rank() + 1);
  std::vector<Poly> ext, coinv, total;
  for (const auto& cls : weyl.classes) {
    ext.push_back(exterior_char(cls, 1));
    coinv.push_back(coinvariant_graded_char(weyl, cls));
    total.push_back(pow(ext.back(), n) * coinv.back());
  }
  WDecomposition out{std::move(table), {}, {}, {}};
  out.exterior = decompose_graded(class_polys_to_gcf(weyl, ext), out.table);
  out.coinvariant = decompose_graded(class_polys_to_gcf(weyl, coinv), out.table);
  out.total = decompose_graded(class_polys_to_gcf(weyl, total), out.table);
  return out;
}

}  // namespace commvar

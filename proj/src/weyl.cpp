#include "commvar/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "commvar/errors.hpp"

namespace commvar {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

namespace {

unsigned minimum_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 3;
  }
  return 1;
}

std::optional<unsigned> parse_unsigned(std::string_view s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string lowered(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

[[noreturn]] void bad_type(std::string_view text) {
  throw InvalidArgument("malformed Cartan type '" + std::string(text) + "'; expected " +
                        std::string(CartanType::grammar));
}

}  // namespace

CartanType::CartanType(Family family, unsigned rank, const Limits& limits)
    : family_(family), rank_(rank) {
  if (rank < minimum_rank(family))
    throw InvalidArgument(std::string("type ") + family_letter(family) + " needs rank >= " +
                          std::to_string(minimum_rank(family)) + ", got " +
                          std::to_string(rank));
  if (rank > limits.max_rank)
    throw InvalidArgument("rank " + std::to_string(rank) + " exceeds the cap " +
                          std::to_string(limits.max_rank) + " (COMMVAR_MAX_RANK)");
}

CartanType CartanType::parse(std::string_view text, const Limits& limits) {
  const std::string s = lowered(text);
  auto group_arg = [&](std::string_view prefix) -> std::optional<unsigned> {
    if (s.size() < prefix.size() + 3 || s.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    if (s[prefix.size()] != '(' || s.back() != ')') return std::nullopt;
    auto inner = std::string_view(s).substr(prefix.size() + 1, s.size() - prefix.size() - 2);
    auto v = parse_unsigned(inner);
    if (!v) bad_type(text);
    return v;
  };
  if (auto m = group_arg("su")) {
    if (*m < 2) bad_type(text);
    return CartanType(Family::A, *m - 1, limits);
  }
  if (auto m = group_arg("sp")) return CartanType(Family::C, *m, limits);

  if (s.size() < 2) bad_type(text);
  Family family;
  switch (s[0]) {
    case 'a': family = Family::A; break;
    case 'b': family = Family::B; break;
    case 'c': family = Family::C; break;
    case 'd': family = Family::D; break;
    default: bad_type(text);
  }
  auto rank = parse_unsigned(std::string_view(s).substr(1));
  if (!rank) bad_type(text);
  return CartanType(family, *rank, limits);
}

std::string CartanType::name() const { return family_letter(family_) + std::to_string(rank_); }

std::string ClassDescriptor::to_string(Family family) const {
  if (family == Family::A) return positive.to_string();
  return "(" + positive.to_string() + "," + negative.to_string() + ")";
}

Integer weyl_order(const CartanType& cartan) {
  const unsigned r = cartan.rank();
  Integer fact;
  switch (cartan.family()) {
    case Family::A:
      mpz_fac_ui(fact.get_mpz_t(), r + 1);
      return fact;
    case Family::B:
    case Family::C:
      mpz_fac_ui(fact.get_mpz_t(), r);
      return fact << r;
    case Family::D:
      mpz_fac_ui(fact.get_mpz_t(), r);
      return fact << (r - 1);
  }
  return 0;
}

std::vector<unsigned> invariant_degrees(const CartanType& cartan) {
  const unsigned r = cartan.rank();
  std::vector<unsigned> d;
  switch (cartan.family()) {
    case Family::A:
      for (unsigned k = 2; k <= r + 1; ++k) d.push_back(k);
      break;
    case Family::B:
    case Family::C:
      for (unsigned k = 1; k <= r; ++k) d.push_back(2 * k);
      break;
    case Family::D:
      for (unsigned k = 1; k < r; ++k) d.push_back(2 * k);
      d.insert(std::upper_bound(d.begin(), d.end(), r), r);
      break;
  }
  return d;
}

Poly reflection_det_poly(const CartanType& cartan, const ClassDescriptor& descriptor) {
  const unsigned r = cartan.rank();
  if (cartan.family() == Family::A) {
    if (!descriptor.negative.empty() || descriptor.positive.size() != r + 1)
      throw InvalidArgument("descriptor " + descriptor.to_string(Family::A) +
                            " is not a class of " + cartan.name());
    // Permutation representation on r+1 points is reflection ⊕ trivial.
    Poly perm(1);
    for (unsigned part : descriptor.positive.parts())
      perm *= Poly(1) - Poly::monomial(1, part);
    return div_exact(perm, Poly{1, -1});
  }
  if (descriptor.positive.size() + descriptor.negative.size() != r ||
      (cartan.family() == Family::D && descriptor.negative.length() % 2 != 0))
    throw InvalidArgument("descriptor " + descriptor.to_string(cartan.family()) +
                          " is not a class of " + cartan.name());
  // A positive k-cycle has eigenvalues the k-th roots of unity, a negative
  // one the roots of x^k = -1.
  Poly det(1);
  for (unsigned part : descriptor.positive.parts()) det *= Poly(1) - Poly::monomial(1, part);
  for (unsigned part : descriptor.negative.parts()) det *= Poly(1) + Poly::monomial(1, part);
  return det;
}

std::vector<ConjClassData> conjugacy_classes(const CartanType& cartan) {
  const unsigned r = cartan.rank();
  const Integer order = weyl_order(cartan);
  std::vector<ConjClassData> out;

  if (cartan.family() == Family::A) {
    for (Partition& lambda : class_ordered_partitions(r + 1)) {
      ClassDescriptor desc{std::move(lambda), Partition()};
      Integer size = order / desc.positive.centralizer_order();
      Poly det = reflection_det_poly(cartan, desc);
      out.push_back({std::move(desc), std::move(size), std::move(det)});
    }
    return out;
  }

  // Hyperoctahedral group: sizes are computed in B_n even for D_n, where a
  // class with an even number of negative cycles keeps its B_n element count.
  Integer b_order;
  mpz_fac_ui(b_order.get_mpz_t(), r);
  b_order <<= r;
  for (unsigned neg = 0; neg <= r; ++neg) {
    const auto positives = class_ordered_partitions(r - neg);
    const auto negatives = class_ordered_partitions(neg);
    for (const Partition& lambda : positives) {
      for (const Partition& mu : negatives) {
        if (cartan.family() == Family::D && mu.length() % 2 != 0) continue;
        Integer centralizer = lambda.centralizer_order() * mu.centralizer_order();
        centralizer <<= static_cast<mp_bitcnt_t>(lambda.length() + mu.length());
        ClassDescriptor desc{lambda, mu};
        Poly det = reflection_det_poly(cartan, desc);
        out.push_back({std::move(desc), b_order / centralizer, std::move(det)});
      }
    }
  }
  return out;
}

WeylData weyl_data(const CartanType& cartan) {
  return WeylData{cartan, weyl_order(cartan), invariant_degrees(cartan), conjugacy_classes(cartan)};
}

}  // namespace commvar

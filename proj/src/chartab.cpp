#include "commvar/chartab.hpp"

#include <algorithm>

#include "commvar/errors.hpp"

namespace commvar {

namespace {

// Removing a rim hook of length k from λ is moving one bead of its beta-set
// from position b to an empty position b-k; the hook's height is the number
// of beads jumped over.
long mn_recursive(std::vector<bool>& beads, const std::vector<unsigned>& mu, std::size_t next) {
  if (next == mu.size()) return 1;
  const unsigned k = mu[next];
  long total = 0;
  for (std::size_t b = k; b < beads.size(); ++b) {
    if (!beads[b] || beads[b - k]) continue;
    unsigned height = 0;
    for (std::size_t j = b - k + 1; j < b; ++j)
      if (beads[j]) ++height;
    beads[b] = false;
    beads[b - k] = true;
    const long sub = mn_recursive(beads, mu, next + 1);
    beads[b - k] = false;
    beads[b] = true;
    total += (height % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw InvalidArgument("size mismatch: |" + lambda.to_string() + "| != |" + mu.to_string() + "|");
  const auto& parts = lambda.parts();
  const std::size_t len = parts.size();
  std::vector<bool> beads(len == 0 ? 1 : parts.front() + len, false);
  for (std::size_t i = 0; i < len; ++i) beads[parts[i] + (len - 1 - i)] = true;
  return mn_recursive(beads, mu.parts(), 0);
}

std::size_t CharacterTable::row_index(const Partition& irreducible) const {
  auto it = std::find(rows.begin(), rows.end(), irreducible);
  if (it == rows.end()) throw InvalidArgument("no irreducible " + irreducible.to_string());
  return static_cast<std::size_t>(it - rows.begin());
}

std::size_t CharacterTable::column_index(const Partition& cycle_type) const {
  auto it = std::find(columns.begin(), columns.end(), cycle_type);
  if (it == columns.end()) throw InvalidArgument("no class " + cycle_type.to_string());
  return static_cast<std::size_t>(it - columns.begin());
}

CharacterTable character_table(unsigned m, const Limits& limits) {
  if (m == 0 || m > limits.max_char_m)
    throw InvalidArgument("character table size m=" + std::to_string(m) + " outside 1.." +
                          std::to_string(limits.max_char_m) + " (COMMVAR_MAX_CHAR_M)");
  CharacterTable table;
  table.m = m;
  table.columns = class_ordered_partitions(m);
  mpz_fac_ui(table.group_order.get_mpz_t(), m);
  for (const Partition& c : table.columns) table.class_sizes.push_back(table.group_order / c.centralizer_order());

  const Partition identity(std::vector<unsigned>(m, 1));
  const Partition trivial(std::vector<unsigned>{m});
  std::vector<std::pair<long, Partition>> others;
  for (Partition& p : partitions_of(m))  // reverse lexicographic
    if (p != trivial && p != identity) others.emplace_back(mn_character(p, identity), std::move(p));
  std::stable_sort(others.begin(), others.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  table.rows.push_back(trivial);
  if (m > 1) table.rows.push_back(identity);
  for (auto& [dim, p] : others) table.rows.push_back(std::move(p));

  for (const Partition& row : table.rows) {
    std::vector<long> values;
    values.reserve(table.columns.size());
    for (const Partition& col : table.columns) values.push_back(mn_character(row, col));
    table.values.push_back(std::move(values));
  }
  return table;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g,
                       const std::vector<Integer>& class_sizes, const Integer& order) {
  if (f.size() != class_sizes.size() || g.size() != class_sizes.size())
    throw InvalidArgument("class function length mismatch");
  Rational sum = 0;
  for (std::size_t c = 0; c < f.size(); ++c) sum += Rational(class_sizes[c]) * f[c] * g[c];
  return sum / Rational(order);
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g, const WeylData& weyl) {
  std::vector<Integer> sizes;
  sizes.reserve(weyl.classes.size());
  for (const auto& c : weyl.classes) sizes.push_back(c.size);
  return inner_product(f, g, sizes, weyl.order);
}

GradedClassFunction GradedClassFunction::from_class_polys(const std::vector<Poly>& per_class) {
  GradedClassFunction gcf(per_class.size());
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    for (const auto& [d, v] : per_class[c].terms()) {
      auto [it, inserted] = gcf.coeffs_.try_emplace(d, per_class.size(), Rational(0));
      it->second[c] = v;
    }
  }
  return gcf;
}

void GradedClassFunction::add(unsigned degree, const ClassFunction& f) {
  if (f.size() != class_count_) throw InvalidArgument("class function length mismatch");
  auto [it, inserted] = coeffs_.try_emplace(degree, class_count_, Rational(0));
  bool all_zero = true;
  for (std::size_t c = 0; c < class_count_; ++c) {
    it->second[c] += f[c];
    if (it->second[c] != 0) all_zero = false;
  }
  if (all_zero) coeffs_.erase(it);
}

Poly GradedClassFunction::at_class(std::size_t c) const {
  if (c >= class_count_) throw InvalidArgument("class index out of range");
  Poly::Terms terms;
  for (const auto& [d, f] : coeffs_) terms.emplace(d, f[c]);
  return Poly::from_terms(std::move(terms));
}

std::vector<IsotypicComponent> decompose_graded(const GradedClassFunction& gcf,
                                                const CharacterTable& table) {
  if (gcf.class_count() != table.columns.size())
    throw InvalidArgument("graded class function is not indexed by the classes of S_" +
                          std::to_string(table.m));
  std::vector<IsotypicComponent> out;
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    ClassFunction chi(table.values[row].begin(), table.values[row].end());
    Poly::Terms mult;
    for (const auto& [d, f] : gcf.coefficients()) {
      Rational m = inner_product(chi, f, table.class_sizes, table.group_order);
      if (m < 0 || m.get_den() != 1)
        throw InvariantViolation("not a character: multiplicity " + to_string(m) + " of " +
                                 table.rows[row].to_string() + " in degree " + std::to_string(d));
      mult.emplace(d, std::move(m));
    }
    Poly p = Poly::from_terms(std::move(mult));
    if (!p.is_zero()) out.push_back({table.rows[row], std::move(p)});
  }
  return out;
}

GradedClassFunction recombine(const std::vector<IsotypicComponent>& components,
                              const CharacterTable& table) {
  GradedClassFunction gcf(table.columns.size());
  for (const auto& comp : components) {
    const auto& chi = table.values[table.row_index(comp.irreducible)];
    for (const auto& [d, m] : comp.multiplicity.terms()) {
      ClassFunction f(chi.size());
      for (std::size_t c = 0; c < chi.size(); ++c) f[c] = m * chi[c];
      gcf.add(d, f);
    }
  }
  return gcf;
}

}  // namespace commvar

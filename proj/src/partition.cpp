#include "commvar/partition.hpp"

#include <algorithm>

#include "commvar/errors.hpp"

namespace commvar {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

unsigned Partition::size() const {
  unsigned s = 0;
  for (unsigned p : parts_) s += p;
  return s;
}

unsigned Partition::multiplicity(unsigned part) const {
  return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), part));
}

Integer Partition::centralizer_order() const {
  Integer z = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    const unsigned part = parts_[i];
    unsigned mult = 0;
    while (i < parts_.size() && parts_[i] == part) {
      ++mult;
      ++i;
      z *= part * mult;  // accumulates part^mult · mult!
    }
  }
  return z;
}

Partition Partition::conjugate() const {
  std::vector<unsigned> out;
  if (parts_.empty()) return Partition();
  for (unsigned j = 1; j <= parts_.front(); ++j) {
    unsigned count = 0;
    for (unsigned p : parts_)
      if (p >= j) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::string Partition::cycle_notation() const {
  std::string s;
  unsigned next = 1;
  for (unsigned p : parts_) {
    if (p == 1) continue;
    s += "(";
    for (unsigned k = 0; k < p; ++k) {
      const unsigned label = next++;
      // Points beyond 9 are separated so the cycle stays readable.
      if (label > 9 && k > 0) s += " ";
      s += std::to_string(label);
    }
    s += ")";
  }
  return s.empty() ? "(1)" : s;
}

namespace {

void generate(unsigned remaining, unsigned max_part, std::vector<unsigned>& current,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned m) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  generate(m, m, current, out);
  return out;
}

std::vector<Partition> class_ordered_partitions(unsigned m) {
  std::vector<Partition> out = partitions_of(m);
  // partitions_of is reverse lexicographic already; a stable sort keeps it as tie-break.
  std::stable_sort(out.begin(), out.end(), [m](const Partition& a, const Partition& b) {
    return m - a.fixed_points() < m - b.fixed_points();
  });
  return out;
}

}  // namespace commvar

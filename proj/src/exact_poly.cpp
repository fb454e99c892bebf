#include "commvar/exact_poly.hpp"

#include <stdexcept>

#include "commvar/errors.hpp"

namespace commvar {

Poly::Poly(long c) {
  if (c != 0) terms_.emplace(0u, Rational(c));
}

Poly::Poly(const Rational& c) {
  Rational v = c;
  v.canonicalize();
  if (v != 0) terms_.emplace(0u, std::move(v));
}

Poly::Poly(std::initializer_list<long> coeffs) {
  unsigned d = 0;
  for (long c : coeffs) {
    if (c != 0) terms_.emplace(d, Rational(c));
    ++d;
  }
}

Poly Poly::from_dense(const std::vector<Rational>& coeffs) {
  Terms t;
  for (std::size_t d = 0; d < coeffs.size(); ++d) t.emplace(static_cast<unsigned>(d), coeffs[d]);
  return from_terms(std::move(t));
}

Poly Poly::monomial(const Rational& c, unsigned degree) {
  return from_terms(Terms{{degree, c}});
}

Poly Poly::from_terms(Terms terms) {
  Poly p(std::move(terms));
  p.canonicalize();
  return p;
}

void Poly::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second.canonicalize();
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

std::optional<unsigned> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<unsigned> Poly::low_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Rational Poly::coeff(unsigned degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> Poly::dense() const {
  if (terms_.empty()) return {};
  std::vector<Rational> out(terms_.rbegin()->first + 1, Rational(0));
  for (const auto& [d, c] : terms_) out[d] = c;
  return out;
}

bool Poly::has_integer_coefficients() const {
  for (const auto& [d, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Poly Poly::scale_variable(const Rational& factor) const {
  Rational c = factor;
  c.canonicalize();
  if (c == 0) return Poly(coeff(0));
  Terms out;
  Rational power = 1;
  unsigned at = 0;
  for (const auto& [d, v] : terms_) {
    for (; at < d; ++at) power *= c;
    out.emplace(d, v * power);
  }
  return Poly(std::move(out));
}

Poly Poly::inflate(unsigned k) const {
  if (k == 0) throw std::domain_error("inflate: k must be positive");
  Terms out;
  for (const auto& [d, v] : terms_) out.emplace(d * k, v);
  return Poly(std::move(out));
}

Poly Poly::scaled(const Rational& factor) const {
  Rational c = factor;
  c.canonicalize();
  if (c == 0) return Poly();
  Terms out;
  for (const auto& [d, v] : terms_) out.emplace(d, v * c);
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Terms out;
  for (const auto& [d, v] : terms_) out.emplace(d, -v);
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& q) {
  for (const auto& [d, v] : q.terms_) {
    auto [it, inserted] = terms_.try_emplace(d, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  for (const auto& [d, v] : q.terms_) {
    auto [it, inserted] = terms_.try_emplace(d, -v);
    if (!inserted) {
      it->second -= v;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly operator+(const Poly& p, const Poly& q) {
  Poly r = p;
  r += q;
  return r;
}

Poly operator-(const Poly& p, const Poly& q) {
  Poly r = p;
  r -= q;
  return r;
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  const unsigned lo = *p.low_degree() + *q.low_degree();
  const unsigned hi = *p.degree() + *q.degree();
  // Dense accumulator over the product's support; products of n-th powers fill it.
  std::vector<Rational> acc(hi - lo + 1, Rational(0));
  Rational prod;
  for (const auto& [dp, cp] : p.terms_) {
    for (const auto& [dq, cq] : q.terms_) {
      prod = cp * cq;
      acc[dp + dq - lo] += prod;
    }
  }
  Poly::Terms out;
  for (unsigned i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.emplace_hint(out.end(), lo + i, std::move(acc[i]));
  return Poly(std::move(out));
}

std::string Poly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit = mag == 1;
    if (d == 0) {
      s += commvar::to_string(mag);
      continue;
    }
    if (!unit) s += commvar::to_string(mag) + "*";
    s += var;
    if (d > 1) s += "^" + std::to_string(d);
  }
  return s;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly pow(const Poly& p, unsigned k) {
  Poly result(1);
  Poly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Poly div_exact(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return Poly();
  const unsigned q_low = *q.low_degree();
  const unsigned q_deg = *q.degree();
  if (*p.low_degree() < q_low || *p.degree() < q_deg) throw InexactDivision();
  const Rational lead = q.coeff(q_low);

  Poly::Terms rem = p.terms();
  Poly::Terms quotient;
  const unsigned top = *p.degree() - q_deg;
  while (!rem.empty()) {
    auto [d, c] = *rem.begin();
    if (d < q_low || d - q_low > top) throw InexactDivision();
    Rational factor = c / lead;
    const unsigned shift = d - q_low;
    for (const auto& [dq, cq] : q.terms()) {
      auto [it, inserted] = rem.try_emplace(dq + shift, -factor * cq);
      if (!inserted) {
        it->second -= factor * cq;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.emplace(shift, std::move(factor));
  }
  return Poly::from_terms(std::move(quotient));
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  const unsigned q_deg = *q.degree();
  const Rational lead = q.coeff(q_deg);
  Poly::Terms rem = p.terms();
  Poly::Terms quotient;
  while (!rem.empty() && rem.rbegin()->first >= q_deg) {
    auto [d, c] = *rem.rbegin();
    Rational factor = c / lead;
    const unsigned shift = d - q_deg;
    for (const auto& [dq, cq] : q.terms()) {
      auto [it, inserted] = rem.try_emplace(dq + shift, -factor * cq);
      if (!inserted) {
        it->second -= factor * cq;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.emplace(shift, std::move(factor));
  }
  return {Poly::from_terms(std::move(quotient)), Poly::from_terms(std::move(rem))};
}

namespace {

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.coeff(*p.degree()));
}

}  // namespace

Poly gcd(const Poly& p, const Poly& q) {
  Poly a = monic(p);
  Poly b = monic(q);
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return a;
}

Rational eval(const Poly& p, const Rational& point) {
  if (p.is_zero()) return 0;
  Rational x = point;
  x.canonicalize();
  Rational acc = 0;
  unsigned prev = *p.degree();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    for (unsigned gap = prev - it->first; gap > 0; --gap) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  for (unsigned gap = prev; gap > 0; --gap) acc *= x;
  return acc;
}

RationalFunction::RationalFunction(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  const Rational low = den_.coeff(*den_.low_degree());
  if (low != 1) {
    const Rational inv = 1 / low;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::reduced() const {
  if (num_.is_zero()) return RationalFunction(Poly(), Poly(1));
  Poly g = gcd(num_, den_);
  return RationalFunction(divmod(num_, g).first, divmod(den_, g).first);
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  if (f.den_ == g.den_) return RationalFunction(f.num_ + g.num_, f.den_);
  // Add over the least common multiple of the denominators.
  Poly common = gcd(f.den_, g.den_);
  Poly f_cof = divmod(f.den_, common).first;
  Poly g_cof = divmod(g.den_, common).first;
  return RationalFunction(f.num_ * g_cof + g.num_ * f_cof, f.den_ * g_cof);
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
}

bool operator==(const RationalFunction& f, const RationalFunction& g) {
  return f.num_ * g.den_ == g.num_ * f.den_;
}

std::vector<Rational> series_expand(const RationalFunction& f, unsigned max_degree) {
  const Poly& den = f.denominator();
  const Rational d0 = den.coeff(0);
  if (d0 == 0) throw PoleAtOrigin();
  std::vector<Rational> out(max_degree + 1, Rational(0));
  for (unsigned k = 0; k <= max_degree; ++k) {
    Rational acc = f.numerator().coeff(k);
    for (const auto& [d, c] : den.terms()) {
      if (d == 0) continue;
      if (d > k) break;
      acc -= c * out[k - d];
    }
    out[k] = acc / d0;
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace commvar

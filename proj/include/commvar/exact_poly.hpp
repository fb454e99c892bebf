#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace commvar {

using Rational = mpq_class;
using Integer = mpz_class;

/// Univariate polynomial in t with exact rational coefficients.
///
/// Storage is sparse and keyed by degree. No stored coefficient is ever zero,
/// so two polynomials are equal iff their term maps are equal. Values are
/// immutable through the public interface apart from assignment.
class Poly {
 public:
  using Terms = std::map<unsigned, Rational>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// Dense constructor, coefficients in ascending degree order.
  Poly(std::initializer_list<long> coeffs);
  static Poly from_dense(const std::vector<Rational>& coeffs);
  static Poly monomial(const Rational& c, unsigned degree);
  /// Adopts a term map, dropping zero entries.
  static Poly from_terms(Terms terms);

  bool is_zero() const { return terms_.empty(); }
  /// Degree, or nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  /// Lowest degree carrying a nonzero coefficient, nullopt for zero.
  std::optional<unsigned> low_degree() const;
  Rational coeff(unsigned degree) const;
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Dense ascending coefficient list of length degree+1 (empty for zero).
  std::vector<Rational> dense() const;
  bool has_integer_coefficients() const;

  /// p(c·t)
  Poly scale_variable(const Rational& c) const;
  /// p(t^k), k >= 1
  Poly inflate(unsigned k) const;
  /// Multiplies every coefficient by c.
  Poly scaled(const Rational& c) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Poly& q) { return *this = *this * q; }
  friend bool operator==(const Poly& p, const Poly& q) { return p.terms_ == q.terms_; }

  /// Human-readable form such as "1 + t^2 + 2*t^3"; "0" for zero.
  std::string to_string(const std::string& var = "t") const;

 private:
  explicit Poly(Terms terms) : terms_(std::move(terms)) {}
  void canonicalize();

  Terms terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly pow(const Poly& p, unsigned k);

/// Returns r with q·r == p. Works upward from the lowest degree like a power
/// series division, so it suits divisors with a nonzero low coefficient.
/// Throws InexactDivision if any remainder survives, std::domain_error if q == 0.
Poly div_exact(const Poly& p, const Poly& q);

/// Euclidean division from the top degree: p = quotient·q + remainder with
/// deg(remainder) < deg(q).
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);

/// Monic greatest common divisor; gcd(0, 0) == 0.
Poly gcd(const Poly& p, const Poly& q);

Rational eval(const Poly& p, const Rational& x);

/// Quotient of two polynomials. The denominator is never zero and its
/// lowest-degree coefficient is normalized to 1; no common factors are
/// cancelled unless reduced() is called.
class RationalFunction {
 public:
  RationalFunction(Poly numerator, Poly denominator);
  explicit RationalFunction(Poly numerator) : RationalFunction(std::move(numerator), Poly(1)) {}

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  /// Lowest terms: common factors removed, denominator normalized.
  RationalFunction reduced() const;

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
  /// Equality as rational functions (cross multiplication).
  friend bool operator==(const RationalFunction& f, const RationalFunction& g);

 private:
  Poly num_;
  Poly den_;
};

/// Power-series coefficients of f through max_degree (max_degree+1 entries).
/// Throws PoleAtOrigin when the denominator has no constant term.
std::vector<Rational> series_expand(const RationalFunction& f, unsigned max_degree);

/// Decimal rendering of a rational: "3", "-1/2".
std::string to_string(const Rational& q);

}  // namespace commvar

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "graphopt/rational.hpp"

namespace graphopt {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored lowest degree first. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  const mpz_class& leading() const { return coeffs_.back(); }

  IntPolynomial derivative() const;
  /// Divides by the positive gcd of the coefficients; the sign is preserved.
  IntPolynomial primitive() const;
  mpz_class evaluate(const mpz_class& x) const;
  /// Sign of p(num/den) for den > 0, computed without rounding.
  int sign_at(const Rational& x) const;
  /// Sign as x -> +inf (`positive`) or x -> -inf.
  int sign_at_infinity(bool positive) const;

  std::string str() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x].
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
/// Exact quotient a / b in Z[x]; throws InvalidArgument when b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
/// Primitive gcd with positive leading coefficient.
IntPolynomial primitive_gcd(IntPolynomial a, IntPolynomial b);

/// Sturm chain p, p', -rem(...), ... built with sign-correct primitive pseudo-remainders.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);

/// Real roots of p strictly greater than `x`, counted with multiplicity.
int count_roots_above(const IntPolynomial& p, const Rational& x);
/// Real roots of p strictly less than `x`, counted with multiplicity.
int count_roots_below(const IntPolynomial& p, const Rational& x);

/// Determinant of an integer matrix by fraction-free Bareiss elimination.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

/// Recovers the integer polynomial of degree <= values.size()-1 with p(k) = values[k],
/// k = 0, 1, ..., via forward differences in the falling-factorial basis.
IntPolynomial interpolate_at_naturals(const std::vector<mpz_class>& values);

}  // namespace graphopt

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "halfrep/integer.hpp"

namespace halfrep {

/// Dense integer polynomial; coeffs()[i] is the coefficient of x^i. Always
/// canonical: no trailing zeros, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  /// c * x^n
  static IntPolynomial monomial(std::size_t n, const Integer& c = 1);
  /// x^n - 1
  static IntPolynomial x_pow_minus_one(std::size_t n);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i, zero beyond the degree.
  Integer coeff(std::size_t i) const;

  Integer evaluate(const Integer& x) const;
  bool is_palindromic() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  void trim();

  std::vector<Integer> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& f, const IntPolynomial& g);

/// h with h*g == f. Throws DomainError if g is zero or the division leaves
/// a remainder or a non-integral quotient coefficient.
IntPolynomial poly_divexact(const IntPolynomial& f, const IntPolynomial& g);

/// Space-separated coefficients in ascending degree, "0" for zero.
std::string coeff_string(const IntPolynomial& f);

} // namespace halfrep

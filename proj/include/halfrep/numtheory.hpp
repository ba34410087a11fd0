#pragma once

#include "halfrep/integer.hpp"

namespace halfrep {

/// Bezout certificate: u*a + v*b == g == gcd(a, b).
struct ExtGcdResult {
  Integer g;
  Integer u;
  Integer v;
};

/// gcd of two nonnegative integers; throws DomainError if both are zero
/// or either is negative.
Integer gcd(const Integer& a, const Integer& b);

/// Iterative extended Euclid. For a, b >= 1 the coefficients satisfy
/// |u| <= b and |v| <= a.
ExtGcdResult ext_gcd(const Integer& a, const Integer& b);

/// Least positive w with a*w == 1 (mod m). Requires m >= 2 (DomainError)
/// and gcd(a, m) == 1 (NoInverseError). Negative a is reduced mod m first.
Integer mod_inv(const Integer& a, const Integer& m);

/// Ordered pair of positive, relatively prime integers.
///
/// The only way to obtain one is through make(), which validates both
/// conditions; everything downstream may assume coprimality.
class CoprimePair {
public:
  static CoprimePair make(Integer a, Integer b);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }

  /// The same pair with the roles of a and b exchanged.
  CoprimePair swapped() const { return CoprimePair(b_, a_); }

  friend bool operator==(const CoprimePair& l, const CoprimePair& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

private:
  CoprimePair(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}

  Integer a_;
  Integer b_;
};

/// k = (a-1)(b-1)/2. Exact: coprime integers are never both even.
Integer half_product(const CoprimePair& p);

} // namespace halfrep

#pragma once

#include <cstdint>

#include "halfrep/integer.hpp"
#include "halfrep/polynomial.hpp"
#include "halfrep/representation.hpp"

namespace halfrep {

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// Distinct primes p, q. Order is preserved but carries no meaning.
class PrimePair {
public:
  static PrimePair make(std::uint64_t p, std::uint64_t q);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t q() const noexcept { return q_; }

private:
  PrimePair(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) {}

  std::uint64_t p_;
  std::uint64_t q_;
};

/// Largest deg Phi_pq = (p-1)(q-1) accepted before ResourceLimitError.
inline constexpr std::uint64_t kMaxCyclotomicDegree = 1u << 22;

/// Phi_pq(x) = (x^pq - 1)(x - 1) / ((x^p - 1)(x^q - 1)).
IntPolynomial cyclotomic_pq(const PrimePair& pair);

struct MidtermReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t degree = 0;      // (p-1)(q-1)
  std::uint64_t mid_degree = 0;  // (p-1)(q-1)/2
  Integer mid_coeff;
  /// alpha = x (multiplies q), beta = y (multiplies p), 0 <= alpha <= p-1.
  Representation decomposition;
  IntPolynomial polynomial;
};

/// Builds Phi_pq, reads the coefficient at the middle degree and decomposes
/// the middle degree as alpha*q + beta*p + delta via solve_representation
/// on (a=q, b=p). Throws InvariantViolation if the middle coefficient is
/// even.
MidtermReport midterm_report(const PrimePair& pair);

} // namespace halfrep

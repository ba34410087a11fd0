#include "halfrep/cyclotomic.hpp"

#include <string>

#include "halfrep/errors.hpp"

namespace halfrep {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePair PrimePair::make(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (!is_prime(q)) throw DomainError(std::to_string(q) + " is not prime");
  if (p == q) throw DomainError("primes must be distinct");
  return PrimePair(p, q);
}

IntPolynomial cyclotomic_pq(const PrimePair& pair) {
  const std::uint64_t p = pair.p();
  const std::uint64_t q = pair.q();
  if ((p - 1) > kMaxCyclotomicDegree / (q - 1)) {
    throw ResourceLimitError("degree of Phi_" + std::to_string(p) + "*" + std::to_string(q) +
                             " exceeds the supported bound");
  }
  IntPolynomial num = poly_mul(IntPolynomial::x_pow_minus_one(p * q), IntPolynomial{-1, 1});
  // Both divisors are binomials, so each division costs O(pq).
  num = poly_divexact(num, IntPolynomial::x_pow_minus_one(p));
  return poly_divexact(num, IntPolynomial::x_pow_minus_one(q));
}

MidtermReport midterm_report(const PrimePair& pair) {
  MidtermReport r;
  r.p = pair.p();
  r.q = pair.q();
  r.polynomial = cyclotomic_pq(pair);
  r.degree = (r.p - 1) * (r.q - 1);
  if (r.polynomial.degree() != static_cast<long>(r.degree)) {
    throw InvariantViolation("Phi_pq has unexpected degree");
  }
  r.mid_degree = r.degree / 2;
  r.mid_coeff = r.polynomial.coeff(r.mid_degree);
  if (!is_odd(r.mid_coeff)) {
    throw InvariantViolation("midterm coefficient of Phi_" + std::to_string(r.p) + "*" +
                             std::to_string(r.q) + " is even: " + to_string(r.mid_coeff));
  }
  const auto pair_qp = CoprimePair::make(Integer(static_cast<unsigned long>(r.q)),
                                         Integer(static_cast<unsigned long>(r.p)));
  r.decomposition = solve_representation(pair_qp);
  return r;
}

} // namespace halfrep

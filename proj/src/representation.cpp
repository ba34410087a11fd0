#include "halfrep/representation.hpp"

#include "halfrep/errors.hpp"

namespace halfrep {

namespace {

/// Least r in [0, b-1] with a*r == n (mod b); b == 1 forces r = 0.
Integer least_residue(const Integer& a, const Integer& b, const Integer& n) {
  if (b == 1) return 0;
  return floor_mod(floor_mod(n, b) * mod_inv(a, b), b);
}

void require_coprime(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) throw DomainError("coefficients must be positive");
  if (gcd(a, b) != 1) {
    throw DomainError(to_string(a) + " and " + to_string(b) + " are not coprime");
  }
}

} // namespace

RepresentationWitness representation_witness(const CoprimePair& p) {
  const Integer& a = p.a();
  const Integer& b = p.b();
  RepresentationWitness w;
  w.k = half_product(p);
  w.r1 = least_residue(a, b, w.k);
  w.s1 = div_exact(w.k - a * w.r1, b);
  w.r2 = b - 1 - w.r1;
  w.s2 = -1 - w.s1;
  return w;
}

Representation solve_representation(const CoprimePair& p) {
  if (p.b() == 1) return {0, 0, 0};
  RepresentationWitness w = representation_witness(p);
  if (w.s1 >= 0) return {0, std::move(w.r1), std::move(w.s1)};
  return {1, std::move(w.r2), std::move(w.s2)};
}

OracleReport brute_force_representation(const CoprimePair& p, std::uint64_t bound) {
  const Integer k = half_product(p);
  if (k > Integer(static_cast<unsigned long>(bound))) {
    throw ResourceLimitError("brute force: k = " + to_string(k) + " exceeds enumeration bound " +
                             std::to_string(bound));
  }
  OracleReport report{p, {}, {}};
  const Integer& a = p.a();
  const Integer& b = p.b();
  Integer rest, y;
  for (int delta = 0; delta <= 1; ++delta) {
    auto& out = delta == 0 ? report.eq1_solutions : report.eq2_solutions;
    const Integer target = k - delta;
    Integer x = 0;
    for (rest = target; rest >= 0; rest -= a, ++x) {
      if (mpz_divisible_p(rest.get_mpz_t(), b.get_mpz_t())) {
        y = div_exact(rest, b);
        out.emplace_back(x, y);
      }
    }
  }
  return report;
}

SolutionFamily solution_family(const Integer& a, const Integer& b, const Integer& n) {
  require_coprime(a, b);
  Integer r = least_residue(a, b, n);
  Integer s = div_exact(n - a * r, b);
  return {std::move(r), std::move(s), a, b, n};
}

std::optional<std::pair<Integer, Integer>> has_nonnegative_solution(const Integer& a,
                                                                    const Integer& b,
                                                                    const Integer& n) {
  if (n < 0) throw DomainError("representability target must be nonnegative");
  SolutionFamily family = solution_family(a, b, n);
  // Any other member with y >= 0 needs t < 0 and hence x < 0.
  if (family.base_s < 0) return std::nullopt;
  return std::make_pair(std::move(family.base_r), std::move(family.base_s));
}

} // namespace halfrep

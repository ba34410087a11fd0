#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "halfrep/integer.hpp"
#include "halfrep/numtheory.hpp"

namespace halfrep {

/// x*a + y*b + delta == (a-1)(b-1)/2 with delta in {0,1}, 0 <= x <= b-1
/// and y >= 0. delta == 0 is the homogeneous equation x*a + y*b = k,
/// delta == 1 the shifted one x*a + y*b + 1 = k.
struct Representation {
  int delta = 0;
  Integer x;
  Integer y;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// The two candidate residues behind solve_representation, kept for
/// inspection. r1*a + s1*b == k and r2*a + s2*b + 1 == k, with
/// r1 + r2 == b - 1 and s1 + s2 == -1, so exactly one of s1, s2 is >= 0.
struct RepresentationWitness {
  Integer k;
  Integer r1;
  Integer s1;
  Integer r2;
  Integer s2;
};

RepresentationWitness representation_witness(const CoprimePair& p);

/// The unique nonnegative solution across both equations.
///
/// r1 is the least residue with a*r1 == k (mod b). If s1 = (k - a*r1)/b is
/// nonnegative it is the answer for delta == 0; otherwise the complementary
/// residue r2 = b-1-r1 gives s2 = -1-s1 >= 0 for delta == 1.
Representation solve_representation(const CoprimePair& p);

/// Every nonnegative solution of both equations, found by direct search.
struct OracleReport {
  CoprimePair pair;
  std::vector<std::pair<Integer, Integer>> eq1_solutions;  // delta == 0
  std::vector<std::pair<Integer, Integer>> eq2_solutions;  // delta == 1

  std::size_t total() const { return eq1_solutions.size() + eq2_solutions.size(); }
};

inline constexpr std::uint64_t kDefaultEnumerationBound = 10'000'000;

/// Enumerates x in [0, floor((k-delta)/a)] for both delta values and keeps
/// each x whose remainder (k - delta - x*a) is a nonnegative multiple of b.
/// Throws ResourceLimitError when k exceeds `bound`.
OracleReport brute_force_representation(const CoprimePair& p,
                                        std::uint64_t bound = kDefaultEnumerationBound);

/// All integer solutions of x*a + y*b = n: (base_r + t*b, base_s - t*a).
struct SolutionFamily {
  Integer base_r;
  Integer base_s;
  Integer a;
  Integer b;
  Integer n;

  std::pair<Integer, Integer> at(const Integer& t) const {
    return {base_r + t * b, base_s - t * a};
  }
};

/// Base solution with 0 <= base_r <= b-1. a, b >= 1 with gcd 1, n any sign;
/// DomainError otherwise.
SolutionFamily solution_family(const Integer& a, const Integer& b, const Integer& n);

/// Witness (x, y) with least x such that x*a + y*b == n and x, y >= 0, or
/// nullopt when n is not representable. Requires gcd(a, b) == 1, n >= 0.
std::optional<std::pair<Integer, Integer>> has_nonnegative_solution(const Integer& a,
                                                                    const Integer& b,
                                                                    const Integer& n);

} // namespace halfrep

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace halfrep {

/// Exact arbitrary-precision integer used throughout the library.
using Integer = mpz_class;

/// Parses an optionally signed decimal literal. Throws DomainError on
/// anything else (empty, whitespace, non-digits, hex prefixes).
Integer parse_integer(std::string_view text);

/// Parses an unsigned decimal literal ("0", "17", "000123").
Integer parse_natural(std::string_view text);

inline std::string to_string(const Integer& v) { return v.get_str(10); }

/// Remainder in [0, |m|) regardless of the sign of v.
inline Integer floor_mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

/// Quotient of an exact division. Caller guarantees m | v.
inline Integer div_exact(const Integer& v, const Integer& m) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return q;
}

inline bool is_even(const Integer& v) { return mpz_even_p(v.get_mpz_t()) != 0; }
inline bool is_odd(const Integer& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

} // namespace halfrep

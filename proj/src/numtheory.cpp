#include "halfrep/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "halfrep/errors.hpp"

namespace halfrep {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Integer parse_natural(std::string_view text) {
  if (!all_digits(text)) throw DomainError("malformed integer: '" + std::string(text) + "'");
  return Integer(std::string(text), 10);
}

Integer parse_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    Integer v = parse_natural(text.substr(1));
    return text.front() == '-' ? Integer(-v) : v;
  }
  return parse_natural(text);
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a < 0 || b < 0) throw DomainError("gcd: negative argument");
  if (a == 0 && b == 0) throw DomainError("gcd(0, 0) is undefined");
  Integer x = a, y = b;
  while (y != 0) {
    x %= y;
    std::swap(x, y);
  }
  return x;
}

ExtGcdResult ext_gcd(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) throw DomainError("ext_gcd: arguments must be positive");
  Integer old_r = a, r = b;
  Integer old_u = 1, u = 0;
  Integer old_v = 0, v = 1;
  Integer q, tmp;
  while (r != 0) {
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_u - q * u;
    old_u = std::move(u);
    u = std::move(tmp);
    tmp = old_v - q * v;
    old_v = std::move(v);
    v = std::move(tmp);
  }
  return {old_r, old_u, old_v};
}

Integer mod_inv(const Integer& a, const Integer& m) {
  if (m < 2) throw DomainError("mod_inv: modulus must be at least 2");
  Integer reduced = floor_mod(a, m);
  if (reduced == 0) throw NoInverseError("mod_inv: " + to_string(a) + " is 0 mod " + to_string(m));
  auto [g, u, v] = ext_gcd(reduced, m);
  if (g != 1) {
    throw NoInverseError("mod_inv: gcd(" + to_string(a) + ", " + to_string(m) + ") = " +
                         to_string(g));
  }
  return floor_mod(u, m);
}

CoprimePair CoprimePair::make(Integer a, Integer b) {
  if (a < 1 || b < 1) throw DomainError("pair entries must be positive");
  if (gcd(a, b) != 1) {
    throw DomainError(to_string(a) + " and " + to_string(b) + " are not coprime");
  }
  return CoprimePair(std::move(a), std::move(b));
}

Integer half_product(const CoprimePair& p) {
  return div_exact((p.a() - 1) * (p.b() - 1), 2);
}

} // namespace halfrep

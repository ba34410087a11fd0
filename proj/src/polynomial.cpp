#include "halfrep/polynomial.hpp"

#include <sstream>

#include "halfrep/errors.hpp"

namespace halfrep {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t n, const Integer& c) {
  std::vector<Integer> v(n + 1);
  v[n] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[n] += 1;
  v[0] -= 1;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool IntPolynomial::is_palindromic() const {
  for (std::size_t i = 0, j = coeffs_.size(); i < j; ++i, --j) {
    if (coeffs_[i] != coeffs_[j - 1]) return false;
  }
  return true;
}

IntPolynomial poly_mul(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  std::vector<Integer> out(fc.size() + gc.size() - 1);
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (fc[i] == 0) continue;
    for (std::size_t j = 0; j < gc.size(); ++j) {
      if (gc[j] != 0) out[i + j] += fc[i] * gc[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_divexact(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw DomainError("inexact polynomial division: degree");

  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < dg; ++j) {
    if (gc[j] != 0) support.push_back(j);
  }
  const Integer& lead = gc[dg];

  std::vector<Integer> rem = f.coeffs();
  std::vector<Integer> quot(rem.size() - dg);
  Integer q;
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer& top = rem[i + dg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw DomainError("inexact polynomial division: non-integral quotient");
    }
    q = div_exact(top, lead);
    for (std::size_t j : support) rem[i + j] -= q * gc[j];
    top = 0;
    quot[i] = q;
  }
  for (std::size_t j = 0; j < dg; ++j) {
    if (rem[j] != 0) throw DomainError("inexact polynomial division: nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

std::string coeff_string(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ' ';
    os << c[i];
  }
  return os.str();
}

} // namespace halfrep

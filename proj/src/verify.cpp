#include "halfrep/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>
#include <utility>

#include "halfrep/cyclotomic.hpp"
#include "halfrep/fibonacci.hpp"
#include "halfrep/representation.hpp"

namespace halfrep {

std::string_view to_string(Scope scope) {
  switch (scope) {
    case Scope::theorem1: return "theorem1";
    case Scope::closed_forms: return "closed-forms";
    case Scope::identities: return "identities";
    case Scope::cyclotomic: return "cyclotomic";
    case Scope::representability: return "representability";
  }
  return "?";
}

std::optional<Scope> parse_scope(std::string_view text) {
  for (Scope s : all_scopes()) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

const std::vector<Scope>& all_scopes() {
  static const std::vector<Scope> scopes{Scope::theorem1, Scope::closed_forms, Scope::identities,
                                         Scope::cyclotomic, Scope::representability};
  return scopes;
}

long default_max(Scope scope) {
  switch (scope) {
    case Scope::theorem1: return 200;
    case Scope::closed_forms: return 120;
    case Scope::identities: return 500;
    case Scope::cyclotomic: return 60;
    case Scope::representability: return 60;
  }
  return 0;
}

std::string_view VerifySummary::unit() const {
  return scope == Scope::closed_forms || scope == Scope::identities ? "cases" : "pairs";
}

CaseResults run_cases(std::size_t count, unsigned jobs,
                      const std::function<std::optional<std::string>(std::size_t)>& check) {
  std::vector<std::optional<std::string>> failures(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        failures[i] = check(i);
      } catch (const std::exception& e) {
        failures[i] = std::string("exception: ") + e.what();
      }
    }
  };

  const unsigned n_threads = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  CaseResults out;
  for (auto& f : failures) {
    if (!f) {
      ++out.passed;
      continue;
    }
    ++out.failed;
    if (!out.first_failure) out.first_failure = std::move(f);
  }
  return out;
}

namespace {

using Check = std::function<std::optional<std::string>(std::size_t)>;

std::vector<std::pair<long, long>> coprime_pairs(long a_min, long b_max) {
  std::vector<std::pair<long, long>> pairs;
  for (long b = a_min + 1; b <= b_max; ++b) {
    for (long a = a_min; a < b; ++a) {
      if (std::gcd(a, b) == 1) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

std::string describe(const Representation& r) {
  std::ostringstream os;
  os << "(delta=" << r.delta << ", x=" << r.x << ", y=" << r.y << ")";
  return os.str();
}

std::string pair_label(const Integer& a, const Integer& b) {
  return "(" + to_string(a) + ", " + to_string(b) + ")";
}

CaseResults verify_theorem1(long max, unsigned jobs, std::uint64_t& cases) {
  const auto pairs = coprime_pairs(1, max);
  cases = pairs.size();
  return run_cases(pairs.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    const auto pair = CoprimePair::make(pairs[i].first, pairs[i].second);
    const std::string label = "pair " + pair_label(pair.a(), pair.b());
    const Representation rep = solve_representation(pair);
    const Integer k = half_product(pair);
    if (rep.x * pair.a() + rep.y * pair.b() + rep.delta != k || rep.x < 0 ||
        rep.x > pair.b() - 1 || rep.y < 0) {
      return label + ": solver output " + describe(rep) + " is not a representation";
    }
    const OracleReport report = brute_force_representation(pair);
    if (report.total() != 1) {
      return label + ": oracle found " + std::to_string(report.total()) + " solutions";
    }
    const bool eq1 = !report.eq1_solutions.empty();
    const auto& found = eq1 ? report.eq1_solutions.front() : report.eq2_solutions.front();
    const Representation oracle{eq1 ? 0 : 1, found.first, found.second};
    if (oracle != rep) {
      return label + ": solver " + describe(rep) + " != oracle " + describe(oracle);
    }
    if (pair.b() >= 2) {
      const RepresentationWitness w = representation_witness(pair);
      if (floor_mod(pair.a() * w.r2 - (k - 1), pair.b()) != 0 || w.r1 + w.r2 != pair.b() - 1 ||
          w.s1 + w.s2 != -1 || w.r2 * pair.a() + w.s2 * pair.b() + 1 != k) {
        return label + ": residue identities fail";
      }
    }
    return std::nullopt;
  });
}

CaseResults verify_closed_forms(long max, unsigned jobs, std::uint64_t& cases) {
  std::vector<std::pair<PairKind, long>> items;
  for (PairKind kind : {PairKind::consecutive, PairKind::skip}) {
    for (long n = min_index(kind); n <= max; ++n) items.emplace_back(kind, n);
  }
  cases = items.size();
  return run_cases(items.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    const auto [kind, n] = items[i];
    const std::string label = std::string(to_string(kind)) + " n=" + std::to_string(n);
    const ClosedFormPrediction pred = closed_form(kind, n);
    if (pred.x_index % 3 == 0 || pred.y_index % 3 == 0) {
      return label + ": halving uses an even Fibonacci number";
    }
    const CoprimePair pair = fib_pair(kind, n);
    if (pred.x * pair.a() + pred.y * pair.b() + pred.delta != half_product(pair)) {
      return label + ": closed form " + describe(pred.representation()) + " fails substitution";
    }
    const Representation solved = solve_representation(pair);
    if (solved != pred.representation()) {
      return label + ": closed form " + describe(pred.representation()) + " != solver " +
             describe(solved);
    }
    const long j = n % 6;
    const bool homogeneous = kind == PairKind::consecutive ? j <= 2 : (j >= 1 && j <= 3);
    if ((pred.delta == 0) != homogeneous) return label + ": equation alternation broken";
    return std::nullopt;
  });
}

CaseResults verify_identities(long max, unsigned jobs, std::uint64_t& cases) {
  cases = max > 0 ? static_cast<std::uint64_t>(max) : 0;
  // Fill the cache once so workers only read.
  if (max > 0) fib(max + 3);
  return run_cases(cases, jobs, [](std::size_t i) -> std::optional<std::string> {
    const long n = static_cast<long>(i) + 1;
    const std::string label = "n=" + std::to_string(n);
    if (!check_cassini(n)) return label + ": Cassini identity fails";
    if (n >= 2 && !check_skip_identity(n)) return label + ": skip identity fails";
    if (!check_identity_d7(n)) return label + ": identity d7 fails";
    if (fib_is_even(n) != is_even(fib(n))) return label + ": parity rule fails";
    return std::nullopt;
  });
}

CaseResults verify_cyclotomic(long max, unsigned jobs, std::uint64_t& cases) {
  std::vector<std::uint64_t> primes;
  for (long v = 2; v <= max; ++v) {
    if (is_prime(static_cast<std::uint64_t>(v))) primes.push_back(static_cast<std::uint64_t>(v));
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::size_t j = 0; j < primes.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(primes[i], primes[j]);
  }
  cases = pairs.size();
  return run_cases(pairs.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    const auto [p, q] = pairs[i];
    const std::string label = "Phi_" + std::to_string(p) + "*" + std::to_string(q);
    const MidtermReport r = midterm_report(PrimePair::make(p, q));
    const IntPolynomial& phi = r.polynomial;
    if (phi.degree() != static_cast<long>((p - 1) * (q - 1))) return label + ": wrong degree";
    if (phi.coeff(0) != 1) return label + ": constant coefficient is not 1";
    if (!phi.is_palindromic()) return label + ": not palindromic";
    if (phi.evaluate(1) != 1) return label + ": value at 1 is not 1";
    if (!is_odd(r.mid_coeff)) return label + ": even midterm coefficient";
    const Integer P(static_cast<unsigned long>(p)), Q(static_cast<unsigned long>(q));
    const Representation& d = r.decomposition;
    if (d.x < 0 || d.x > P - 1 || d.y < 0 ||
        d.x * Q + d.y * P + d.delta != Integer(static_cast<unsigned long>(r.mid_degree))) {
      return label + ": bad decomposition " + describe(d);
    }
    if (d != solve_representation(CoprimePair::make(Q, P))) {
      return label + ": decomposition differs from solver";
    }
    const IntPolynomial lhs = poly_mul(
        phi, poly_mul(IntPolynomial::x_pow_minus_one(p), IntPolynomial::x_pow_minus_one(q)));
    const IntPolynomial rhs =
        poly_mul(IntPolynomial::x_pow_minus_one(p * q), IntPolynomial{-1, 1});
    if (lhs != rhs) return label + ": reconstruction fails";
    return std::nullopt;
  });
}

CaseResults verify_representability(long max, unsigned jobs, std::uint64_t& cases) {
  const auto pairs = coprime_pairs(2, max);
  cases = pairs.size();
  return run_cases(pairs.size(), jobs, [&](std::size_t i) -> std::optional<std::string> {
    const auto [a, b] = pairs[i];
    const Integer A(a), B(b);
    const std::string label = "pair " + pair_label(A, B);
    const long lo = (a - 1) * (b - 1);
    const long hi = lo + 2 * a * b;
    for (long n = lo; n <= hi; ++n) {
      const auto w = has_nonnegative_solution(A, B, Integer(n));
      if (!w) return label + ": " + std::to_string(n) + " reported not representable";
      if (w->first < 0 || w->second < 0 || w->first * A + w->second * B != n) {
        return label + ": bad witness for " + std::to_string(n);
      }
    }
    const long frobenius = lo - 1;
    if (has_nonnegative_solution(A, B, Integer(frobenius))) {
      return label + ": Frobenius number " + std::to_string(frobenius) + " reported representable";
    }
    for (long x = 0; x * a <= frobenius; ++x) {
      if ((frobenius - x * a) % b == 0) {
        return label + ": search represents the Frobenius number " + std::to_string(frobenius);
      }
    }
    return std::nullopt;
  });
}

} // namespace

VerifySummary verify(Scope scope, long max, unsigned jobs) {
  VerifySummary s;
  s.scope = scope;
  s.max = max;
  CaseResults r;
  switch (scope) {
    case Scope::theorem1: r = verify_theorem1(max, jobs, s.cases); break;
    case Scope::closed_forms: r = verify_closed_forms(max, jobs, s.cases); break;
    case Scope::identities: r = verify_identities(max, jobs, s.cases); break;
    case Scope::cyclotomic: r = verify_cyclotomic(max, jobs, s.cases); break;
    case Scope::representability: r = verify_representability(max, jobs, s.cases); break;
  }
  s.passed = r.passed;
  s.failed = r.failed;
  s.first_counterexample = std::move(r.first_failure);
  return s;
}

} // namespace halfrep

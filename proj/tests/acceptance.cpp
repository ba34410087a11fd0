// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "halfrep/cli.hpp"
#include "halfrep/cyclotomic.hpp"
#include "halfrep/fibonacci.hpp"
#include "halfrep/representation.hpp"

using namespace halfrep;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double budget_ms,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && ms > budget_ms) {
    std::ostringstream os;
    os << "runtime " << ms << " ms exceeds budget " << budget_ms << " ms";
    o.fail(os.str());
  }
  std::printf("[%s] %s %s (%.3f ms, budget %.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, ms,
              budget_ms, o.ok ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::string cli_out(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

const char* kConsecutiveTable =
    "n,f_left,f_right,equation,x,y\n"
    "3,2,3,2,0,0\n4,3,5,2,1,0\n5,5,8,2,1,1\n"
    "6,8,13,1,2,2\n7,13,21,1,6,2\n8,21,34,1,6,6\n"
    "9,34,55,2,10,10\n10,55,89,2,27,10\n11,89,144,2,27,27\n"
    "12,144,233,1,44,44\n13,233,377,1,116,44\n14,377,610,1,116,116\n";

const char* kSkipTable =
    "n,f_left,f_right,equation,x,y\n"
    "1,1,2,1,0,0\n2,1,3,1,0,0\n3,2,5,1,1,0\n"
    "4,3,8,2,2,0\n5,5,13,2,2,1\n6,8,21,2,6,1\n"
    "7,13,34,1,10,2\n8,21,55,1,10,6\n9,34,89,1,27,6\n"
    "10,55,144,2,44,10\n11,89,233,2,44,27\n12,144,377,2,116,27\n";

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 2; v <= n; ++v) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

} // namespace

int main() {
  criterion("AC1", "worked examples (3,5) and (11,31)", 1.0, [](Outcome& o) {
    if (solve_representation(CoprimePair::make(3, 5)) != Representation{1, 1, 0}) {
      o.fail("solve(3,5) != (delta=1, x=1, y=0)");
    }
    if (solve_representation(CoprimePair::make(11, 31)) != Representation{0, 8, 2}) {
      o.fail("solve(11,31) != (delta=0, x=8, y=2)");
    }
  });

  criterion("AC2", "fib-table reproduces both 12-row tables", 10.0, [](Outcome& o) {
    int code = 0;
    if (cli_out({"fib-table", "--kind", "consecutive", "--from", "3", "--to", "14", "--format",
                 "csv"},
                code) != kConsecutiveTable ||
        code != 0) {
      o.fail("consecutive table differs");
    }
    if (cli_out({"fib-table", "--kind", "skip", "--from", "1", "--to", "12", "--format", "csv"},
                code) != kSkipTable ||
        code != 0) {
      o.fail("skip table differs");
    }
  });

  criterion("AC3", "exactly one solution for every coprime 1 <= a < b <= 200", 60'000.0,
            [](Outcome& o) {
              std::uint64_t pairs = 0;
              for (long b = 2; b <= 200; ++b) {
                for (long a = 1; a < b; ++a) {
                  if (std::gcd(a, b) != 1) continue;
                  ++pairs;
                  const auto p = CoprimePair::make(a, b);
                  const auto report = brute_force_representation(p);
                  const auto rep = solve_representation(p);
                  const std::string label =
                      "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                  if (report.total() != 1) {
                    o.fail(label + ": oracle found " + std::to_string(report.total()));
                    continue;
                  }
                  const bool eq1 = !report.eq1_solutions.empty();
                  const auto& s = eq1 ? report.eq1_solutions[0] : report.eq2_solutions[0];
                  if (rep != Representation{eq1 ? 0 : 1, s.first, s.second}) {
                    o.fail(label + ": solver disagrees with oracle");
                  }
                }
              }
              if (pairs != 12231) o.fail("unexpected pair count " + std::to_string(pairs));
            });

  criterion("AC4", "closed forms agree with the solver, n <= 120", 1000.0, [](Outcome& o) {
    for (PairKind kind : {PairKind::consecutive, PairKind::skip}) {
      for (long n = min_index(kind); n <= 120; ++n) {
        const auto pred = closed_form(kind, n);
        const auto pair = fib_pair(kind, n);
        const std::string label = std::string(to_string(kind)) + " n=" + std::to_string(n);
        if (pred.x * pair.a() + pred.y * pair.b() + pred.delta != half_product(pair)) {
          o.fail(label + ": substitution fails");
        }
        if (pred.representation() != solve_representation(pair)) {
          o.fail(label + ": differs from solver");
        }
      }
    }
    if (half_product(fib_pair(PairKind::skip, 120)) < Integer("1000000000000000000000000")) {
      o.fail("expected values beyond 10^24 at n = 120");
    }
  });

  criterion("AC5", "Cassini, skip, d7 identities and parity for n <= 500", 1000.0,
            [](Outcome& o) {
              for (long n = 1; n <= 500; ++n) {
                if (!check_cassini(n)) o.fail("Cassini n=" + std::to_string(n));
                if (n >= 2 && !check_skip_identity(n)) o.fail("skip n=" + std::to_string(n));
                if (!check_identity_d7(n)) o.fail("d7 n=" + std::to_string(n));
                if (fib_is_even(n) != is_even(fib(n))) o.fail("parity n=" + std::to_string(n));
              }
            });

  criterion("AC6", "Phi_pq structure and midterm decomposition, p < q <= 60", 30'000.0,
            [](Outcome& o) {
              const auto primes = primes_up_to(60);
              for (std::size_t j = 0; j < primes.size(); ++j) {
                for (std::size_t i = 0; i < j; ++i) {
                  const auto p = primes[i], q = primes[j];
                  const std::string label = std::to_string(p) + "*" + std::to_string(q);
                  const auto r = midterm_report(PrimePair::make(p, q));
                  const auto& phi = r.polynomial;
                  const Integer P(static_cast<unsigned long>(p));
                  const Integer Q(static_cast<unsigned long>(q));
                  if (phi.degree() != static_cast<long>((p - 1) * (q - 1))) o.fail(label + " degree");
                  if (!phi.is_palindromic()) o.fail(label + " palindrome");
                  if (phi.evaluate(1) != 1) o.fail(label + " value at 1");
                  if (!is_odd(phi.coeff((p - 1) * (q - 1) / 2))) o.fail(label + " even midterm");
                  const auto& d = r.decomposition;
                  if (d.x < 0 || d.x > P - 1) o.fail(label + " alpha out of range");
                  if (d != solve_representation(CoprimePair::make(Q, P))) {
                    o.fail(label + " decomposition differs from solver");
                  }
                }
              }
            });

  criterion("AC7", "representability window and Frobenius number, 2 <= a < b <= 60", 30'000.0,
            [](Outcome& o) {
              for (long b = 3; b <= 60; ++b) {
                for (long a = 2; a < b; ++a) {
                  if (std::gcd(a, b) != 1) continue;
                  const long lo = (a - 1) * (b - 1);
                  const std::string label =
                      "(" + std::to_string(a) + "," + std::to_string(b) + ")";
                  for (long n = lo; n <= lo + 2 * a * b; ++n) {
                    if (!has_nonnegative_solution(a, b, n)) {
                      o.fail(label + " n=" + std::to_string(n) + " not representable");
                    }
                  }
                  if (has_nonnegative_solution(a, b, lo - 1)) {
                    o.fail(label + " Frobenius number representable");
                  }
                }
              }
            });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

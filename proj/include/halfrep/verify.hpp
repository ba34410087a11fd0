#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace halfrep {

enum class Scope { theorem1, closed_forms, identities, cyclotomic, representability };

std::string_view to_string(Scope scope);
/// Accepts the CLI spellings ("theorem1", "closed-forms", ...).
std::optional<Scope> parse_scope(std::string_view text);
/// Scopes run by `verify --scope all`, in output order.
const std::vector<Scope>& all_scopes();

/// Sweep bound used when the caller does not pass one.
long default_max(Scope scope);

struct VerifySummary {
  Scope scope = Scope::theorem1;
  long max = 0;
  std::uint64_t cases = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  /// Failure with the lowest case index, independent of the job count.
  std::optional<std::string> first_counterexample;

  bool ok() const { return failed == 0; }
  /// Label for `cases` in reports: "pairs" or "cases".
  std::string_view unit() const;
};

/// Checks case(i) for every i in [0, count) on `jobs` workers. A check
/// returns nullopt on success or a description of the counterexample.
/// Results are merged by index, so the outcome does not depend on `jobs`.
struct CaseResults {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::optional<std::string> first_failure;
};
CaseResults run_cases(std::size_t count, unsigned jobs,
                      const std::function<std::optional<std::string>(std::size_t)>& check);

/// Runs one invariant suite:
///   theorem1          coprime 1 <= a < b <= max: oracle finds exactly one
///                     solution, equal to the constructive solver
///   closed-forms      consecutive 3 <= n <= max, skip 1 <= n <= max
///   identities        Cassini, skip identity, d7 and parity for n <= max
///   cyclotomic        prime pairs p < q <= max
///   representability  coprime 2 <= a < b <= max: threshold window and the
///                     Frobenius number
VerifySummary verify(Scope scope, long max, unsigned jobs = 1);

} // namespace halfrep

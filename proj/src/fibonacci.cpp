#include "halfrep/fibonacci.hpp"

#include <mutex>
#include <string>

#include "halfrep/errors.hpp"

namespace halfrep {

FibCache::FibCache() : values_{Integer(0), Integer(1)} {}

void FibCache::grow_to(std::size_t n) const {
  std::unique_lock lock(mutex_);
  values_.reserve(n + 1);
  while (values_.size() <= n) {
    const std::size_t m = values_.size();
    values_.push_back(values_[m - 1] + values_[m - 2]);
  }
}

Integer FibCache::get(long n) const {
  if (n < -1) throw DomainError("Fibonacci index " + std::to_string(n) + " is below -1");
  if (n == -1) return 1;
  const auto idx = static_cast<std::size_t>(n);
  {
    std::shared_lock lock(mutex_);
    if (idx < values_.size()) return values_[idx];
  }
  grow_to(idx);
  std::shared_lock lock(mutex_);
  return values_[idx];
}

std::size_t FibCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

FibCache& default_fib_cache() {
  static FibCache cache;
  return cache;
}

Integer fib(long n) { return default_fib_cache().get(n); }

bool fib_is_even(long n) {
  if (n < 1) throw DomainError("fib_is_even: index must be positive");
  return n % 3 == 0;
}

namespace {

Integer sign_pow(long n) { return n % 2 == 0 ? 1 : -1; }

Integer halved(long m) { return div_exact(fib(m) - 1, 2); }

void require_index(long n, long min, const char* what) {
  if (n < min) {
    throw DomainError(std::string(what) + ": index " + std::to_string(n) + " is below " +
                      std::to_string(min));
  }
}

} // namespace

bool check_cassini(long n) {
  require_index(n, 1, "check_cassini");
  const Integer f = fib(n);
  return fib(n - 1) * fib(n + 1) - f * f == sign_pow(n);
}

bool check_skip_identity(long n) {
  require_index(n, 2, "check_skip_identity");
  const Integer f = fib(n);
  return f * f - fib(n - 2) * fib(n + 2) == sign_pow(n);
}

bool check_identity_d7(long n) {
  require_index(n, 1, "check_identity_d7");
  return fib(n) * fib(n + 3) == fib(n + 1) * fib(n + 2) + sign_pow(n - 1);
}

std::string_view to_string(PairKind kind) {
  return kind == PairKind::consecutive ? "consecutive" : "skip";
}

PairKind parse_pair_kind(std::string_view text) {
  if (text == "consecutive") return PairKind::consecutive;
  if (text == "skip") return PairKind::skip;
  throw DomainError("unknown pair kind '" + std::string(text) + "'");
}

CoprimePair fib_pair(PairKind kind, long n) {
  require_index(n, 1, "fib_pair");
  return CoprimePair::make(fib(n), fib(n + right_offset(kind)));
}

namespace {

ClosedFormPrediction make_prediction(long n, PairKind kind, int delta, long x_index,
                                     long y_index) {
  return {n, kind, delta, halved(x_index), halved(y_index), x_index, y_index};
}

} // namespace

// Write n = 6k + j. Each residue class j has its own pair of source
// indices; the equation used flips every three steps.
ClosedFormPrediction closed_form_consecutive(long n) {
  require_index(n, 3, "closed_form_consecutive");
  const long k6 = n - n % 6;
  constexpr auto kind = PairKind::consecutive;
  switch (n % 6) {
    case 0: return make_prediction(n, kind, 0, k6 - 1, k6 - 1);
    case 1: return make_prediction(n, kind, 0, k6 + 1, k6 - 1);
    case 2: return make_prediction(n, kind, 0, k6 + 1, k6 + 1);
    case 3: return make_prediction(n, kind, 1, k6 + 2, k6 + 2);
    case 4: return make_prediction(n, kind, 1, k6 + 4, k6 + 2);
    default: return make_prediction(n, kind, 1, k6 + 4, k6 + 4);
  }
}

// n = 1 reaches F(-1) through the j = 1 row.
ClosedFormPrediction closed_form_skip(long n) {
  require_index(n, 1, "closed_form_skip");
  const long k6 = n - n % 6;
  constexpr auto kind = PairKind::skip;
  switch (n % 6) {
    case 1: return make_prediction(n, kind, 0, k6 + 2, k6 - 1);
    case 2: return make_prediction(n, kind, 0, k6 + 2, k6 + 1);
    case 3: return make_prediction(n, kind, 0, k6 + 4, k6 + 1);
    case 4: return make_prediction(n, kind, 1, k6 + 5, k6 + 2);
    case 5: return make_prediction(n, kind, 1, k6 + 5, k6 + 4);
    default: return make_prediction(n, kind, 1, k6 + 1, k6 - 2);
  }
}

ClosedFormPrediction closed_form(PairKind kind, long n) {
  return kind == PairKind::consecutive ? closed_form_consecutive(n) : closed_form_skip(n);
}

std::vector<TableRow> generate_table(PairKind kind, long n_from, long n_to) {
  std::vector<TableRow> rows;
  require_index(n_from, min_index(kind), "generate_table");
  if (n_from > n_to) return rows;
  rows.reserve(static_cast<std::size_t>(n_to - n_from + 1));
  for (long n = n_from; n <= n_to; ++n) {
    const CoprimePair pair = fib_pair(kind, n);
    Representation rep = solve_representation(pair);
    rows.push_back({n, pair.a(), pair.b(), rep.delta + 1, std::move(rep.x), std::move(rep.y)});
  }
  return rows;
}

} // namespace halfrep

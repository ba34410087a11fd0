#pragma once

#include <shared_mutex>
#include <string_view>
#include <vector>

#include "halfrep/integer.hpp"
#include "halfrep/representation.hpp"

namespace halfrep {

/// Memoized Fibonacci numbers with F(0)=0, F(1)=F(2)=1 and the backward
/// extension F(-1)=1. Grows on demand; safe for concurrent use.
class FibCache {
public:
  FibCache();

  /// F(n) for n >= -1; DomainError below that.
  Integer get(long n) const;

  /// Number of indices >= 0 currently memoized.
  std::size_t size() const;

private:
  void grow_to(std::size_t n) const;

  mutable std::shared_mutex mutex_;
  mutable std::vector<Integer> values_;
};

/// Process-wide cache used by the free functions below.
FibCache& default_fib_cache();

Integer fib(long n);

/// Parity predicted from the index alone: F(n) is even iff 3 | n. n >= 1.
bool fib_is_even(long n);

/// F(n-1)F(n+1) - F(n)^2 == (-1)^n, n >= 1.
bool check_cassini(long n);

/// F(n)^2 - F(n-2)F(n+2) == (-1)^n, n >= 2.
bool check_skip_identity(long n);

/// F(n)F(n+3) == F(n+1)F(n+2) + (-1)^(n-1), n >= 1.
bool check_identity_d7(long n);

enum class PairKind { consecutive, skip };

std::string_view to_string(PairKind kind);
PairKind parse_pair_kind(std::string_view text);

/// Offset of the right-hand Fibonacci index: 1 for (F(n), F(n+1)), 2 for
/// (F(n), F(n+2)).
inline long right_offset(PairKind kind) { return kind == PairKind::consecutive ? 1 : 2; }

/// Validated pair (F(n), F(n+1)) or (F(n), F(n+2)).
CoprimePair fib_pair(PairKind kind, long n);

/// Closed-form representation for a Fibonacci pair. Both coefficients are
/// (F(m)-1)/2 for some index m not divisible by 3; x_index and y_index
/// record those m.
struct ClosedFormPrediction {
  long n = 0;
  PairKind kind = PairKind::consecutive;
  int delta = 0;
  Integer x;
  Integer y;
  long x_index = 0;
  long y_index = 0;

  Representation representation() const { return {delta, x, y}; }
};

/// (F(n), F(n+1)), n >= 3.
ClosedFormPrediction closed_form_consecutive(long n);

/// (F(n), F(n+2)), n >= 1.
ClosedFormPrediction closed_form_skip(long n);

ClosedFormPrediction closed_form(PairKind kind, long n);

/// Smallest n accepted by closed_form for the given kind.
inline long min_index(PairKind kind) { return kind == PairKind::consecutive ? 3 : 1; }

struct TableRow {
  long n = 0;
  Integer f_left;
  Integer f_right;
  int equation = 1;  // 1: x*a + y*b = k, 2: x*a + y*b + 1 = k
  Integer x;
  Integer y;
};

/// One solver-backed row per n in [n_from, n_to]; empty when n_from > n_to.
/// DomainError when n_from is below min_index(kind).
std::vector<TableRow> generate_table(PairKind kind, long n_from, long n_to);

} // namespace halfrep

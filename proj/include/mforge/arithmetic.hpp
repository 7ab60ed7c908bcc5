#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mforge/parallel.hpp"
#include "mforge/sieve.hpp"

namespace mforge {

using WideInt = __int128;

/// Per-n arithmetic data over a contiguous range. Element i describes lo + i.
struct ArithmeticProfile {
  Int lo = 1;
  Int hi = 1;
  std::vector<std::uint8_t> omega;
  std::vector<std::uint8_t> big_omega;
  std::vector<std::int8_t> mobius;
  std::vector<std::int8_t> liouville;
  std::vector<std::int64_t> c_omega;
  std::vector<std::int64_t> g;

  std::size_t size() const noexcept { return omega.size(); }
  bool covers(Int n) const noexcept { return n >= lo && n < hi; }
  std::size_t index(Int n) const;
};

/// Values determined by the exponent multiset of n: C_Omega(n) and |g(n)|.
struct ShapeValues {
  std::int64_t c_omega;
  std::int64_t abs_g;
};

/// Memoizes ShapeValues by (omega, shape). Not thread-safe; use one per worker.
class ShapeCache {
 public:
  ShapeValues lookup(int omega, std::uint64_t shape);

 private:
  std::vector<ShapeValues> squarefree_;
  std::unordered_map<std::uint64_t, ShapeValues> general_;
};

/// Multinomial (a1 + ... + ar)! / (a1! ... ar!) built from incremental
/// binomials. Throws OverflowError past the 128-bit range.
WideInt multinomial(std::span<const int> exponents);

WideInt c_omega(const Factorization& fact);

/// |g(n)| for any n with the given exponents: the sum over subsets S of the
/// exponent positions of the multinomial of the exponents lowered by one on S.
WideInt abs_g_from_exponents(std::span<const int> exponents);

/// (-1)^r * sum_{m=0..r} C(r, m) m!, the value of g on squarefree n with r prime factors.
std::int64_t g_squarefree_closed_form(int r);

/// Bulk omega, Omega, mu, lambda, C_Omega and g over a range. g is evaluated
/// pointwise from the exponent pattern, so any range may be profiled.
ArithmeticProfile profile_range(Int lo, Int hi, const WorkerPool& pool = WorkerPool{},
                                const SieveConfig& config = {});

/// g(1..N) by the inversion recursion of (omega + 1). omega_by_n[n] must hold
/// omega(n) for 1 <= n <= N (index 0 ignored). Result is indexed by n.
std::vector<std::int64_t> g_table(std::span<const std::uint8_t> omega_by_n);

/// Convenience: sieve omega on [1, N] and run the recursion.
std::vector<std::int64_t> g_table(Int N, const WorkerPool& pool = WorkerPool{});

/// Writes `n,value` rows for value[i] at n = first + i.
void write_sequence_csv(std::ostream& out, Int first, std::span<const std::int64_t> values);

struct BfileMismatch {
  Int index;
  std::int64_t expected;  // value in the b-file
  std::optional<std::int64_t> actual;  // empty when the index is not computable
};

struct BfileComparison {
  std::size_t rows_checked = 0;
  std::optional<BfileMismatch> first_mismatch;
  bool matches() const noexcept { return !first_mismatch; }
};

/// Compares an OEIS b-file ("index value" per line, '#' comments ignored)
/// against `actual`, stopping at the first mismatch.
BfileComparison compare_bfile(std::istream& in,
                              const std::function<std::optional<std::int64_t>(Int)>& actual);

std::string to_string(WideInt v);

}  // namespace mforge

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mforge/arithmetic.hpp"
#include "mforge/parallel.hpp"
#include "mforge/sieve.hpp"

namespace mforge {

/// Rule for choosing the x values written to a checkpoint file.
struct CheckpointPolicy {
  enum class Kind { all, geometric, explicit_list };

  Kind kind = Kind::geometric;
  double ratio = 1.25;
  bool include_powers_of_ten = true;
  std::vector<Int> points;

  static CheckpointPolicy all();
  static CheckpointPolicy geometric(double ratio, bool powers_of_ten = true);
  static CheckpointPolicy explicit_list(std::vector<Int> points);
  /// "all", "geometric:<ratio>" or "list:<x1>,<x2>,...".
  static CheckpointPolicy parse(const std::string& text);

  /// Strictly increasing checkpoints in [1, N], always ending at N.
  std::vector<Int> generate(Int N) const;
};

struct SeriesPoint {
  Int x;
  std::int64_t M;
  std::int64_t G;
  std::int64_t Qsq;
  std::int64_t pi;
  bool checkpoint;
};

/// Exact prefix sums at every checkpoint plus every quotient point floor(N/k).
class SummatorySeries {
 public:
  SummatorySeries(Int limit, std::vector<SeriesPoint> points);

  Int limit() const noexcept { return limit_; }
  std::span<const SeriesPoint> points() const noexcept { return points_; }
  std::vector<SeriesPoint> checkpoints() const;

  bool has(Int x) const noexcept;
  /// Throws RangeError when x was not recorded.
  const SeriesPoint& at(Int x) const;

 private:
  Int limit_;
  std::vector<SeriesPoint> points_;
};

/// Sorted distinct values floor(N/k), k = 1..N.
std::vector<Int> quotient_points(Int N);

/// One streaming pass over [1, N]; per-segment partial sums are merged in
/// segment order, so the result is independent of the worker count.
SummatorySeries build_series(Int N, const CheckpointPolicy& policy,
                             const WorkerPool& pool = WorkerPool{},
                             const SieveConfig& config = {});

/// G(x) + sum_{k <= x} g(k) pi(floor(x/k)), directly over k. g is indexed by n.
std::int64_t mertens_via_g_pi(Int x, std::span<const std::int64_t> g,
                              const PrimeCountTable& pi_table);

/// Same right-hand side, grouped over blocks of equal floor(x/k).
std::int64_t mertens_via_g_pi(Int x, const SummatorySeries& series);

/// G(x) + sum_{p <= x} G(floor(x/p)), grouped over blocks of equal quotient.
std::int64_t mertens_via_G_over_primes(Int x, const SummatorySeries& series);

/// sum_{j <= x} lambda(n j) mu^2(j). Requires a profile covering [1, max(n, x)].
std::int64_t q_hat(Int n, Int x, const ArithmeticProfile& profile);

/// sum_{n <= x} lambda(n) C_Omega(n) sum_{j <= x/n} lambda(j) mu^2(j).
std::int64_t g_via_double_sum(Int x, const ArithmeticProfile& profile);

/// Checkpoint CSV `x,M,G,Qsq,pi` (checkpoint rows only).
void write_series_csv(std::ostream& out, const SummatorySeries& series);
void write_series_json(std::ostream& out, const SummatorySeries& series);
/// Parses checkpoint CSV; every row becomes a checkpoint.
SummatorySeries read_series_csv(std::istream& in);

}  // namespace mforge

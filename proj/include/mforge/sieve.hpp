#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <vector>

namespace mforge {

using Int = std::int64_t;

/// Default maximum width of one sieving segment (entries).
inline constexpr std::size_t kDefaultSegmentCapacity = std::size_t{1} << 22;

/// Width used by bulk streaming passes unless configured otherwise.
inline constexpr std::size_t kDefaultStreamWidth = std::size_t{1} << 20;

struct SieveConfig {
  std::size_t segment_capacity = kDefaultSegmentCapacity;
  std::size_t segment_width = kDefaultStreamWidth;

  /// Throws ConfigError unless 0 < segment_width <= segment_capacity.
  void validate() const;
};

/// Half-open integer interval [lo, hi) with lo >= 1.
class Segment {
 public:
  /// Throws ConfigError if lo < 1, hi <= lo or the width exceeds capacity.
  Segment(Int lo, Int hi, std::size_t capacity = kDefaultSegmentCapacity);

  Int lo() const noexcept { return lo_; }
  Int hi() const noexcept { return hi_; }
  std::size_t width() const noexcept { return static_cast<std::size_t>(hi_ - lo_); }
  bool contains(Int n) const noexcept { return n >= lo_ && n < hi_; }

  /// Splits [lo, hi) into consecutive segments of at most `width` entries.
  static std::vector<Segment> partition(Int lo, Int hi, std::size_t width);

 private:
  Int lo_;
  Int hi_;
};

/// Ascending list of every prime <= limit.
struct SeedPrimes {
  Int limit = 1;
  std::vector<Int> primes;

  /// True when every prime needed to sieve numbers below `hi` is present.
  bool covers_segment_below(Int hi) const noexcept;
};

std::vector<Int> primes_up_to(Int limit);
SeedPrimes seed_primes_for(Int hi);

/// Floor of the square root, exact for all non-negative 64-bit inputs.
Int isqrt(Int n) noexcept;

struct PrimePower {
  Int p;
  int alpha;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  Int n = 1;
  std::vector<PrimePower> factors;

  int omega() const noexcept { return static_cast<int>(factors.size()); }
  int big_omega() const noexcept;
  bool squarefree() const noexcept;
};

/// Smallest prime factor of every n in a segment. spf(1) is the sentinel 1.
class FactorTable {
 public:
  const Segment& segment() const noexcept { return segment_; }
  bool covers(Int n) const noexcept { return segment_.contains(n); }
  /// Throws RangeError outside the segment.
  Int spf(Int n) const;
  const SeedPrimes& seeds() const noexcept { return *seeds_; }

 private:
  friend FactorTable build_factor_table(const Segment&, std::shared_ptr<const SeedPrimes>);
  FactorTable(Segment segment, std::vector<Int> spf, std::shared_ptr<const SeedPrimes> seeds)
      : segment_(segment), spf_(std::move(spf)), seeds_(std::move(seeds)) {}

  Segment segment_;
  std::vector<Int> spf_;
  std::shared_ptr<const SeedPrimes> seeds_;
};

/// Throws PreconditionError when the seeds do not reach sqrt(hi - 1).
FactorTable build_factor_table(const Segment& segment,
                               std::shared_ptr<const SeedPrimes> seeds);

/// Peels n by repeated spf lookup. Cofactors that leave the segment are
/// resolved through `aux` when it covers them, otherwise by trial division
/// against the table's seed primes.
Factorization factorize(Int n, const FactorTable& table, const FactorTable* aux = nullptr);

/// pi(x) for 1 <= x <= limit, answered by a rank query over a prime bitset.
class PrimeCountTable {
 public:
  explicit PrimeCountTable(Int limit);

  Int limit() const noexcept { return limit_; }
  Int pi(Int x) const;
  bool is_prime(Int n) const;

 private:
  Int limit_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> block_rank_;
};

inline Int prime_pi(Int x, const PrimeCountTable& table) { return table.pi(x); }

/// Exponent pattern of every n in a segment, built by sieving prime powers.
/// `shape` encodes the multiset of exponents >= 2 as the product of
/// exponent_prime(alpha) over those exponents; squarefree n have shape 1.
struct SignatureTable {
  Int lo = 1;
  std::vector<std::uint8_t> omega;
  std::vector<std::uint8_t> big_omega;
  std::vector<std::uint64_t> shape;

  std::size_t size() const noexcept { return omega.size(); }
};

SignatureTable build_signature_table(const Segment& segment, const SeedPrimes& seeds);

/// alpha-th prime (exponent_prime(2) = 3), used to encode exponent multisets.
std::uint64_t exponent_prime(int alpha);

/// Exponent list (descending) of any n with the given omega and shape.
std::vector<int> decode_signature(int omega, std::uint64_t shape);

/// Seed-prime cache: magic "MFPRIMES1", then limit, count and the primes,
/// all as little-endian 64-bit integers.
void write_prime_cache(const std::filesystem::path& path, const SeedPrimes& seeds);
SeedPrimes read_prime_cache(const std::filesystem::path& path);

}  // namespace mforge

#include "mforge/sieve.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <fstream>
#include <string>

#include "mforge/errors.hpp"

namespace mforge {

namespace {

constexpr char kCacheMagic[] = "MFPRIMES1";
constexpr std::size_t kCacheMagicSize = sizeof(kCacheMagic) - 1;

constexpr std::array<std::uint64_t, 64> kExponentPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
    59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
    227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes;
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xffU);
  out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw std::runtime_error("prime cache truncated");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{bytes[i]} << (8 * i);
  return v;
}

}  // namespace

void SieveConfig::validate() const {
  if (segment_width == 0 || segment_width > segment_capacity) {
    throw ConfigError("segment width " + std::to_string(segment_width) +
                      " must be in [1, " + std::to_string(segment_capacity) + "]");
  }
}

Segment::Segment(Int lo, Int hi, std::size_t capacity) : lo_(lo), hi_(hi) {
  if (lo < 1) throw ConfigError("segment lower bound must be >= 1");
  if (hi <= lo) throw ConfigError("segment must be non-empty (hi > lo)");
  if (static_cast<std::uint64_t>(hi - lo) > capacity) {
    throw ConfigError("segment width " + std::to_string(hi - lo) +
                      " exceeds capacity " + std::to_string(capacity));
  }
}

std::vector<Segment> Segment::partition(Int lo, Int hi, std::size_t width) {
  if (width == 0) throw ConfigError("segment width must be positive");
  std::vector<Segment> out;
  for (Int a = lo; a < hi;) {
    const Int b = (hi - a > static_cast<Int>(width)) ? a + static_cast<Int>(width) : hi;
    out.emplace_back(a, b, width);
    a = b;
  }
  return out;
}

Int isqrt(Int n) noexcept {
  if (n <= 0) return 0;
  auto r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool SeedPrimes::covers_segment_below(Int hi) const noexcept {
  return hi <= 2 || limit >= isqrt(hi - 1);
}

std::vector<Int> primes_up_to(Int limit) {
  std::vector<Int> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  // composite[i] marks 2i + 1.
  const auto half = static_cast<std::size_t>((limit - 1) / 2 + 1);
  std::vector<bool> composite(half, false);
  for (std::size_t i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const auto p = static_cast<Int>(2 * i + 1);
    primes.push_back(p);
    if (p > limit / p) continue;
    for (auto j = static_cast<std::size_t>(p * p / 2); j < half; j += static_cast<std::size_t>(p)) {
      composite[j] = true;
    }
  }
  return primes;
}

SeedPrimes seed_primes_for(Int hi) {
  SeedPrimes seeds;
  seeds.limit = std::max<Int>(1, isqrt(std::max<Int>(hi - 1, 1)));
  seeds.primes = primes_up_to(seeds.limit);
  return seeds;
}

int Factorization::big_omega() const noexcept {
  int total = 0;
  for (const auto& f : factors) total += f.alpha;
  return total;
}

bool Factorization::squarefree() const noexcept {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& f) { return f.alpha == 1; });
}

Int FactorTable::spf(Int n) const {
  if (!covers(n)) {
    throw RangeError("n=" + std::to_string(n) + " outside factor table [" +
                     std::to_string(segment_.lo()) + ", " + std::to_string(segment_.hi()) + ")");
  }
  return spf_[static_cast<std::size_t>(n - segment_.lo())];
}

FactorTable build_factor_table(const Segment& segment,
                               std::shared_ptr<const SeedPrimes> seeds) {
  if (!seeds) throw PreconditionError("seed primes are required");
  if (!seeds->covers_segment_below(segment.hi())) {
    throw PreconditionError("seed primes reach " + std::to_string(seeds->limit) +
                            " but segment needs primes up to " +
                            std::to_string(isqrt(segment.hi() - 1)));
  }
  const Int lo = segment.lo();
  const Int hi = segment.hi();
  std::vector<Int> spf(segment.width(), 0);
  for (const Int p : seeds->primes) {
    if (p > (hi - 1) / p) break;
    Int start = std::max(p * p, ((lo + p - 1) / p) * p);
    for (Int m = start; m < hi; m += p) {
      auto& slot = spf[static_cast<std::size_t>(m - lo)];
      if (slot == 0) slot = p;
    }
  }
  for (std::size_t i = 0; i < spf.size(); ++i) {
    if (spf[i] == 0) spf[i] = lo + static_cast<Int>(i);  // prime, or the sentinel for n = 1
  }
  return FactorTable(segment, std::move(spf), std::move(seeds));
}

Factorization factorize(Int n, const FactorTable& table, const FactorTable* aux) {
  if (n < 1) throw RangeError("factorize requires n >= 1");
  if (!table.covers(n)) {
    throw RangeError("n=" + std::to_string(n) + " outside factor table range");
  }
  Factorization out;
  out.n = n;
  auto push = [&out](Int p) {
    if (!out.factors.empty() && out.factors.back().p == p) {
      ++out.factors.back().alpha;
    } else {
      out.factors.push_back({p, 1});
    }
  };

  Int m = n;
  while (m > 1) {
    Int p = 0;
    if (aux != nullptr && aux->covers(m)) {
      p = aux->spf(m);
    } else if (table.covers(m)) {
      p = table.spf(m);
    } else {
      break;
    }
    push(p);
    m /= p;
  }
  if (m == 1) return out;

  // The cofactor left every table; its prime factors all exceed the last peeled prime.
  const auto& primes = table.seeds().primes;
  const Int floor_p = out.factors.empty() ? 1 : out.factors.back().p;
  auto it = std::upper_bound(primes.begin(), primes.end(), floor_p - 1);
  for (; it != primes.end() && *it <= m / *it; ++it) {
    while (m % *it == 0) {
      push(*it);
      m /= *it;
    }
  }
  if (m > 1) {
    if (it == primes.end() && !primes.empty() && primes.back() <= m / primes.back()) {
      throw PreconditionError("seed primes too short to finish factoring " + std::to_string(n));
    }
    push(m);
  }
  return out;
}

PrimeCountTable::PrimeCountTable(Int limit) : limit_(limit) {
  if (limit < 1) throw RangeError("prime count table requires limit >= 1");
  const auto words = static_cast<std::size_t>(limit / 64 + 1);
  bits_.assign(words, 0);
  for (const Int p : primes_up_to(limit)) {
    bits_[static_cast<std::size_t>(p / 64)] |= std::uint64_t{1} << (p % 64);
  }
  block_rank_.resize(words);
  std::uint32_t running = 0;
  for (std::size_t w = 0; w < words; ++w) {
    block_rank_[w] = running;
    running += static_cast<std::uint32_t>(std::popcount(bits_[w]));
  }
}

Int PrimeCountTable::pi(Int x) const {
  if (x < 1 || x > limit_) {
    throw RangeError("pi(" + std::to_string(x) + ") outside table limit " +
                     std::to_string(limit_));
  }
  const auto w = static_cast<std::size_t>(x / 64);
  const int bit = static_cast<int>(x % 64);
  const std::uint64_t mask = (bit == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (bit + 1)) - 1);
  return block_rank_[w] + std::popcount(bits_[w] & mask);
}

bool PrimeCountTable::is_prime(Int n) const {
  if (n < 1 || n > limit_) throw RangeError("is_prime outside table limit");
  return (bits_[static_cast<std::size_t>(n / 64)] >> (n % 64)) & 1U;
}

std::uint64_t exponent_prime(int alpha) {
  if (alpha < 1 || alpha > static_cast<int>(kExponentPrimes.size())) {
    throw RangeError("exponent " + std::to_string(alpha) + " outside encodable range");
  }
  return kExponentPrimes[static_cast<std::size_t>(alpha - 1)];
}

SignatureTable build_signature_table(const Segment& segment, const SeedPrimes& seeds) {
  const Int lo = segment.lo();
  const Int hi = segment.hi();
  if (!seeds.covers_segment_below(hi)) {
    throw PreconditionError("seed primes do not cover sqrt of segment end " + std::to_string(hi));
  }
  const std::size_t width = segment.width();
  SignatureTable table;
  table.lo = lo;
  table.omega.assign(width, 0);
  table.big_omega.assign(width, 0);
  table.shape.assign(width, 1);
  std::vector<std::uint64_t> found(width, 1);  // product of sieved prime powers

  const Int last = hi - 1;
  for (const Int p : seeds.primes) {
    if (p > last / p) break;
    const auto up = static_cast<std::uint64_t>(p);
    for (Int m = ((lo + p - 1) / p) * p; m < hi; m += p) {
      const auto i = static_cast<std::size_t>(m - lo);
      ++table.omega[i];
      ++table.big_omega[i];
      found[i] *= up;
    }
    Int pk = p * p;
    for (int k = 2;; ++k) {
      const std::uint64_t enter = exponent_prime(k);
      const std::uint64_t leave = exponent_prime(k - 1);
      for (Int m = ((lo + pk - 1) / pk) * pk; m < hi; m += pk) {
        const auto i = static_cast<std::size_t>(m - lo);
        ++table.big_omega[i];
        found[i] *= up;
        auto& s = table.shape[i];
        s = (k == 2) ? s * enter : s / leave * enter;
      }
      if (pk > last / p) break;
      pk *= p;
    }
  }
  for (std::size_t i = 0; i < width; ++i) {
    if (found[i] != static_cast<std::uint64_t>(lo) + i) {
      ++table.omega[i];
      ++table.big_omega[i];
    }
  }
  return table;
}

std::vector<int> decode_signature(int omega, std::uint64_t shape) {
  std::vector<int> exps;
  for (int alpha = 2; shape > 1; ++alpha) {
    const std::uint64_t q = exponent_prime(alpha);
    while (shape % q == 0) {
      exps.push_back(alpha);
      shape /= q;
    }
  }
  const int ones = omega - static_cast<int>(exps.size());
  if (ones < 0) throw PreconditionError("inconsistent omega/shape pair");
  exps.insert(exps.end(), static_cast<std::size_t>(ones), 1);
  std::sort(exps.rbegin(), exps.rend());
  return exps;
}

void write_prime_cache(const std::filesystem::path& path, const SeedPrimes& seeds) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(kCacheMagic, kCacheMagicSize);
  put_u64(out, static_cast<std::uint64_t>(seeds.limit));
  put_u64(out, seeds.primes.size());
  for (const Int p : seeds.primes) put_u64(out, static_cast<std::uint64_t>(p));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

SeedPrimes read_prime_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::array<char, kCacheMagicSize> magic{};
  in.read(magic.data(), magic.size());
  if (!in || !std::equal(magic.begin(), magic.end(), kCacheMagic)) {
    throw std::runtime_error(path.string() + " is not a prime cache (bad magic)");
  }
  SeedPrimes seeds;
  seeds.limit = static_cast<Int>(get_u64(in));
  const std::uint64_t count = get_u64(in);
  seeds.primes.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) seeds.primes.push_back(static_cast<Int>(get_u64(in)));
  return seeds;
}

}  // namespace mforge

#include "mforge/arithmetic.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mforge/errors.hpp"

namespace mforge {

namespace {

constexpr int kMaxSubsetExponents = 20;

WideInt checked_mul(WideInt a, WideInt b, const char* what) {
  WideInt r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(what, -1);
  return r;
}

WideInt checked_add(WideInt a, WideInt b, const char* what) {
  WideInt r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(what, -1);
  return r;
}

std::int64_t narrow(WideInt v, const char* what, Int n) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError(what, n);
  return static_cast<std::int64_t>(v);
}

// C(n, k) by the multiplicative recurrence; every partial product is an
// integer binomial, so each division is exact.
WideInt binomial(int n, int k) {
  WideInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b = checked_mul(b, n - k + i, "binomial") / i;
  }
  return b;
}

}  // namespace

std::size_t ArithmeticProfile::index(Int n) const {
  if (!covers(n)) {
    throw RangeError("n=" + std::to_string(n) + " outside profile [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + ")");
  }
  return static_cast<std::size_t>(n - lo);
}

WideInt multinomial(std::span<const int> exponents) {
  WideInt result = 1;
  int total = 0;
  for (const int a : exponents) {
    if (a < 0) throw PreconditionError("negative exponent");
    if (a == 0) continue;
    total += a;
    result = checked_mul(result, binomial(total, a), "multinomial");
  }
  return result;
}

WideInt c_omega(const Factorization& fact) {
  std::vector<int> exps;
  exps.reserve(fact.factors.size());
  for (const auto& f : fact.factors) exps.push_back(f.alpha);
  return multinomial(exps);
}

WideInt abs_g_from_exponents(std::span<const int> exponents) {
  const auto r = static_cast<int>(exponents.size());
  if (r > kMaxSubsetExponents) throw OverflowError("too many distinct primes for |g|", -1);
  std::vector<int> lowered(exponents.begin(), exponents.end());
  WideInt total = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
    for (int i = 0; i < r; ++i) lowered[i] = exponents[i] - static_cast<int>((mask >> i) & 1U);
    total = checked_add(total, multinomial(lowered), "|g|");
  }
  return total;
}

std::int64_t g_squarefree_closed_form(int r) {
  if (r < 0) throw PreconditionError("r must be >= 0");
  // sum_m C(r, m) m! = sum_m r!/(r-m)!, accumulated as falling factorials.
  WideInt term = 1;
  WideInt sum = 1;
  for (int m = 1; m <= r; ++m) {
    term = checked_mul(term, r - m + 1, "squarefree g");
    sum = checked_add(sum, term, "squarefree g");
  }
  const std::int64_t magnitude = narrow(sum, "squarefree g", r);
  return (r % 2 == 0) ? magnitude : -magnitude;
}

ShapeValues ShapeCache::lookup(int omega, std::uint64_t shape) {
  if (shape == 1) {
    while (squarefree_.size() <= static_cast<std::size_t>(omega)) {
      const int r = static_cast<int>(squarefree_.size());
      std::vector<int> ones(static_cast<std::size_t>(r), 1);
      squarefree_.push_back({narrow(multinomial(ones), "C_Omega", -1),
                             narrow(abs_g_from_exponents(ones), "g", -1)});
    }
    return squarefree_[static_cast<std::size_t>(omega)];
  }
  const std::uint64_t key = shape * 32 + static_cast<std::uint64_t>(omega);
  if (auto it = general_.find(key); it != general_.end()) return it->second;
  const std::vector<int> exps = decode_signature(omega, shape);
  const ShapeValues values{narrow(multinomial(exps), "C_Omega", -1),
                           narrow(abs_g_from_exponents(exps), "g", -1)};
  general_.emplace(key, values);
  return values;
}

ArithmeticProfile profile_range(Int lo, Int hi, const WorkerPool& pool,
                                const SieveConfig& config) {
  config.validate();
  if (lo < 1 || hi <= lo) throw PreconditionError("profile range must satisfy 1 <= lo < hi");
  const auto width = static_cast<std::size_t>(hi - lo);

  ArithmeticProfile prof;
  prof.lo = lo;
  prof.hi = hi;
  prof.omega.resize(width);
  prof.big_omega.resize(width);
  prof.mobius.resize(width);
  prof.liouville.resize(width);
  prof.c_omega.resize(width);
  prof.g.resize(width);

  const SeedPrimes seeds = seed_primes_for(hi);
  const auto segments = Segment::partition(lo, hi, config.segment_width);
  pool.run(segments.size(), [&](std::size_t s) {
    const Segment& seg = segments[s];
    const SignatureTable sig = build_signature_table(seg, seeds);
    ShapeCache cache;
    const auto base = static_cast<std::size_t>(seg.lo() - lo);
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const int w = sig.omega[i];
      const int W = sig.big_omega[i];
      ShapeValues v;
      try {
        v = cache.lookup(w, sig.shape[i]);
      } catch (const OverflowError&) {
        throw OverflowError("C_Omega/g exceeds 64 bits", seg.lo() + static_cast<Int>(i));
      }
      const std::int8_t lambda = (W % 2 == 0) ? 1 : -1;
      const std::size_t k = base + i;
      prof.omega[k] = static_cast<std::uint8_t>(w);
      prof.big_omega[k] = static_cast<std::uint8_t>(W);
      prof.liouville[k] = lambda;
      prof.mobius[k] = (w == W) ? lambda : 0;
      prof.c_omega[k] = v.c_omega;
      prof.g[k] = lambda * v.abs_g;
    }
  });
  return prof;
}

std::vector<std::int64_t> g_table(std::span<const std::uint8_t> omega_by_n) {
  if (omega_by_n.size() < 2) throw PreconditionError("g_table requires N >= 1");
  const std::size_t N = omega_by_n.size() - 1;
  // g[n] holds the running divisor sum until n is reached, then the final value.
  std::vector<std::int64_t> g(N + 1, 0);
  for (std::size_t m = 1; m <= N; ++m) {
    if (m == 1) {
      g[1] = 1;
    } else if (__builtin_sub_overflow(std::int64_t{0}, g[m], &g[m])) {
      throw OverflowError("g accumulator", static_cast<Int>(m));
    }
    const std::int64_t gm = g[m];
    if (gm == 0) continue;
    for (std::size_t d = 2, n = 2 * m; n <= N; ++d, n += m) {
      std::int64_t term;
      if (__builtin_mul_overflow(static_cast<std::int64_t>(omega_by_n[d]) + 1, gm, &term) ||
          __builtin_add_overflow(g[n], term, &g[n])) {
        throw OverflowError("g accumulator", static_cast<Int>(n));
      }
    }
  }
  return g;
}

std::vector<std::int64_t> g_table(Int N, const WorkerPool& pool) {
  if (N < 1) throw PreconditionError("g_table requires N >= 1");
  const ArithmeticProfile prof = profile_range(1, N + 1, pool);
  std::vector<std::uint8_t> omega(static_cast<std::size_t>(N) + 1, 0);
  std::copy(prof.omega.begin(), prof.omega.end(), omega.begin() + 1);
  return g_table(omega);
}

void write_sequence_csv(std::ostream& out, Int first, std::span<const std::int64_t> values) {
  out << "n,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << first + static_cast<Int>(i) << ',' << values[i] << '\n';
  }
}

BfileComparison compare_bfile(std::istream& in,
                              const std::function<std::optional<std::int64_t>(Int)>& actual) {
  BfileComparison result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    Int index = 0;
    std::int64_t expected = 0;
    if (!(fields >> index >> expected)) {
      throw std::runtime_error("malformed b-file line " + std::to_string(line_no) + ": " + line);
    }
    ++result.rows_checked;
    const auto got = actual(index);
    if (!got || *got != expected) {
      result.first_mismatch = BfileMismatch{index, expected, got};
      break;
    }
  }
  return result;
}

std::string to_string(WideInt v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  std::string digits;
  while (v != 0) {
    const int d = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

}  // namespace mforge

#include "mforge/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "mforge/arithmetic.hpp"
#include "mforge/errors.hpp"

namespace mforge {

namespace {

void add_into(std::vector<Int>& into, const std::vector<Int>& from) {
  if (into.size() < from.size()) into.resize(from.size(), 0);
  for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

void bump(std::vector<Int>& counts, std::size_t index) {
  if (counts.size() <= index) counts.resize(index + 1, 0);
  ++counts[index];
}

Int floor_log2(Int x) {
  Int k = 0;
  while (x > 1) {
    x >>= 1;
    ++k;
  }
  return k;
}

Int count_at(const std::vector<Int>& counts, int index) {
  return (index >= 0 && static_cast<std::size_t>(index) < counts.size())
             ? counts[static_cast<std::size_t>(index)]
             : 0;
}

bool is_prime_trial(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

ArithmeticCensus build_census(Int x, const WorkerPool& pool, const SieveConfig& config) {
  if (x < 1) throw PreconditionError("census requires x >= 1");
  config.validate();
  const SeedPrimes seeds = seed_primes_for(x + 1);
  const auto segments = Segment::partition(1, x + 1, config.segment_width);
  std::vector<ArithmeticCensus> parts(segments.size());

  pool.run(segments.size(), [&](std::size_t s) {
    const Segment& seg = segments[s];
    const SignatureTable sig = build_signature_table(seg, seeds);
    ShapeCache cache;
    std::unordered_map<std::int64_t, Int> c_counts;
    ArithmeticCensus& part = parts[s];
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const Int n = seg.lo() + static_cast<Int>(i);
      const int w = sig.omega[i];
      const int W = sig.big_omega[i];
      bump(part.excess_count, static_cast<std::size_t>(W - w));
      if (w == W) {
        ++part.squarefree;
        ((w % 2 == 0) ? part.mobius_plus : part.mobius_minus) += 1;
      }
      if (n < 3) continue;
      bump(part.big_omega_count, static_cast<std::size_t>(W));
      if (w == W) bump(part.squarefree_by_big_omega, static_cast<std::size_t>(W));
      bump(part.omega_count, static_cast<std::size_t>(w));
      ++c_counts[cache.lookup(w, sig.shape[i]).c_omega];
    }
    part.c_omega_count.insert(c_counts.begin(), c_counts.end());
  });

  ArithmeticCensus census;
  census.x = x;
  for (const auto& part : parts) {
    add_into(census.big_omega_count, part.big_omega_count);
    add_into(census.squarefree_by_big_omega, part.squarefree_by_big_omega);
    add_into(census.excess_count, part.excess_count);
    add_into(census.omega_count, part.omega_count);
    for (const auto& [value, count] : part.c_omega_count) census.c_omega_count[value] += count;
    census.squarefree += part.squarefree;
    census.mobius_plus += part.mobius_plus;
    census.mobius_minus += part.mobius_minus;
  }
  return census;
}

DensityReport omega_k_density(const ArithmeticCensus& census, int k) {
  const Int x = census.x;
  if (x < 3) throw RangeError("Omega density requires x >= 3");
  if (k < 0 || k > floor_log2(x)) {
    throw RangeError("k=" + std::to_string(k) + " outside [0, log2 x]");
  }
  DensityReport r{x, k, count_at(census.big_omega_count, k), 0, 0, 0};
  r.empirical = static_cast<double>(r.count) / static_cast<double>(x);
  if (k >= 1) {
    const double log_x = std::log(static_cast<double>(x));
    const double loglog_x = std::log(log_x);
    double term = 1.0 / log_x;  // k = 1
    for (int j = 1; j < k; ++j) term *= loglog_x / j;
    r.predicted = term;
  }
  r.abs_error = std::abs(r.empirical - r.predicted);
  return r;
}

ExcessDensityCoefficients d_m_coefficients(Int prime_limit, int m_max) {
  if (prime_limit < 2) throw PreconditionError("prime_limit must be >= 2");
  if (m_max < 0) throw PreconditionError("m_max must be >= 0");
  const auto len = static_cast<std::size_t>(m_max) + 1;
  std::vector<double> coeff(len, 0.0);
  coeff[0] = 1.0;
  std::vector<double> factor(len);
  std::vector<double> next(len);
  for (const Int prime : primes_up_to(prime_limit)) {
    const double p = static_cast<double>(prime);
    const double keep = 1.0 - 1.0 / p;
    // (1 - 1/p)(1 + 1/(p - z)) = (1 - 1/p)(1 + sum_{j>=0} z^j / p^{j+1})
    factor[0] = keep * (1.0 + 1.0 / p);
    double power = 1.0 / p;
    for (std::size_t j = 1; j < len; ++j) {
      power /= p;
      factor[j] = keep * power;
    }
    for (std::size_t m = 0; m < len; ++m) {
      double s = 0.0;
      for (std::size_t j = 0; j <= m; ++j) s += coeff[m - j] * factor[j];
      next[m] = s;
    }
    coeff.swap(next);
  }
  return {prime_limit, std::move(coeff), 1.0 / static_cast<double>(prime_limit)};
}

DensityReport excess_density(const ArithmeticCensus& census, int m,
                             const ExcessDensityCoefficients& coefficients) {
  const Int x = census.x;
  if (x < 2) throw RangeError("excess density requires x >= 2");
  if (m < 0) throw RangeError("m must be >= 0");
  DensityReport r{x, m, count_at(census.excess_count, m), 0, 0, 0};
  r.empirical = static_cast<double>(r.count) / static_cast<double>(x);
  r.predicted = static_cast<std::size_t>(m) < coefficients.d.size()
                    ? coefficients.d[static_cast<std::size_t>(m)]
                    : 0.0;
  r.abs_error = std::abs(r.empirical - r.predicted);
  return r;
}

SignBalance sign_balance(const ArithmeticCensus& census) {
  SignBalance b{census.mobius_plus, census.mobius_minus, census.squarefree, 0, 0};
  if (census.squarefree > 0) {
    b.plus_fraction = static_cast<double>(b.plus) / static_cast<double>(b.squarefree);
    b.minus_fraction = static_cast<double>(b.minus) / static_cast<double>(b.squarefree);
  }
  return b;
}

ConditionalSquarefree conditional_squarefree(const ArithmeticCensus& census, int k) {
  if (census.x < 1) throw RangeError("empty census");
  ConditionalSquarefree c{k, count_at(census.big_omega_count, k), std::nullopt,
                          static_cast<double>(census.squarefree) / static_cast<double>(census.x),
                          std::nullopt};
  if (c.class_size > 0) {
    c.conditional = static_cast<double>(count_at(census.squarefree_by_big_omega, k)) /
                    static_cast<double>(c.class_size);
    c.ratio = *c.conditional / c.unconditional;
  }
  return c;
}

std::vector<ExponentLawRow> prime_exponent_distribution(Int x, Int p, int k_max) {
  if (!is_prime_trial(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (p > x) throw RangeError("prime exceeds x");
  if (k_max < 0) throw RangeError("k_max must be >= 0");

  std::vector<Int> counts(static_cast<std::size_t>(k_max) + 1, 0);
  for (Int n = 1; n <= x; ++n) {
    int v = 0;
    for (Int m = n; m % p == 0 && v <= k_max; m /= p) ++v;
    if (v <= k_max) ++counts[static_cast<std::size_t>(v)];
  }

  std::vector<ExponentLawRow> rows;
  Int pk = 1;  // p^k, saturating once it passes x
  const double inv_p = 1.0 / static_cast<double>(p);
  for (int k = 0; k <= k_max; ++k) {
    const Int next = (pk > x / p) ? x + 1 : pk * p;
    ExponentLawRow row{k, counts[static_cast<std::size_t>(k)], x / pk - x / next, 0, 0};
    row.empirical = static_cast<double>(row.count) / static_cast<double>(x);
    row.predicted = (1.0 - inv_p) * std::pow(inv_p, k);
    rows.push_back(row);
    pk = next;
  }
  return rows;
}

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

EmpiricalCdf empirical_cdf(WeightedSample sample, double center, double scale) {
  if (!(scale > 0.0)) throw DegenerateSampleError("standardization scale must be positive");
  std::sort(sample.begin(), sample.end());
  EmpiricalCdf cdf;
  cdf.center = center;
  cdf.scale = scale;
  for (const auto& [value, count] : sample) {
    if (count <= 0) continue;
    const double z = (value - center) / scale;
    if (!cdf.values.empty() && cdf.values.back() == z) {
      cdf.counts.back() += count;
    } else {
      cdf.values.push_back(z);
      cdf.counts.push_back(count);
    }
    cdf.sample_size += count;
  }
  if (cdf.sample_size == 0) throw DegenerateSampleError("empty sample");
  const auto total = static_cast<double>(cdf.sample_size);
  Int below = 0;
  for (std::size_t i = 0; i < cdf.values.size(); ++i) {
    const double phi = standard_normal_cdf(cdf.values[i]);
    const double before = static_cast<double>(below) / total;
    below += cdf.counts[i];
    const double after = static_cast<double>(below) / total;
    cdf.ks_distance = std::max({cdf.ks_distance, std::abs(before - phi), std::abs(after - phi)});
  }
  return cdf;
}

EmpiricalCdf empirical_cdf_standardized(WeightedSample sample) {
  Int n = 0;
  double sum = 0;
  for (const auto& [value, count] : sample) {
    n += count;
    sum += value * static_cast<double>(count);
  }
  const bool constant = std::all_of(sample.begin(), sample.end(), [&](const auto& s) {
    return s.second == 0 || s.first == sample.front().first;
  });
  if (n < 2 || constant) throw DegenerateSampleError("sample has zero variance");
  const double mean = sum / static_cast<double>(n);
  double ss = 0;
  for (const auto& [value, count] : sample) {
    ss += static_cast<double>(count) * (value - mean) * (value - mean);
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (!(sd > 0.0)) throw DegenerateSampleError("sample has zero variance");
  return empirical_cdf(std::move(sample), mean, sd);
}

EmpiricalCdf erdos_kac_cdf(const ArithmeticCensus& census, CdfStatistic statistic) {
  if (census.x < 100) throw RangeError("Erdos-Kac sample requires x >= 100");
  WeightedSample sample;
  if (statistic == CdfStatistic::omega) {
    for (std::size_t w = 0; w < census.omega_count.size(); ++w) {
      sample.emplace_back(static_cast<double>(w), census.omega_count[w]);
    }
    const double loglog_x = std::log(std::log(static_cast<double>(census.x)));
    return empirical_cdf(std::move(sample), loglog_x, std::sqrt(loglog_x));
  }
  for (const auto& [c, count] : census.c_omega_count) {
    sample.emplace_back(std::log(static_cast<double>(c)), count);
  }
  return empirical_cdf_standardized(std::move(sample));
}

}  // namespace mforge

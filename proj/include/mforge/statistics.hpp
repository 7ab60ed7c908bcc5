#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mforge/parallel.hpp"
#include "mforge/sieve.hpp"

namespace mforge {

/// Exact counts gathered in one sweep over [1, x]. Omega-indexed counts and
/// the Erdos-Kac histograms cover [3, x]; the rest cover [1, x].
struct ArithmeticCensus {
  Int x = 0;
  std::vector<Int> big_omega_count;             // [3, x], index k
  std::vector<Int> squarefree_by_big_omega;     // [3, x], index k
  std::vector<Int> excess_count;                // [1, x], index m = Omega - omega
  std::vector<Int> omega_count;                 // [3, x], index omega
  std::map<std::int64_t, Int> c_omega_count;    // [3, x], keyed by C_Omega(n)
  Int squarefree = 0;                           // Q_sq(x)
  Int mobius_plus = 0;
  Int mobius_minus = 0;
};

ArithmeticCensus build_census(Int x, const WorkerPool& pool = WorkerPool{},
                              const SieveConfig& config = {});

struct DensityReport {
  Int x;
  int index;  // k for Omega densities, m for excess densities
  Int count;
  double empirical;  // count / x
  double predicted;
  double abs_error;
};

/// #{3 <= n <= x : Omega(n) = k} / x against (loglog x)^{k-1} / ((log x)(k-1)!).
/// Valid for 0 <= k <= log2 x; k = 0 has an empty class and prediction 0.
DensityReport omega_k_density(const ArithmeticCensus& census, int k);

/// Power-series coefficients of prod_{p <= prime_limit} (1 - 1/p)(1 + 1/(p - z)).
struct ExcessDensityCoefficients {
  Int prime_limit;
  std::vector<double> d;
  /// Bound on sum_{p > prime_limit} p^-2, the relative size of the omitted factors.
  double tail_estimate;
};

ExcessDensityCoefficients d_m_coefficients(Int prime_limit, int m_max);

/// N_m(x) / x against d_m. m beyond the coefficient table predicts 0.
DensityReport excess_density(const ArithmeticCensus& census, int m,
                             const ExcessDensityCoefficients& coefficients);

struct SignBalance {
  Int plus;
  Int minus;
  Int squarefree;
  double plus_fraction;
  double minus_fraction;
};

SignBalance sign_balance(const ArithmeticCensus& census);

/// Diagnostic for P(mu^2 != 0 | Omega = k) = P(mu^2 != 0); never a gate.
struct ConditionalSquarefree {
  int k;
  Int class_size;
  std::optional<double> conditional;  // empty when the class is empty
  double unconditional;
  std::optional<double> ratio;
};

ConditionalSquarefree conditional_squarefree(const ArithmeticCensus& census, int k);

struct ExponentLawRow {
  int k;
  Int count;              // measured #{n <= x : p^k || n}
  Int closed_form_count;  // floor(x/p^k) - floor(x/p^{k+1})
  double empirical;
  double predicted;       // (1 - 1/p) p^-k
};

std::vector<ExponentLawRow> prime_exponent_distribution(Int x, Int p, int k_max);

enum class CdfStatistic { omega, log_c_omega };

/// Weighted sample: distinct value and multiplicity.
using WeightedSample = std::vector<std::pair<double, Int>>;

struct EmpiricalCdf {
  Int sample_size = 0;
  double center = 0;
  double scale = 1;
  std::vector<double> values;  // sorted standardized distinct values
  std::vector<Int> counts;     // multiplicity of each value
  double ks_distance = 0;      // sup |F_n - Phi|, both sides of every jump
};

double standard_normal_cdf(double z);

/// Standardizes (v - center) / scale and measures the KS distance to Phi.
EmpiricalCdf empirical_cdf(WeightedSample sample, double center, double scale);
/// Same, with sample mean and standard deviation. Throws DegenerateSampleError
/// on zero variance.
EmpiricalCdf empirical_cdf_standardized(WeightedSample sample);

/// Exact sweep of n in [3, x]. omega uses (omega - loglog x)/sqrt(loglog x);
/// log C_Omega is standardized empirically.
EmpiricalCdf erdos_kac_cdf(const ArithmeticCensus& census, CdfStatistic statistic);

}  // namespace mforge

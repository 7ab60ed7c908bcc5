#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "mforge/summatory.hpp"

namespace mforge {

namespace reference {
/// 6 / sqrt(2 pi^5), the conjectured limsup of |M(x)| logloglog x / sqrt(x loglog x).
double mds_limsup_constant();
inline constexpr double kMertensPlusRecord = 1.826054;
inline constexpr double kMertensMinusRecord = -1.837625;
/// 2 sqrt(3) / pi, the iterated-logarithm constant of the random model.
double lil_constant();
}  // namespace reference

struct QhatPrediction {
  double value;
  int sign;               // (-1)^floor(loglog x)
  bool parity_ambiguous;  // loglog x within 1e-9 of an integer
};

/// (6x/pi^2) (-1)^floor(loglog x) / (2 sqrt(2 pi loglog x)); requires x > e.
/// The prediction does not depend on n.
QhatPrediction qhat_prediction(double x, Int n = 1);

/// Ratios at one checkpoint; defined for x >= 16.
struct RatioRow {
  Int x;
  std::int64_t M;
  std::int64_t G;
  double q;       // M / sqrt(x)
  double gonek;   // |M| / (sqrt(x) (logloglog x)^{5/4})
  double r1;      // |M| (logloglog x)^{3/2} / sqrt(x)
  double r2;      // |M| logloglog x / sqrt(x loglog x)
  double rG1;     // r1 applied to |G|
  double rG2;     // r2 applied to |G|
  std::optional<double> twice_g;  // M / (2G); empty when G = 0
  QhatPrediction qhat_pred;
  std::int64_t qhat_exact;  // Qhat_{1,1}(x) = M(x)
};

inline constexpr Int kTraceMinX = 16;

/// Rows for every checkpoint with x >= 16; smaller checkpoints are skipped.
std::vector<RatioRow> build_trace(std::span<const SeriesPoint> points);
std::vector<RatioRow> build_trace(const SummatorySeries& series);

/// `x,q,gonek,r1,r2,rG1,rG2,twice_g,qhat_pred,qhat_exact` preceded by `#`
/// metadata lines carrying the reference constants. Undefined twice_g is
/// written as an empty field.
void write_trace_csv(std::ostream& out, std::span<const RatioRow> rows);
void write_trace_json(std::ostream& out, std::span<const RatioRow> rows);

struct HeuristicEval {
  double x;
  int K;
  double log_x;
  double loglog_x;
  double b_x;       // e loglog x / log x
  double sum;       // S(x, K) = sum_{k<=K} (loglog x)^{k-1} e^k / ((log x)^k sqrt(k))
  double weighted;  // same with sqrt(k) in the numerator
  double b_hat;     // weighted / sum
};

/// Direct compensated summation, k ascending. Requires x > e^e and K >= 1.
HeuristicEval heuristic_sums(double x, int K);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace mforge

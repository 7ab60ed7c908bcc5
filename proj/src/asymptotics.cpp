#include "mforge/asymptotics.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "mforge/errors.hpp"

namespace mforge {

namespace {

constexpr double kParityTolerance = 1e-9;

// Kahan-compensated accumulator.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double reference::mds_limsup_constant() {
  return 6.0 / std::sqrt(2.0 * std::pow(std::numbers::pi, 5));
}

double reference::lil_constant() { return 2.0 * std::sqrt(3.0) / std::numbers::pi; }

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return {buf, ptr};
}

QhatPrediction qhat_prediction(double x, Int /*n*/) {
  if (!(x > std::numbers::e)) throw RangeError("qhat prediction requires x > e");
  const double loglog_x = std::log(std::log(x));
  const double nearest = std::round(loglog_x);
  const bool ambiguous = std::abs(loglog_x - nearest) < kParityTolerance;
  const double floor_ll = ambiguous ? nearest : std::floor(loglog_x);
  const int sign = (static_cast<long long>(floor_ll) % 2 == 0) ? 1 : -1;
  const double value = (6.0 * x / (std::numbers::pi * std::numbers::pi)) * sign /
                       (2.0 * std::sqrt(2.0 * std::numbers::pi * loglog_x));
  return {value, sign, ambiguous};
}

std::vector<RatioRow> build_trace(std::span<const SeriesPoint> points) {
  std::vector<RatioRow> rows;
  for (const auto& p : points) {
    if (!p.checkpoint || p.x < kTraceMinX) continue;
    const auto x = static_cast<double>(p.x);
    const double sqrt_x = std::sqrt(x);
    const double l2 = std::log(std::log(x));
    const double l3 = std::log(l2);
    const double abs_m = std::abs(static_cast<double>(p.M));
    const double abs_g = std::abs(static_cast<double>(p.G));
    RatioRow r{};
    r.x = p.x;
    r.M = p.M;
    r.G = p.G;
    r.q = static_cast<double>(p.M) / sqrt_x;
    r.gonek = abs_m / (sqrt_x * std::pow(l3, 1.25));
    r.r1 = abs_m * std::pow(l3, 1.5) / sqrt_x;
    r.r2 = abs_m * l3 / std::sqrt(x * l2);
    r.rG1 = abs_g * std::pow(l3, 1.5) / sqrt_x;
    r.rG2 = abs_g * l3 / std::sqrt(x * l2);
    if (p.G != 0) r.twice_g = static_cast<double>(p.M) / (2.0 * static_cast<double>(p.G));
    r.qhat_pred = qhat_prediction(x, 1);
    r.qhat_exact = p.M;
    rows.push_back(r);
  }
  return rows;
}

std::vector<RatioRow> build_trace(const SummatorySeries& series) {
  return build_trace(series.points());
}

void write_trace_csv(std::ostream& out, std::span<const RatioRow> rows) {
  out << "# ref_mds_limsup=" << format_double(reference::mds_limsup_constant()) << '\n'
      << "# ref_M_plus_record=" << format_double(reference::kMertensPlusRecord) << '\n'
      << "# ref_M_minus_record=" << format_double(reference::kMertensMinusRecord) << '\n'
      << "# ref_lil=" << format_double(reference::lil_constant()) << '\n'
      << "x,q,gonek,r1,r2,rG1,rG2,twice_g,qhat_pred,qhat_exact\n";
  for (const auto& r : rows) {
    out << r.x << ',' << format_double(r.q) << ',' << format_double(r.gonek) << ','
        << format_double(r.r1) << ',' << format_double(r.r2) << ',' << format_double(r.rG1)
        << ',' << format_double(r.rG2) << ','
        << (r.twice_g ? format_double(*r.twice_g) : std::string{}) << ','
        << format_double(r.qhat_pred.value) << ',' << r.qhat_exact << '\n';
  }
}

void write_trace_json(std::ostream& out, std::span<const RatioRow> rows) {
  nlohmann::ordered_json doc;
  doc["reference"] = {{"mds_limsup", reference::mds_limsup_constant()},
                      {"M_plus_record", reference::kMertensPlusRecord},
                      {"M_minus_record", reference::kMertensMinusRecord},
                      {"lil", reference::lil_constant()}};
  auto& arr = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row = {{"x", r.x},         {"q", r.q},     {"gonek", r.gonek},
                                  {"r1", r.r1},       {"r2", r.r2},   {"rG1", r.rG1},
                                  {"rG2", r.rG2}};
    row["twice_g"] = r.twice_g ? nlohmann::ordered_json(*r.twice_g) : nlohmann::ordered_json();
    row["qhat_pred"] = r.qhat_pred.value;
    row["qhat_exact"] = r.qhat_exact;
    arr.push_back(std::move(row));
  }
  out << doc.dump(1) << '\n';
}

HeuristicEval heuristic_sums(double x, int K) {
  if (!(x > std::exp(std::numbers::e))) throw RangeError("heuristic sums require x > e^e");
  if (K < 1) throw RangeError("K must be >= 1");
  HeuristicEval h{};
  h.x = x;
  h.K = K;
  h.log_x = std::log(x);
  h.loglog_x = std::log(h.log_x);
  h.b_x = std::numbers::e * h.loglog_x / h.log_x;
  // (loglog x)^{k-1} e^k / (log x)^k = b_x^k / loglog x
  CompensatedSum plain;
  CompensatedSum weighted;
  double power = 1.0 / h.loglog_x;
  for (int k = 1; k <= K; ++k) {
    power *= h.b_x;
    const double root_k = std::sqrt(static_cast<double>(k));
    plain.add(power / root_k);
    weighted.add(power * root_k);
  }
  h.sum = plain.sum;
  h.weighted = weighted.sum;
  if (!std::isfinite(h.sum) || !std::isfinite(h.weighted) || h.sum == 0.0) {
    throw std::domain_error("non-finite heuristic sum");
  }
  h.b_hat = h.weighted / h.sum;
  return h;
}

}  // namespace mforge

#include "mforge/summatory.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mforge/errors.hpp"

namespace mforge {

namespace {

struct Totals {
  std::int64_t M = 0;
  std::int64_t G = 0;
  std::int64_t Qsq = 0;
  std::int64_t pi = 0;
};

void add_checked(std::int64_t& acc, std::int64_t v, const char* what, Int n) {
  if (__builtin_add_overflow(acc, v, &acc)) throw OverflowError(what, n);
}

std::int64_t narrow(WideInt v, const char* what, Int x) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError(what, x);
  return static_cast<std::int64_t>(v);
}

Int parse_int(std::string_view field, std::size_t line_no) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error("bad integer '" + std::string(field) + "' on line " +
                             std::to_string(line_no));
  }
  return v;
}

// Values of G and pi at 0 are zero by convention.
std::int64_t G_at(const SummatorySeries& s, Int x) { return x == 0 ? 0 : s.at(x).G; }
std::int64_t pi_at(const SummatorySeries& s, Int x) { return x == 0 ? 0 : s.at(x).pi; }

}  // namespace

CheckpointPolicy CheckpointPolicy::all() {
  CheckpointPolicy p;
  p.kind = Kind::all;
  return p;
}

CheckpointPolicy CheckpointPolicy::geometric(double ratio, bool powers_of_ten) {
  if (!(ratio > 1.0) || !std::isfinite(ratio)) {
    throw ConfigError("geometric checkpoint ratio must be > 1");
  }
  CheckpointPolicy p;
  p.kind = Kind::geometric;
  p.ratio = ratio;
  p.include_powers_of_ten = powers_of_ten;
  return p;
}

CheckpointPolicy CheckpointPolicy::explicit_list(std::vector<Int> points) {
  CheckpointPolicy p;
  p.kind = Kind::explicit_list;
  p.points = std::move(points);
  return p;
}

CheckpointPolicy CheckpointPolicy::parse(const std::string& text) {
  if (text == "all") return all();
  if (text.rfind("geometric:", 0) == 0) {
    try {
      return geometric(std::stod(text.substr(10)));
    } catch (const std::invalid_argument&) {
      throw ConfigError("bad geometric ratio in '" + text + "'");
    }
  }
  if (text.rfind("list:", 0) == 0) {
    std::vector<Int> pts;
    std::stringstream ss(text.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        pts.push_back(parse_int(item, 0));
      } catch (const std::runtime_error&) {
        throw ConfigError("bad checkpoint '" + item + "'");
      }
    }
    return explicit_list(std::move(pts));
  }
  throw ConfigError("unknown checkpoint policy '" + text +
                    "' (expected all, geometric:<ratio> or list:<x,...>)");
}

std::vector<Int> CheckpointPolicy::generate(Int N) const {
  if (N < 1) throw PreconditionError("checkpoint generation requires N >= 1");
  std::vector<Int> out;
  switch (kind) {
    case Kind::all:
      out.resize(static_cast<std::size_t>(N));
      for (Int x = 1; x <= N; ++x) out[static_cast<std::size_t>(x - 1)] = x;
      return out;
    case Kind::geometric: {
      for (long double x = 1; x <= static_cast<long double>(N); x *= ratio) {
        out.push_back(static_cast<Int>(std::floor(x)));
      }
      if (include_powers_of_ten) {
        for (Int p = 1; p <= N; p *= 10) {
          out.push_back(p);
          if (p > N / 10) break;
        }
      }
      break;
    }
    case Kind::explicit_list:
      for (const Int x : points) {
        if (x < 1 || x > N) {
          throw ConfigError("checkpoint " + std::to_string(x) + " outside [1, " +
                            std::to_string(N) + "]");
        }
        out.push_back(x);
      }
      break;
  }
  out.push_back(N);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SummatorySeries::SummatorySeries(Int limit, std::vector<SeriesPoint> points)
    : limit_(limit), points_(std::move(points)) {
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].x <= points_[i - 1].x) {
      throw PreconditionError("series points must be strictly increasing");
    }
  }
}

std::vector<SeriesPoint> SummatorySeries::checkpoints() const {
  std::vector<SeriesPoint> out;
  std::copy_if(points_.begin(), points_.end(), std::back_inserter(out),
               [](const SeriesPoint& p) { return p.checkpoint; });
  return out;
}

bool SummatorySeries::has(Int x) const noexcept {
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const SeriesPoint& p, Int v) { return p.x < v; });
  return it != points_.end() && it->x == x;
}

const SeriesPoint& SummatorySeries::at(Int x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const SeriesPoint& p, Int v) { return p.x < v; });
  if (it == points_.end() || it->x != x) {
    throw RangeError("x=" + std::to_string(x) + " is not recorded in the series");
  }
  return *it;
}

std::vector<Int> quotient_points(Int N) {
  std::vector<Int> out;
  for (Int k = 1; k <= N;) {
    const Int v = N / k;
    out.push_back(v);
    k = N / v + 1;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

SummatorySeries build_series(Int N, const CheckpointPolicy& policy, const WorkerPool& pool,
                             const SieveConfig& config) {
  if (N < 1) throw PreconditionError("summatory series requires N >= 1");
  config.validate();

  const std::vector<Int> checkpoints = policy.generate(N);
  const std::vector<Int> quotients = quotient_points(N);
  std::vector<Int> recorded;
  recorded.reserve(checkpoints.size() + quotients.size());
  std::set_union(checkpoints.begin(), checkpoints.end(), quotients.begin(), quotients.end(),
                 std::back_inserter(recorded));

  const SeedPrimes seeds = seed_primes_for(N + 1);
  const auto segments = Segment::partition(1, N + 1, config.segment_width);
  std::vector<std::vector<Totals>> local(segments.size());
  std::vector<Totals> segment_totals(segments.size());

  pool.run(segments.size(), [&](std::size_t s) {
    const Segment& seg = segments[s];
    const SignatureTable sig = build_signature_table(seg, seeds);
    ShapeCache cache;
    auto next = std::lower_bound(recorded.begin(), recorded.end(), seg.lo());
    const auto end = std::lower_bound(next, recorded.end(), seg.hi());
    auto& out = local[s];
    out.reserve(static_cast<std::size_t>(end - next));

    Totals t;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const Int n = seg.lo() + static_cast<Int>(i);
      const int w = sig.omega[i];
      const int W = sig.big_omega[i];
      const std::int64_t lambda = (W % 2 == 0) ? 1 : -1;
      ShapeValues v;
      try {
        v = cache.lookup(w, sig.shape[i]);
      } catch (const OverflowError&) {
        throw OverflowError("g exceeds 64 bits", n);
      }
      if (w == W) {
        add_checked(t.M, lambda, "M", n);
        ++t.Qsq;
      }
      add_checked(t.G, lambda * v.abs_g, "G", n);
      if (W == 1) ++t.pi;
      if (next != end && *next == n) {
        out.push_back(t);
        ++next;
      }
    }
    segment_totals[s] = t;
  });

  std::vector<SeriesPoint> points;
  points.reserve(recorded.size());
  Totals carry;
  auto rec = recorded.begin();
  for (std::size_t s = 0; s < segments.size(); ++s) {
    for (const Totals& t : local[s]) {
      SeriesPoint p{*rec, carry.M + t.M, 0, carry.Qsq + t.Qsq, carry.pi + t.pi, false};
      if (__builtin_add_overflow(carry.G, t.G, &p.G)) throw OverflowError("G", *rec);
      p.checkpoint = std::binary_search(checkpoints.begin(), checkpoints.end(), p.x);
      points.push_back(p);
      ++rec;
    }
    const Totals& t = segment_totals[s];
    carry.M += t.M;
    carry.Qsq += t.Qsq;
    carry.pi += t.pi;
    if (__builtin_add_overflow(carry.G, t.G, &carry.G)) {
      throw OverflowError("G", segments[s].hi() - 1);
    }
  }
  return SummatorySeries(N, std::move(points));
}

std::int64_t mertens_via_g_pi(Int x, std::span<const std::int64_t> g,
                              const PrimeCountTable& pi_table) {
  if (x < 1) throw RangeError("x must be >= 1");
  if (static_cast<Int>(g.size()) <= x) throw RangeError("g table does not reach x");
  if (pi_table.limit() < x) throw RangeError("prime count table does not reach x");
  WideInt G = 0;
  WideInt cross = 0;
  for (Int k = 1; k <= x; ++k) {
    const std::int64_t gk = g[static_cast<std::size_t>(k)];
    G += gk;
    cross += static_cast<WideInt>(gk) * pi_table.pi(x / k);
  }
  return narrow(G + cross, "M via g and pi", x);
}

std::int64_t mertens_via_g_pi(Int x, const SummatorySeries& series) {
  if (x < 1) throw RangeError("x must be >= 1");
  WideInt total = series.at(x).G;
  for (Int k = 1; k <= x;) {
    const Int v = x / k;
    const Int k_hi = x / v;
    total += static_cast<WideInt>(pi_at(series, v)) * (G_at(series, k_hi) - G_at(series, k - 1));
    k = k_hi + 1;
  }
  return narrow(total, "M via g and pi", x);
}

std::int64_t mertens_via_G_over_primes(Int x, const SummatorySeries& series) {
  if (x < 1) throw RangeError("x must be >= 1");
  WideInt total = series.at(x).G;
  for (Int k = 1; k <= x;) {
    const Int v = x / k;
    const Int k_hi = x / v;
    const Int primes_in_block = pi_at(series, k_hi) - pi_at(series, k - 1);
    if (primes_in_block != 0) total += static_cast<WideInt>(primes_in_block) * G_at(series, v);
    k = k_hi + 1;
  }
  return narrow(total, "M via G over primes", x);
}

std::int64_t q_hat(Int n, Int x, const ArithmeticProfile& profile) {
  if (n < 1 || x < 1) throw RangeError("q_hat requires n, x >= 1");
  if (profile.lo != 1 || !profile.covers(x)) throw RangeError("profile must cover [1, x]");
  // lambda(n j) = lambda(n) lambda(j) by complete multiplicativity.
  const std::int64_t lambda_n = profile.liouville[profile.index(n)];
  std::int64_t sum = 0;
  for (Int j = 1; j <= x; ++j) {
    const auto i = static_cast<std::size_t>(j - 1);
    if (profile.mobius[i] != 0) sum += profile.liouville[i];
  }
  return lambda_n * sum;
}

std::int64_t g_via_double_sum(Int x, const ArithmeticProfile& profile) {
  if (x < 1) throw RangeError("x must be >= 1");
  if (profile.lo != 1 || !profile.covers(x)) throw RangeError("profile must cover [1, x]");
  std::vector<std::int64_t> inner(static_cast<std::size_t>(x) + 1, 0);
  for (Int j = 1; j <= x; ++j) {
    const auto i = static_cast<std::size_t>(j - 1);
    const std::int64_t term = profile.mobius[i] != 0 ? profile.liouville[i] : 0;
    inner[static_cast<std::size_t>(j)] = inner[static_cast<std::size_t>(j - 1)] + term;
  }
  WideInt total = 0;
  for (Int n = 1; n <= x; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    total += static_cast<WideInt>(profile.liouville[i]) * profile.c_omega[i] *
             inner[static_cast<std::size_t>(x / n)];
  }
  return narrow(total, "G via double sum", x);
}

void write_series_csv(std::ostream& out, const SummatorySeries& series) {
  out << "x,M,G,Qsq,pi\n";
  for (const auto& p : series.points()) {
    if (!p.checkpoint) continue;
    out << p.x << ',' << p.M << ',' << p.G << ',' << p.Qsq << ',' << p.pi << '\n';
  }
}

void write_series_json(std::ostream& out, const SummatorySeries& series) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& p : series.points()) {
    if (!p.checkpoint) continue;
    rows.push_back({{"x", p.x}, {"M", p.M}, {"G", p.G}, {"Qsq", p.Qsq}, {"pi", p.pi}});
  }
  out << rows.dump(1) << '\n';
}

SummatorySeries read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "x,M,G,Qsq,pi") {
    throw std::runtime_error("checkpoint CSV must start with header x,M,G,Qsq,pi");
  }
  std::vector<SeriesPoint> points;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos;) {
      fields.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    fields.push_back(rest);
    if (fields.size() != 5) {
      throw std::runtime_error("expected 5 fields on line " + std::to_string(line_no));
    }
    points.push_back({parse_int(fields[0], line_no), parse_int(fields[1], line_no),
                      parse_int(fields[2], line_no), parse_int(fields[3], line_no),
                      parse_int(fields[4], line_no), true});
  }
  const Int limit = points.empty() ? 0 : points.back().x;
  return SummatorySeries(limit, std::move(points));
}

}  // namespace mforge

#include "mforge/random_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mforge/errors.hpp"

namespace mforge {

namespace {

constexpr double kHalfSquarefreeDensity = 3.0 / (std::numbers::pi * std::numbers::pi);
constexpr double kSquarefreeDensity = 6.0 / (std::numbers::pi * std::numbers::pi);

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

// 1 / sqrt(x loglog x) for x in [16, x_max]; zero below.
std::vector<double> lil_scale(Int x_max) {
  std::vector<double> scale(static_cast<std::size_t>(std::max<Int>(x_max, 0)) + 1, 0.0);
  for (Int x = kLilMinX; x <= x_max; ++x) {
    const auto xd = static_cast<double>(x);
    scale[static_cast<std::size_t>(x)] = 1.0 / std::sqrt(xd * std::log(std::log(xd)));
  }
  return scale;
}

ModelRun run_trial(std::uint64_t seed, Int x_max, const std::vector<Int>& checkpoints,
                   const std::vector<double>& scale) {
  ModelRun run;
  run.seed = seed;
  run.x_max = x_max;
  run.trajectory.reserve(checkpoints.size());
  Xoshiro256StarStar rng(seed);
  std::int64_t mbar = 0;
  double sup = 0.0;
  auto next_cp = checkpoints.begin();
  for (Int x = 1; x <= x_max; ++x) {
    const int m = draw_mobius_model(rng.uniform());
    mbar += m;
    run.nonzero_draws += (m != 0);
    const double stat = static_cast<double>(mbar < 0 ? -mbar : mbar) *
                        scale[static_cast<std::size_t>(x)];
    sup = std::max(sup, stat);
    if (next_cp != checkpoints.end() && *next_cp == x) {
      TrajectoryPoint pt{x, mbar, std::nullopt};
      if (x >= kLilMinX) pt.lil = stat;
      run.trajectory.push_back(pt);
      ++next_cp;
    }
  }
  run.final_mbar = mbar;
  if (x_max >= kLilMinX) run.sup_lil = sup;
  return run;
}

}  // namespace

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& word : s_) word = splitmix64(state);
}

std::uint64_t Xoshiro256StarStar::next() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

int draw_mobius_model(double u) noexcept {
  if (u < kHalfSquarefreeDensity) return -1;
  if (u < kSquarefreeDensity) return 1;
  return 0;
}

ModelRun simulate(std::uint64_t seed, Int x_max, const CheckpointPolicy& policy) {
  if (x_max < 1) throw PreconditionError("x_max must be >= 1");
  return run_trial(seed, x_max, policy.generate(x_max), lil_scale(x_max));
}

std::vector<ModelRun> simulate_trials(std::uint64_t seed, int trials, Int x_max,
                                      const CheckpointPolicy& policy, const WorkerPool& pool) {
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  if (x_max < 1) throw PreconditionError("x_max must be >= 1");
  const std::vector<Int> checkpoints = policy.generate(x_max);
  const std::vector<double> scale = lil_scale(x_max);
  std::vector<ModelRun> runs(static_cast<std::size_t>(trials));
  pool.run(runs.size(), [&](std::size_t t) {
    runs[t] = run_trial(seed + t, x_max, checkpoints, scale);
  });
  return runs;
}

LilSummary lil_statistic(const std::vector<ModelRun>& runs) {
  if (runs.empty()) throw PreconditionError("lil_statistic needs at least one run");
  LilSummary s;
  s.reference = 2.0 * std::sqrt(3.0) / std::numbers::pi;
  double sum = 0.0;
  for (const auto& run : runs) {
    s.per_run.push_back(run.sup_lil);
    if (!run.sup_lil) continue;
    s.max = std::max(s.max, *run.sup_lil);
    sum += *run.sup_lil;
    ++s.defined_runs;
  }
  if (s.defined_runs > 0) s.mean = sum / static_cast<double>(s.defined_runs);
  return s;
}

EndpointMoments endpoint_moments(const std::vector<ModelRun>& runs) {
  if (runs.size() < 2) throw PreconditionError("endpoint moments need at least two runs");
  const auto n = static_cast<double>(runs.size());
  double sum = 0.0;
  for (const auto& r : runs) sum += static_cast<double>(r.final_mbar);
  const double mean = sum / n;
  double ss = 0.0;
  for (const auto& r : runs) {
    const double d = static_cast<double>(r.final_mbar) - mean;
    ss += d * d;
  }
  const double variance = ss / (n - 1.0);
  return {runs.size(), mean, variance, std::sqrt(variance / n)};
}

}  // namespace mforge

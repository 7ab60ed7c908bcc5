#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mforge/parallel.hpp"
#include "mforge/summatory.hpp"

namespace mforge {

/// xoshiro256** 1.0 (Blackman and Vigna), state seeded by four successive
/// splitmix64 outputs. Bit-identical on every platform.
class Xoshiro256StarStar {
 public:
  static constexpr const char* kName = "xoshiro256**/splitmix64";

  explicit Xoshiro256StarStar(std::uint64_t seed);

  std::uint64_t next() noexcept;
  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::array<std::uint64_t, 4> s_;
};

/// P[-1] = P[+1] = 3/pi^2, P[0] = 1 - 6/pi^2. A uniform draw u maps to -1 when
/// u < 3/pi^2, to +1 when u < 6/pi^2, otherwise to 0.
int draw_mobius_model(double u) noexcept;

inline constexpr Int kLilMinX = 16;

struct TrajectoryPoint {
  Int x;
  std::int64_t mbar;
  std::optional<double> lil;  // |Mbar_x| / sqrt(x loglog x) when x >= 16
};

struct ModelRun {
  std::uint64_t seed;  // seed of this trial's stream
  Int x_max;
  std::string generator = Xoshiro256StarStar::kName;
  std::vector<TrajectoryPoint> trajectory;
  std::int64_t final_mbar = 0;
  Int nonzero_draws = 0;
  std::optional<double> sup_lil;  // running max over every x in [16, x_max]
};

ModelRun simulate(std::uint64_t seed, Int x_max, const CheckpointPolicy& policy);

/// Trial t runs on stream seed + t.
std::vector<ModelRun> simulate_trials(std::uint64_t seed, int trials, Int x_max,
                                      const CheckpointPolicy& policy,
                                      const WorkerPool& pool = WorkerPool{});

struct LilSummary {
  std::vector<std::optional<double>> per_run;
  double max = 0;
  double mean = 0;
  std::size_t defined_runs = 0;
  double reference = 0;  // 2 sqrt(3) / pi, the almost-sure limsup
};

/// Throws PreconditionError for an empty run list.
LilSummary lil_statistic(const std::vector<ModelRun>& runs);

struct EndpointMoments {
  std::size_t trials;
  double mean;
  double variance;  // unbiased sample variance of Mbar_{x_max}
  double standard_error;
};

EndpointMoments endpoint_moments(const std::vector<ModelRun>& runs);

}  // namespace mforge

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "mforge/errors.hpp"
#include "mforge/summatory.hpp"
#include "oracles.hpp"

using namespace mforge;

namespace {

// Direct prefix sums of mu from the oracle linear sieve.
std::vector<std::int64_t> mertens_direct(Int N) {
  const auto mu = oracle::mobius_linear(N);
  std::vector<std::int64_t> M(static_cast<std::size_t>(N) + 1, 0);
  for (Int n = 1; n <= N; ++n) M[n] = M[n - 1] + mu[n];
  return M;
}

}  // namespace

TEST_CASE("build_series small values") {
  const auto s = build_series(10, CheckpointPolicy::all());
  const std::vector<std::int64_t> M = {1, 0, -1, -1, -2, -1, -2, -2, -2, -1};
  for (Int x = 1; x <= 10; ++x) CHECK(s.at(x).M == M[x - 1]);
  CHECK(s.at(1).G == 1);
  CHECK(s.at(2).G == -1);
  CHECK(s.at(3).G == -3);
  CHECK(s.at(4).G == -1);
  CHECK(s.at(10).Qsq == 7);
  CHECK(s.at(1).Qsq == 1);
  CHECK(s.at(1).pi == 0);
  CHECK(s.at(2).pi == 1);
  CHECK(s.at(10).pi == 4);
  CHECK_THROWS_AS(build_series(0, CheckpointPolicy::all()), PreconditionError);
}

TEST_CASE("series against direct summation oracles") {
  const Int N = 20'000;
  const auto s = build_series(N, CheckpointPolicy::all());
  const auto M = mertens_direct(N);
  const auto g = oracle::g_by_recursion(N);
  const auto flags = oracle::prime_flags(N);
  std::int64_t G = 0, Q = 0, pi = 0;
  for (Int x = 1; x <= N; ++x) {
    G += g[x];
    Q += oracle::mobius(x) != 0;
    pi += flags[x];
    const auto& p = s.at(x);
    REQUIRE(p.M == M[x]);
    REQUIRE(p.G == G);
    REQUIRE(p.Qsq == Q);
    REQUIRE(p.pi == pi);
  }
}

TEST_CASE("series is independent of workers and segment width") {
  const Int N = 500'000;
  const auto a = build_series(N, CheckpointPolicy::geometric(1.25), WorkerPool{1});
  SieveConfig cfg;
  cfg.segment_width = 10'007;
  const auto b = build_series(N, CheckpointPolicy::geometric(1.25), WorkerPool{8}, cfg);
  std::ostringstream ca, cb;
  write_series_csv(ca, a);
  write_series_csv(cb, b);
  CHECK(ca.str() == cb.str());
  REQUIRE(a.points().size() == b.points().size());
  for (std::size_t i = 0; i < a.points().size(); ++i) {
    CHECK(a.points()[i].G == b.points()[i].G);
  }
}

TEST_CASE("checkpoint policies") {
  const auto geo = CheckpointPolicy::geometric(1.25).generate(1000);
  CHECK(geo.front() == 1);
  CHECK(geo.back() == 1000);
  CHECK(std::is_sorted(geo.begin(), geo.end()));
  CHECK(std::adjacent_find(geo.begin(), geo.end()) == geo.end());
  for (Int p : {1, 10, 100, 1000}) CHECK(std::binary_search(geo.begin(), geo.end(), p));

  CHECK(CheckpointPolicy::explicit_list({5, 3, 3}).generate(8) == std::vector<Int>{3, 5, 8});
  CHECK_THROWS_AS(CheckpointPolicy::explicit_list({9}).generate(8), ConfigError);
  CHECK(CheckpointPolicy::parse("list:2,4").generate(4) == std::vector<Int>{2, 4});
  CHECK(CheckpointPolicy::parse("geometric:2").ratio == 2.0);
  CHECK(CheckpointPolicy::parse("all").generate(3) == std::vector<Int>{1, 2, 3});
  CHECK_THROWS_AS(CheckpointPolicy::parse("geometric:1"), ConfigError);
  CHECK_THROWS_AS(CheckpointPolicy::parse("weekly"), ConfigError);
}

TEST_CASE("quotient points") {
  CHECK(quotient_points(10) == std::vector<Int>{1, 2, 3, 5, 10});
  const Int N = 1000;
  std::vector<Int> brute;
  for (Int k = 1; k <= N; ++k) brute.push_back(N / k);
  std::sort(brute.begin(), brute.end());
  brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
  CHECK(quotient_points(N) == brute);
}

TEST_CASE("mertens identities at small x") {
  const auto s = build_series(10, CheckpointPolicy::all());
  const auto g = oracle::g_by_recursion(10);
  const PrimeCountTable pi(10);
  CHECK(mertens_via_g_pi(4, g, pi) == -1);
  CHECK(mertens_via_g_pi(1, g, pi) == 1);
  CHECK(mertens_via_g_pi(4, s) == -1);
  CHECK(mertens_via_G_over_primes(4, s) == -1);
  CHECK(mertens_via_G_over_primes(2, s) == 0);
  CHECK(mertens_via_G_over_primes(1, s) == 1);
  CHECK_THROWS_AS(mertens_via_g_pi(11, g, pi), RangeError);
}

TEST_CASE("mertens identities hold for every x <= 1e4") {
  const Int N = 10'000;
  const auto s = build_series(N, CheckpointPolicy::all());
  const auto M = mertens_direct(N);
  const auto g = oracle::g_by_recursion(N);
  const PrimeCountTable pi(N);
  for (Int x = 1; x <= N; ++x) {
    REQUIRE(mertens_via_g_pi(x, g, pi) == M[x]);
    REQUIRE(mertens_via_g_pi(x, s) == M[x]);
    REQUIRE(mertens_via_G_over_primes(x, s) == M[x]);
  }
}

TEST_CASE("quotient-point identities at the series limit") {
  const Int N = 1'000'000;
  const auto s = build_series(N, CheckpointPolicy::geometric(1.25));
  const auto M = mertens_direct(N);
  CHECK(s.at(N).M == M[N]);
  CHECK(mertens_via_g_pi(N, s) == M[N]);
  CHECK(mertens_via_G_over_primes(N, s) == M[N]);
  // Any quotient point of N is itself closed under taking quotients.
  CHECK(mertens_via_G_over_primes(N / 7, s) == M[N / 7]);
  // A checkpoint that is not a quotient point lacks the required G values.
  Int odd = 0;
  for (const auto& p : s.checkpoints()) {
    const auto qp = quotient_points(N);
    if (!std::binary_search(qp.begin(), qp.end(), p.x) && p.x > 1000) {
      odd = p.x;
      break;
    }
  }
  REQUIRE(odd != 0);
  CHECK_THROWS_AS(mertens_via_G_over_primes(odd, s), RangeError);
}

TEST_CASE("q_hat") {
  const auto prof = profile_range(1, 1001);
  const auto M = mertens_direct(1000);
  CHECK(q_hat(1, 10, prof) == -1);
  CHECK(q_hat(2, 10, prof) == 1);
  CHECK(q_hat(4, 10, prof) == q_hat(1, 10, prof));
  for (Int n = 1; n <= 1000; n += 37) {
    for (Int x = 1; x <= 1000; x += 11) {
      REQUIRE(q_hat(n, x, prof) == oracle::liouville(n) * M[x]);
    }
  }
  // lambda(n j) evaluated directly on the product for a few pairs.
  for (Int n : {3, 12, 30}) {
    std::int64_t direct = 0;
    for (Int j = 1; j <= 50; ++j) direct += oracle::liouville(n * j) * (oracle::mobius(j) != 0);
    CHECK(q_hat(n, 50, prof) == direct);
  }
}

TEST_CASE("g_via_double_sum equals G for x <= 2000") {
  const auto prof = profile_range(1, 2001);
  const auto g = oracle::g_by_recursion(2000);
  CHECK(g_via_double_sum(4, prof) == -1);
  CHECK(g_via_double_sum(1, prof) == 1);
  std::int64_t G = 0;
  for (Int x = 1; x <= 2000; ++x) {
    G += g[x];
    REQUIRE(g_via_double_sum(x, prof) == G);
  }
  CHECK_THROWS_AS(g_via_double_sum(2001, prof), RangeError);
}

TEST_CASE("squarefree count stays within sqrt(x) of 6x/pi^2") {
  const Int N = 200'000;
  const auto s = build_series(N, CheckpointPolicy::all());
  const double density = 6.0 / (std::numbers::pi * std::numbers::pi);
  for (Int x = 10; x <= N; ++x) {
    const auto& p = s.at(x);
    REQUIRE(std::abs(static_cast<double>(p.Qsq) - density * x) <= std::sqrt(static_cast<double>(x)));
    REQUIRE(p.Qsq >= s.at(x - 1).Qsq);
  }
}

TEST_CASE("series CSV round trip") {
  const auto s = build_series(5000, CheckpointPolicy::geometric(1.5));
  std::stringstream csv;
  write_series_csv(csv, s);
  CHECK(csv.str().rfind("x,M,G,Qsq,pi\n", 0) == 0);
  const auto back = read_series_csv(csv);
  const auto cps = s.checkpoints();
  REQUIRE(back.points().size() == cps.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    CHECK(back.points()[i].x == cps[i].x);
    CHECK(back.points()[i].M == cps[i].M);
    CHECK(back.points()[i].G == cps[i].G);
    CHECK(back.points()[i].Qsq == cps[i].Qsq);
    CHECK(back.points()[i].pi == cps[i].pi);
  }
  std::istringstream bad_header("x,M,G\n1,1,1\n");
  CHECK_THROWS(read_series_csv(bad_header));
  std::istringstream bad_row("x,M,G,Qsq,pi\n1,1,one,1,0\n");
  CHECK_THROWS(read_series_csv(bad_row));
}

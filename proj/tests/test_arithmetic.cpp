#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "mforge/arithmetic.hpp"
#include "mforge/errors.hpp"
#include "oracles.hpp"

using namespace mforge;

namespace {

Factorization make_fact(std::vector<PrimePower> f) {
  Factorization out;
  out.factors = std::move(f);
  out.n = 1;
  for (auto [p, a] : out.factors) {
    for (int i = 0; i < a; ++i) out.n *= p;
  }
  return out;
}

}  // namespace

TEST_CASE("profile examples") {
  const auto prof = profile_range(1, 101);
  auto at = [&](Int n) { return prof.index(n); };
  CHECK(prof.omega[at(12)] == 2);
  CHECK(prof.big_omega[at(12)] == 3);
  CHECK(prof.mobius[at(12)] == 0);
  CHECK(prof.liouville[at(12)] == -1);
  CHECK(prof.c_omega[at(12)] == 3);

  CHECK(prof.omega[at(30)] == 3);
  CHECK(prof.big_omega[at(30)] == 3);
  CHECK(prof.mobius[at(30)] == -1);
  CHECK(prof.liouville[at(30)] == -1);
  CHECK(prof.c_omega[at(30)] == 6);

  CHECK(prof.omega[at(1)] == 0);
  CHECK(prof.big_omega[at(1)] == 0);
  CHECK(prof.mobius[at(1)] == 1);
  CHECK(prof.liouville[at(1)] == 1);
  CHECK(prof.c_omega[at(1)] == 1);
  CHECK(prof.g[at(1)] == 1);
}

TEST_CASE("c_omega examples") {
  CHECK(c_omega(make_fact({{2, 2}})) == 1);
  CHECK(c_omega(make_fact({{2, 2}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}})) == 2520);
  CHECK(c_omega(make_fact({{2, 2}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}})) ==
        oracle::c_omega(60060));
  CHECK(c_omega(make_fact({})) == 1);
}

TEST_CASE("multinomial overflow is reported, not wrapped") {
  const std::vector<int> huge(40, 1);  // 40! > 2^127
  CHECK_THROWS_AS(multinomial(huge), OverflowError);
  const std::vector<int> fits(30, 1);  // 30! < 2^127
  CHECK(to_string(multinomial(fits)) == "265252859812191058636308480000000");
}

TEST_CASE("c_omega is invariant under exponent permutation") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> exps(1 + rng() % 6);
    for (auto& e : exps) e = 1 + static_cast<int>(rng() % 5);
    const WideInt base = multinomial(exps);
    for (int s = 0; s < 5; ++s) {
      std::shuffle(exps.begin(), exps.end(), rng);
      CHECK(multinomial(exps) == base);
    }
  }
}

TEST_CASE("c_omega is 1 on prime powers up to 1e6") {
  const auto prof = profile_range(1, 1'000'001);
  for (Int p : primes_up_to(1000)) {
    for (Int q = p; q <= 1'000'000; q *= p) CHECK(prof.c_omega[prof.index(q)] == 1);
  }
  for (Int p : primes_up_to(1'000'000)) REQUIRE(prof.c_omega[prof.index(p)] == 1);
}

TEST_CASE("g_table examples against the divisor recursion") {
  const auto g = g_table(Int{1000});
  const auto ref = oracle::g_by_recursion(1000);
  CHECK(g[1] == 1);
  CHECK(g[2] == -2);
  CHECK(g[4] == 2);
  CHECK(g[6] == 5);
  for (Int p : primes_up_to(1000)) CHECK(g[p] == -2);
  for (Int n = 1; n <= 1000; ++n) REQUIRE(g[n] == ref[n]);
}

TEST_CASE("g from the exponent pattern matches the recursion") {
  const Int N = 20'000;
  const auto prof = profile_range(1, N + 1);
  const auto g = g_table(N);
  for (Int n = 1; n <= N; ++n) REQUIRE(prof.g[prof.index(n)] == g[n]);
}

TEST_CASE("g_squarefree_closed_form") {
  CHECK(g_squarefree_closed_form(0) == 1);
  CHECK(g_squarefree_closed_form(1) == -2);
  CHECK(g_squarefree_closed_form(2) == 5);
  CHECK(g_squarefree_closed_form(3) == -16);
  CHECK_THROWS_AS(g_squarefree_closed_form(-1), PreconditionError);
  CHECK_THROWS_AS(g_squarefree_closed_form(30), OverflowError);
}

TEST_CASE("squarefree closed form and mu/lambda relations for n <= 1e5") {
  const Int N = 100'000;
  const auto prof = profile_range(1, N + 1);
  std::vector<std::uint8_t> omega(N + 1, 0);
  std::copy(prof.omega.begin(), prof.omega.end(), omega.begin() + 1);
  const auto g = g_table(omega);
  for (Int n = 1; n <= N; ++n) {
    const auto i = prof.index(n);
    const int mu = prof.mobius[i];
    REQUIRE((mu * mu == 1) == (prof.big_omega[i] == prof.omega[i]));
    REQUIRE(mu == prof.liouville[i] * mu * mu);
    REQUIRE(prof.liouville[i] == ((prof.big_omega[i] % 2 == 0) ? 1 : -1));
    if (mu != 0) REQUIRE(g[n] == g_squarefree_closed_form(prof.omega[i]));
  }
}

TEST_CASE("bulk profile agrees with pointwise factorization for random n <= 1e8") {
  std::mt19937_64 rng(17);
  auto seeds = std::make_shared<const SeedPrimes>(seed_primes_for(100'000'001));
  int checked = 0;
  for (int block = 0; block < 100; ++block) {
    const Int lo = 1 + static_cast<Int>(rng() % (100'000'000 - 100));
    const Int hi = lo + 100;
    const auto prof = profile_range(lo, hi);
    const auto table = build_factor_table(Segment(lo, hi), seeds);
    for (Int n = lo; n < hi; ++n, ++checked) {
      const auto f = factorize(n, table);
      const auto i = prof.index(n);
      REQUIRE(prof.omega[i] == f.omega());
      REQUIRE(prof.big_omega[i] == f.big_omega());
      REQUIRE(prof.mobius[i] == (f.squarefree() ? (f.omega() % 2 ? -1 : 1) : 0));
      REQUIRE(prof.c_omega[i] == c_omega(f));
      std::vector<int> exps;
      for (auto [p, a] : f.factors) exps.push_back(a);
      REQUIRE(prof.g[i] == prof.liouville[i] * static_cast<std::int64_t>(abs_g_from_exponents(exps)));
    }
  }
  CHECK(checked == 10'000);
}

TEST_CASE("profile is independent of worker count and segment width") {
  const auto a = profile_range(1, 300'001, WorkerPool{1});
  SieveConfig narrow;
  narrow.segment_width = 4099;
  const auto b = profile_range(1, 300'001, WorkerPool{4}, narrow);
  CHECK(a.g == b.g);
  CHECK(a.c_omega == b.c_omega);
  CHECK(a.mobius == b.mobius);
  CHECK(a.big_omega == b.big_omega);
}

TEST_CASE("sequence CSV export") {
  std::ostringstream out;
  const std::vector<std::int64_t> v = {1, -2, -2};
  write_sequence_csv(out, 1, v);
  CHECK(out.str() == "n,value\n1,1\n2,-2\n3,-2\n");
}

TEST_CASE("b-file comparator") {
  const auto g = g_table(Int{100});
  auto lookup = [&](Int n) -> std::optional<std::int64_t> {
    if (n < 1 || n > 100) return std::nullopt;
    return g[n];
  };
  std::istringstream good("# A341444\n1 1\n2 -2\n\n3 -2\n4 2\n");
  const auto ok = compare_bfile(good, lookup);
  CHECK(ok.matches());
  CHECK(ok.rows_checked == 4);

  std::istringstream bad("1 1\n2 -2\n3 7\n4 2\n");
  const auto mismatch = compare_bfile(bad, lookup);
  REQUIRE_FALSE(mismatch.matches());
  CHECK(mismatch.first_mismatch->index == 3);
  CHECK(mismatch.first_mismatch->expected == 7);
  CHECK(mismatch.first_mismatch->actual == -2);

  std::istringstream beyond("101 5\n");
  CHECK_FALSE(compare_bfile(beyond, lookup).first_mismatch->actual.has_value());

  std::istringstream garbage("1 x\n");
  CHECK_THROWS(compare_bfile(garbage, lookup));
}

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "mforge/errors.hpp"
#include "mforge/sieve.hpp"
#include "oracles.hpp"

using namespace mforge;

namespace {

std::shared_ptr<const SeedPrimes> seeds_for(Int hi) {
  return std::make_shared<const SeedPrimes>(seed_primes_for(hi));
}

Int reconstruct(const Factorization& f) {
  Int n = 1;
  for (const auto& [p, a] : f.factors) {
    for (int i = 0; i < a; ++i) n *= p;
  }
  return n;
}

}  // namespace

TEST_CASE("factor table on [2, 10)") {
  auto seeds = std::make_shared<const SeedPrimes>(SeedPrimes{3, {2, 3}});
  const auto table = build_factor_table(Segment(2, 10), seeds);
  const std::vector<Int> expected = {2, 3, 2, 5, 2, 7, 2, 3};
  for (Int n = 2; n < 10; ++n) {
    CHECK(table.spf(n) == expected[n - 2]);
    CHECK(table.spf(n) == oracle::smallest_factor(n));
  }
}

TEST_CASE("factor table sentinel for n = 1") {
  const auto table = build_factor_table(Segment(1, 2), seeds_for(2));
  CHECK(table.spf(1) == 1);
}

TEST_CASE("factor table away from the origin") {
  const Int lo = 1'000'000;
  const auto table = build_factor_table(Segment(lo, lo + 8), seeds_for(lo + 8));
  CHECK(table.spf(lo) == 2);
  CHECK(table.spf(lo + 3) == 1'000'003);  // 1000003 is prime
  CHECK(table.spf(lo + 1) == 101);
  for (Int n = lo; n < lo + 8; ++n) CHECK(table.spf(n) == oracle::smallest_factor(n));
}

TEST_CASE("factor table errors") {
  CHECK_THROWS_AS(Segment(0, 5), ConfigError);
  CHECK_THROWS_AS(Segment(5, 5), ConfigError);
  CHECK_THROWS_AS(Segment(1, 1 + (Int{1} << 22) + 1), ConfigError);
  CHECK_NOTHROW(Segment(1, 1 + (Int{1} << 22)));
  auto short_seeds = std::make_shared<const SeedPrimes>(SeedPrimes{10, primes_up_to(10)});
  CHECK_THROWS_AS(build_factor_table(Segment(1000, 1100), short_seeds), PreconditionError);
}

TEST_CASE("factorize examples") {
  const auto table = build_factor_table(Segment(1, 600'000), seeds_for(600'000));
  CHECK(factorize(12, table).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(1, table).factors.empty());
  CHECK(factorize(510510, table).factors ==
        std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}});
  CHECK_THROWS_AS(factorize(600'000, table), RangeError);
}

TEST_CASE("factorize inside a far segment falls back to seed primes") {
  const Int lo = 99'990'000;
  const Int hi = lo + 20'000;
  const auto table = build_factor_table(Segment(lo, hi), seeds_for(hi));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Int n = lo + static_cast<Int>(rng() % (hi - lo));
    const auto f = factorize(n, table);
    CHECK(reconstruct(f) == n);
    std::vector<std::pair<Int, int>> got;
    for (auto [p, a] : f.factors) got.emplace_back(p, a);
    CHECK(got == oracle::trial_factor(n));
  }
}

TEST_CASE("factorize uses an auxiliary table for small cofactors") {
  auto seeds = seeds_for(2'000'000);
  const auto aux = build_factor_table(Segment(1, 1'000'000), seeds);
  const auto far = build_factor_table(Segment(1'000'000, 2'000'000), seeds);
  for (Int n = 1'000'000; n < 1'000'500; ++n) {
    CHECK(reconstruct(factorize(n, far, &aux)) == n);
  }
}

TEST_CASE("factor table invariants hold on a random segment") {
  std::mt19937_64 rng(3);
  const Int lo = 1 + static_cast<Int>(rng() % 50'000'000);
  const Int hi = lo + 4096;
  const auto table = build_factor_table(Segment(lo, hi), seeds_for(hi));
  for (Int n = std::max<Int>(lo, 2); n < hi; ++n) {
    const Int p = table.spf(n);
    CHECK(n % p == 0);
    CHECK((p == n || p * p <= n));
    CHECK((p == n) == (oracle::trial_factor(n).size() == 1 && oracle::trial_factor(n)[0].second == 1));
    CHECK(reconstruct(factorize(n, table)) == n);
  }
}

TEST_CASE("segmented and monolithic tables agree") {
  auto seeds = seeds_for(200'000);
  const auto whole = build_factor_table(Segment(1, 200'000), seeds);
  for (const auto& seg : Segment::partition(1, 200'000, 7'777)) {
    const auto part = build_factor_table(seg, seeds);
    for (Int n = seg.lo(); n < seg.hi(); ++n) REQUIRE(part.spf(n) == whole.spf(n));
  }
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(10) == std::vector<Int>{2, 3, 5, 7});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(2) == std::vector<Int>{2});
  CHECK(primes_up_to(100).size() == 25);
  const auto flags = oracle::prime_flags(100'000);
  const auto primes = primes_up_to(100'000);
  std::size_t i = 0;
  for (Int n = 1; n <= 100'000; ++n) {
    if (flags[n]) REQUIRE(primes.at(i++) == n);
  }
  CHECK(i == primes.size());
}

TEST_CASE("prime_pi") {
  const PrimeCountTable table(1'000'000);
  CHECK(prime_pi(10, table) == 4);
  CHECK(prime_pi(1, table) == 0);
  CHECK(prime_pi(2, table) == 1);
  CHECK(prime_pi(1'000'000, table) == 78498);
  CHECK_THROWS_AS(prime_pi(0, table), RangeError);
  CHECK_THROWS_AS(prime_pi(1'000'001, table), RangeError);
}

TEST_CASE("prime_pi matches the prime list for every x <= 1e5") {
  const PrimeCountTable table(100'000);
  const auto primes = primes_up_to(100'000);
  std::size_t count = 0;
  Int previous = 0;
  for (Int x = 1; x <= 100'000; ++x) {
    while (count < primes.size() && primes[count] <= x) ++count;
    REQUIRE(table.pi(x) == static_cast<Int>(count));
    REQUIRE(table.pi(x) >= previous);
    previous = table.pi(x);
  }
}

TEST_CASE("signature table agrees with trial division") {
  const Int lo = 9'999'000;
  const Segment seg(lo, lo + 3000);
  const auto seeds = seed_primes_for(seg.hi());
  const auto sig = build_signature_table(seg, seeds);
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const Int n = lo + static_cast<Int>(i);
    std::vector<int> exps;
    for (auto [p, a] : oracle::trial_factor(n)) exps.push_back(a);
    std::sort(exps.rbegin(), exps.rend());
    CHECK(sig.omega[i] == oracle::omega(n));
    CHECK(sig.big_omega[i] == oracle::big_omega(n));
    CHECK(decode_signature(sig.omega[i], sig.shape[i]) == exps);
  }
  // 2^6 * 5^6 = 10^6: two exponents of six.
  const auto million = build_signature_table(Segment(1'000'000, 1'000'001), seed_primes_for(1'000'001));
  CHECK(decode_signature(million.omega[0], million.shape[0]) == std::vector<int>{6, 6});
}

TEST_CASE("prime cache round trip and magic") {
  const auto path = std::filesystem::temp_directory_path() / "mforge_primes_test.bin";
  SeedPrimes seeds{1000, primes_up_to(1000)};
  write_prime_cache(path, seeds);
  {
    std::ifstream in(path, std::ios::binary);
    std::string magic(9, '\0');
    in.read(magic.data(), 9);
    CHECK(magic == "MFPRIMES1");
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    CHECK(b[0] == 0xe8);  // 1000 little-endian
    CHECK(b[1] == 0x03);
  }
  const auto back = read_prime_cache(path);
  CHECK(back.limit == 1000);
  CHECK(back.primes == seeds.primes);
  {
    std::ofstream bad(path, std::ios::binary | std::ios::trunc);
    bad << "NOTPRIMES";
  }
  CHECK_THROWS(read_prime_cache(path));
  std::filesystem::remove(path);
}

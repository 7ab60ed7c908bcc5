#pragma once

// Slow, independent reference computations used only by tests.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline std::vector<std::pair<Int, int>> trial_factor(Int n) {
  std::vector<std::pair<Int, int>> out;
  for (Int d = 2; d <= n / d; ++d) {
    int a = 0;
    while (n % d == 0) {
      n /= d;
      ++a;
    }
    if (a > 0) out.emplace_back(d, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline Int smallest_factor(Int n) {
  if (n == 1) return 1;
  return trial_factor(n).front().first;
}

// Plain Eratosthenes over every integer.
inline std::vector<bool> prime_flags(Int limit) {
  std::vector<bool> flag(static_cast<std::size_t>(limit) + 1, true);
  flag[0] = false;
  if (limit >= 1) flag[1] = false;
  for (Int p = 2; p * p <= limit; ++p) {
    if (!flag[p]) continue;
    for (Int m = p * p; m <= limit; m += p) flag[m] = false;
  }
  return flag;
}

inline int omega(Int n) { return static_cast<int>(trial_factor(n).size()); }

inline int big_omega(Int n) {
  int s = 0;
  for (auto [p, a] : trial_factor(n)) s += a;
  return s;
}

inline int mobius(Int n) {
  int sign = 1;
  for (auto [p, a] : trial_factor(n)) {
    if (a > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline int liouville(Int n) { return big_omega(n) % 2 == 0 ? 1 : -1; }

inline std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Omega(n)! / prod alpha! by direct factorials (small n only).
inline std::int64_t c_omega(Int n) {
  std::int64_t c = factorial(big_omega(n));
  for (auto [p, a] : trial_factor(n)) c /= factorial(a);
  return c;
}

inline std::vector<Int> divisors(Int n) {
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// g(n) = -sum_{d | n, d > 1} (omega(d) + 1) g(n/d), pulled over enumerated divisors.
inline std::vector<std::int64_t> g_by_recursion(Int N) {
  std::vector<std::int64_t> g(static_cast<std::size_t>(N) + 1, 0);
  std::vector<int> w(static_cast<std::size_t>(N) + 1, 0);
  for (Int n = 1; n <= N; ++n) w[n] = omega(n);
  g[1] = 1;
  for (Int n = 2; n <= N; ++n) {
    std::int64_t s = 0;
    for (Int d : divisors(n)) {
      if (d > 1) s += (w[d] + 1) * g[n / d];
    }
    g[n] = -s;
  }
  return g;
}

inline std::vector<std::int64_t> brute_convolve(const std::vector<std::int64_t>& f,
                                                const std::vector<std::int64_t>& h) {
  const std::size_t N = f.size() - 1;
  std::vector<std::int64_t> out(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) out[n] += f[d] * h[n / d];
    }
  }
  return out;
}

// Linear sieve for mu over [0, N], independent of the library's sieves.
inline std::vector<int> mobius_linear(Int N) {
  std::vector<int> mu(static_cast<std::size_t>(N) + 1, 0);
  std::vector<Int> primes;
  std::vector<bool> composite(static_cast<std::size_t>(N) + 1, false);
  if (N >= 1) mu[1] = 1;
  for (Int i = 2; i <= N; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (Int p : primes) {
      if (i * p > N) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

}  // namespace oracle

namespace oracle {

// Omega(n) for n <= N by repeated smallest-factor division.
inline std::vector<std::uint8_t> big_omega_table(Int N) {
  std::vector<Int> spf(static_cast<std::size_t>(N) + 1, 0);
  for (Int i = 2; i <= N; ++i) {
    if (spf[i] != 0) continue;
    for (Int m = i; m <= N; m += i) {
      if (spf[m] == 0) spf[m] = i;
    }
  }
  std::vector<std::uint8_t> W(static_cast<std::size_t>(N) + 1, 0);
  for (Int n = 2; n <= N; ++n) W[n] = static_cast<std::uint8_t>(W[n / spf[n]] + 1);
  return W;
}

}  // namespace oracle

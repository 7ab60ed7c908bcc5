#include "mforge/dirichlet.hpp"

#include <algorithm>

#include "mforge/arithmetic.hpp"
#include "mforge/errors.hpp"

namespace mforge {

namespace {

// Output blocks per worker for convolve; results are exact, so the block
// layout never changes the values.
constexpr std::size_t kBlocksPerWorker = 4;

TruncatedSequence pointwise_product(const TruncatedSequence& a, const TruncatedSequence& b) {
  TruncatedSequence out(a.N());
  for (Int n = 1; n <= a.N(); ++n) {
    std::int64_t v;
    if (__builtin_mul_overflow(a(n), b(n), &v)) throw OverflowError("pointwise product", n);
    out[n] = v;
  }
  return out;
}

TruncatedSequence shifted(const TruncatedSequence& a, std::int64_t at_one, std::int64_t everywhere) {
  TruncatedSequence out(a.N());
  for (Int n = 1; n <= a.N(); ++n) out[n] = a(n) + everywhere + (n == 1 ? at_one : 0);
  return out;
}

}  // namespace

TruncatedSequence::TruncatedSequence(Int N) {
  if (N < 1) throw PreconditionError("truncated sequence requires N >= 1");
  values_.assign(static_cast<std::size_t>(N) + 1, 0);
}

TruncatedSequence::TruncatedSequence(Int N, std::vector<std::int64_t> values_by_n)
    : values_(std::move(values_by_n)) {
  if (N < 1) throw PreconditionError("truncated sequence requires N >= 1");
  if (values_.size() != static_cast<std::size_t>(N) + 1) {
    throw PreconditionError("values must be indexed 0..N");
  }
  values_[0] = 0;
}

TruncatedSequence TruncatedSequence::identity(Int N) {
  TruncatedSequence e(N);
  e[1] = 1;
  return e;
}

TruncatedSequence TruncatedSequence::constant(Int N, std::int64_t c) {
  TruncatedSequence s(N);
  for (Int n = 1; n <= N; ++n) s[n] = c;
  return s;
}

TruncatedSequence convolve(const TruncatedSequence& f, const TruncatedSequence& h,
                           const WorkerPool& pool) {
  if (f.N() != h.N()) throw PreconditionError("convolve requires equal truncation N");
  const Int N = f.N();
  TruncatedSequence out(N);

  const std::size_t blocks =
      std::min<std::size_t>(static_cast<std::size_t>(N), pool.size() * kBlocksPerWorker);
  const Int step = (N + static_cast<Int>(blocks) - 1) / static_cast<Int>(blocks);
  pool.run(blocks, [&](std::size_t b) {
    const Int lo = 1 + static_cast<Int>(b) * step;
    const Int hi = std::min(N + 1, lo + step);
    if (lo >= hi) return;
    std::vector<WideInt> acc(static_cast<std::size_t>(hi - lo), 0);
    for (Int d = 1; d < hi; ++d) {
      const std::int64_t fd = f(d);
      if (fd == 0) continue;
      Int k = std::max<Int>(1, (lo + d - 1) / d);
      for (Int n = k * d; n < hi; n += d, ++k) {
        auto& slot = acc[static_cast<std::size_t>(n - lo)];
        if (__builtin_add_overflow(slot, static_cast<WideInt>(fd) * h(k), &slot)) {
          throw OverflowError("convolution accumulator", n);
        }
      }
    }
    for (Int n = lo; n < hi; ++n) {
      const WideInt v = acc[static_cast<std::size_t>(n - lo)];
      if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("convolution value", n);
      out[n] = static_cast<std::int64_t>(v);
    }
  });
  return out;
}

TruncatedSequence dirichlet_inverse(const TruncatedSequence& f) {
  const std::int64_t f1 = f(1);
  if (f1 == 0) throw NonInvertibleError("f(1) = 0: no Dirichlet inverse exists");
  if (f1 != 1 && f1 != -1) {
    throw NonInvertibleError("f(1) = " + std::to_string(f1) + " has no integer inverse");
  }
  const Int N = f.N();
  // inv(n) = -f(1) * sum_{d | n, d > 1} f(d) inv(n/d); pushed forward from each
  // finalized inv(m) into its multiples.
  std::vector<WideInt> acc(static_cast<std::size_t>(N) + 1, 0);
  TruncatedSequence inv(N);
  for (Int m = 1; m <= N; ++m) {
    const WideInt value = (m == 1) ? WideInt{f1} : -f1 * acc[static_cast<std::size_t>(m)];
    if (value > INT64_MAX || value < INT64_MIN) throw OverflowError("inverse value", m);
    inv[m] = static_cast<std::int64_t>(value);
    if (inv(m) == 0) continue;
    for (Int d = 2, n = 2 * m; n <= N; ++d, n += m) {
      auto& slot = acc[static_cast<std::size_t>(n)];
      if (__builtin_add_overflow(slot, static_cast<WideInt>(f(d)) * inv(m), &slot)) {
        throw OverflowError("inverse accumulator", n);
      }
    }
  }
  return inv;
}

std::vector<Identity> all_identities() {
  return {Identity::a, Identity::b, Identity::c, Identity::d, Identity::e, Identity::f};
}

std::optional<Identity> parse_identity(std::string_view label) {
  if (label.size() != 1) return std::nullopt;
  switch (label[0]) {
    case 'a': return Identity::a;
    case 'b': return Identity::b;
    case 'c': return Identity::c;
    case 'd': return Identity::d;
    case 'e': return Identity::e;
    case 'f': return Identity::f;
    default: return std::nullopt;
  }
}

std::string identity_label(Identity id) {
  return std::string(1, static_cast<char>('a' + static_cast<int>(id)));
}

std::string identity_statement(Identity id) {
  switch (id) {
    case Identity::a: return "chi_P = omega * mu";
    case Identity::b: return "(omega + 1) * g = epsilon";
    case Identity::c: return "lambda g = C_Omega * mu^2";
    case Identity::d: return "g = (lambda C_Omega) * mu";
    case Identity::e: return "lambda C_Omega = (chi_P + epsilon)^-1";
    case Identity::f: return "g * 1 = lambda C_Omega";
  }
  return {};
}

IdentityInputs IdentityInputs::build(Int N, const WorkerPool& pool) {
  if (N < 1) throw PreconditionError("identity inputs require N >= 1");
  const ArithmeticProfile prof = profile_range(1, N + 1, pool);
  IdentityInputs in;
  in.N = N;
  in.omega = TruncatedSequence(N);
  in.mobius = TruncatedSequence(N);
  in.liouville = TruncatedSequence(N);
  in.mobius_sq = TruncatedSequence(N);
  in.c_omega = TruncatedSequence(N);
  std::vector<std::uint8_t> omega_by_n(static_cast<std::size_t>(N) + 1, 0);
  for (Int n = 1; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    in.omega[n] = prof.omega[i];
    in.mobius[n] = prof.mobius[i];
    in.liouville[n] = prof.liouville[i];
    in.mobius_sq[n] = prof.mobius[i] * prof.mobius[i];
    in.c_omega[n] = prof.c_omega[i];
    omega_by_n[static_cast<std::size_t>(n)] = prof.omega[i];
  }
  in.g = TruncatedSequence(N, g_table(omega_by_n));
  in.prime_indicator = TruncatedSequence(N);
  for (const Int p : primes_up_to(N)) in.prime_indicator[p] = 1;
  return in;
}

IdentityReport compare_sequences(std::string name, const TruncatedSequence& lhs,
                                 const TruncatedSequence& rhs) {
  IdentityReport report;
  report.identity_name = std::move(name);
  report.N = std::min(lhs.N(), rhs.N());
  for (Int n = 1; n <= report.N; ++n) {
    if (lhs(n) != rhs(n)) {
      report.first_failure = IdentityFailure{n, lhs(n), rhs(n)};
      break;
    }
  }
  return report;
}

IdentityReport verify_identity(Identity id, const IdentityInputs& in, const WorkerPool& pool) {
  const Int N = in.N;
  const std::string name = "(" + identity_label(id) + ") " + identity_statement(id);
  switch (id) {
    case Identity::a:
      return compare_sequences(name, in.prime_indicator, convolve(in.omega, in.mobius, pool));
    case Identity::b:
      return compare_sequences(name, convolve(shifted(in.omega, 0, 1), in.g, pool),
                               TruncatedSequence::identity(N));
    case Identity::c:
      return compare_sequences(name, pointwise_product(in.liouville, in.g),
                               convolve(in.c_omega, in.mobius_sq, pool));
    case Identity::d:
      return compare_sequences(
          name, in.g, convolve(pointwise_product(in.liouville, in.c_omega), in.mobius, pool));
    case Identity::e:
      return compare_sequences(name, pointwise_product(in.liouville, in.c_omega),
                               dirichlet_inverse(shifted(in.prime_indicator, 1, 0)));
    case Identity::f:
      return compare_sequences(name, convolve(in.g, TruncatedSequence::constant(N, 1), pool),
                               pointwise_product(in.liouville, in.c_omega));
  }
  throw PreconditionError("unknown identity");
}

}  // namespace mforge

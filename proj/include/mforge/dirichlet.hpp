#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mforge/parallel.hpp"
#include "mforge/sieve.hpp"

namespace mforge {

/// Arithmetic function truncated to 1..N. Storage index 0 is unused.
class TruncatedSequence {
 public:
  explicit TruncatedSequence(Int N);
  TruncatedSequence(Int N, std::vector<std::int64_t> values_by_n);

  Int N() const noexcept { return static_cast<Int>(values_.size()) - 1; }
  std::int64_t operator()(Int n) const { return values_[static_cast<std::size_t>(n)]; }
  std::int64_t& operator[](Int n) { return values_[static_cast<std::size_t>(n)]; }
  std::span<const std::int64_t> by_n() const noexcept { return values_; }

  static TruncatedSequence identity(Int N);  // epsilon
  static TruncatedSequence constant(Int N, std::int64_t c);

  friend bool operator==(const TruncatedSequence&, const TruncatedSequence&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// (f * h)(n) = sum_{d | n} f(d) h(n/d) for n <= N, accumulated exactly in
/// 128 bits. Throws OverflowError naming n when a value leaves 64 bits.
TruncatedSequence convolve(const TruncatedSequence& f, const TruncatedSequence& h,
                           const WorkerPool& pool = WorkerPool{});

/// Dirichlet inverse for f(1) = +-1. Throws NonInvertibleError otherwise.
TruncatedSequence dirichlet_inverse(const TruncatedSequence& f);

enum class Identity { a, b, c, d, e, f };

std::vector<Identity> all_identities();
std::optional<Identity> parse_identity(std::string_view label);
std::string identity_label(Identity id);
std::string identity_statement(Identity id);

struct IdentityFailure {
  Int n;
  std::int64_t lhs;
  std::int64_t rhs;
};

struct IdentityReport {
  std::string identity_name;
  Int N = 0;
  std::optional<IdentityFailure> first_failure;

  bool passed() const noexcept { return !first_failure; }
};

/// Arithmetic functions on 1..N consumed by the identity suite. g comes from
/// the inversion recursion, chi_P from an independent prime sieve.
struct IdentityInputs {
  Int N = 0;
  TruncatedSequence omega{1};
  TruncatedSequence mobius{1};
  TruncatedSequence liouville{1};
  TruncatedSequence mobius_sq{1};
  TruncatedSequence c_omega{1};
  TruncatedSequence g{1};
  TruncatedSequence prime_indicator{1};

  static IdentityInputs build(Int N, const WorkerPool& pool = WorkerPool{});
};

/// Pointwise comparison of two sequences; n = 1..N in order.
IdentityReport compare_sequences(std::string name, const TruncatedSequence& lhs,
                                 const TruncatedSequence& rhs);

IdentityReport verify_identity(Identity id, const IdentityInputs& inputs,
                               const WorkerPool& pool = WorkerPool{});

}  // namespace mforge

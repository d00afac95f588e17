// SPDX-License-Identifier: Apache-2.0

#ifndef RAMCONG_RAMANUJAN_HPP
#define RAMCONG_RAMANUJAN_HPP

#include <atomic>
#include <complex>
#include <cstdint>
#include <shared_mutex>
#include <unordered_map>

namespace ramcong {

inline constexpr std::int64_t kDirectSumBudget = 100'000;
inline constexpr double kDirectSumTolerance = 1e-6;

/// Cohen's generalized Ramanujan sum
///
///   c_{r,s}(n) = sum_{d | r, d^s | n} mu(r/d) d^s
///
/// evaluated exactly. Any integer n is accepted; n = 0 is divisible by every
/// d^s, which gives J_s(r). Requires r >= 1, s >= 1 and r^s within int64.
[[nodiscard]] std::int64_t cohen_ramanujan(std::int64_t r, int s, std::int64_t n);

/// The classical Ramanujan sum c_r(n) = c_{r,1}(n).
[[nodiscard]] std::int64_t ramanujan_classic(std::int64_t r, std::int64_t n);

/// Raw complex exponential sum sum_{1<=j<=r^s, (j,r^s)_s=1} e(nj / r^s).
/// Terms are added pairwise. Throws ResourceError if r^s exceeds the budget.
[[nodiscard]] std::complex<double> cohen_ramanujan_direct_sum(std::int64_t r, int s, std::int64_t n,
                                                              std::int64_t budget = kDirectSumBudget);

/// Rounds cohen_ramanujan_direct_sum() to the nearest integer. Throws
/// ConsistencyError if the imaginary part or the rounding residual is not
/// below kDirectSumTolerance.
[[nodiscard]] std::int64_t cohen_ramanujan_direct(std::int64_t r, int s, std::int64_t n,
                                                  std::int64_t budget = kDirectSumBudget);

/// Memo key: c_{r,s} depends on n only through (n, r^s)_s.
struct RamanujanKey {
  std::int64_t r = 1;
  int s = 1;
  std::int64_t reduced_arg = 1;

  friend bool operator==(const RamanujanKey&, const RamanujanKey&) = default;
};

struct RamanujanKeyHash {
  std::size_t operator()(const RamanujanKey& k) const noexcept;
};

/// (n, r^s)_s, with 0 mapped to r^s.
[[nodiscard]] RamanujanKey reduce_key(std::int64_t r, int s, std::int64_t n);

/// Thread-safe memo table for cohen_ramanujan(). Readers share a lock; a miss
/// computes outside the lock and inserts idempotently. Two threads may compute
/// the same entry, but a stored value never changes.
class RamanujanCache {
 public:
  [[nodiscard]] std::int64_t get(std::int64_t r, int s, std::int64_t n);

  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::uint64_t hits() const noexcept { return hits_.load(std::memory_order_relaxed); }
  [[nodiscard]] std::uint64_t misses() const noexcept { return misses_.load(std::memory_order_relaxed); }
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<RamanujanKey, std::int64_t, RamanujanKeyHash> table_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

}  // namespace ramcong

#endif  // RAMCONG_RAMANUJAN_HPP

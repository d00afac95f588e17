// SPDX-License-Identifier: Apache-2.0

#include "ramcong/ramanujan.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include "ramcong/arith.hpp"
#include "ramcong/errors.hpp"
#include "phase_sum.hpp"

namespace ramcong {

namespace {

void require_rs(std::int64_t r, int s, const char* op) {
  if (r < 1 || s < 1) {
    throw DomainError(std::string(op) + ": need r >= 1 and s >= 1, got r=" + std::to_string(r) +
                      ", s=" + std::to_string(s));
  }
}

// Representative of n mod m in [0, m).
std::int64_t residue(std::int64_t n, std::int64_t m) {
  const std::int64_t v = n % m;
  return v < 0 ? v + m : v;
}

}  // namespace

std::int64_t cohen_ramanujan(std::int64_t r, int s, std::int64_t n) {
  require_rs(r, s, "cohen_ramanujan");
  const std::int64_t modulus = checked_pow(r, s);
  // c_{r,s} is r^s-periodic and even, so only n mod r^s matters.
  const std::int64_t arg = residue(n, modulus);
  std::int64_t sum = 0;
  for (const std::int64_t d : divisors(r)) {
    const std::int64_t ds = checked_pow(d, s);
    if (arg % ds != 0) continue;
    sum += mobius(r / d) * ds;
  }
  return sum;
}

std::int64_t ramanujan_classic(std::int64_t r, std::int64_t n) {
  require_rs(r, 1, "ramanujan_classic");
  return cohen_ramanujan(r, 1, n);
}

std::complex<double> cohen_ramanujan_direct_sum(std::int64_t r, int s, std::int64_t n,
                                                std::int64_t budget) {
  require_rs(r, s, "cohen_ramanujan_direct");
  const std::int64_t modulus = pow_or_overflow(r, s);
  if (modulus < 0 || modulus > budget) {
    throw ResourceError("cohen_ramanujan_direct: r^s = " + std::to_string(r) + "^" + std::to_string(s) +
                        " exceeds the direct-evaluation budget of " + std::to_string(budget) + " terms");
  }
  std::vector<std::int64_t> units;
  for (std::int64_t j = 1; j <= modulus; ++j) {
    if (generalized_gcd(j, modulus, s).value == 1) units.push_back(j);
  }
  return detail::exponential_sum(units, n, modulus);
}

std::int64_t cohen_ramanujan_direct(std::int64_t r, int s, std::int64_t n, std::int64_t budget) {
  const std::complex<double> z = cohen_ramanujan_direct_sum(r, s, n, budget);
  const double nearest = std::round(z.real());
  if (std::abs(z.imag()) >= kDirectSumTolerance || std::abs(z.real() - nearest) >= kDirectSumTolerance) {
    throw ConsistencyError("cohen_ramanujan_direct: sum for r=" + std::to_string(r) + ", s=" +
                           std::to_string(s) + ", n=" + std::to_string(n) +
                           " is not within tolerance of an integer");
  }
  return static_cast<std::int64_t>(nearest);
}

std::size_t RamanujanKeyHash::operator()(const RamanujanKey& k) const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(k.r);
  h ^= std::hash<int>{}(k.s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<std::int64_t>{}(k.reduced_arg) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

RamanujanKey reduce_key(std::int64_t r, int s, std::int64_t n) {
  require_rs(r, s, "reduce_key");
  const std::int64_t modulus = checked_pow(r, s);
  const std::int64_t arg = residue(n, modulus);
  return {r, s, arg == 0 ? modulus : generalized_gcd(arg, modulus, s).value};
}

std::int64_t RamanujanCache::get(std::int64_t r, int s, std::int64_t n) {
  const RamanujanKey key = reduce_key(r, s, n);
  {
    std::shared_lock lock(mutex_);
    if (const auto it = table_.find(key); it != table_.end()) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
  }
  misses_.fetch_add(1, std::memory_order_relaxed);
  const std::int64_t value = cohen_ramanujan(r, s, key.reduced_arg);
  std::unique_lock lock(mutex_);
  const auto [it, inserted] = table_.try_emplace(key, value);
  if (!inserted && it->second != value) {
    throw ConsistencyError("RamanujanCache: divergent values for c_{" + std::to_string(r) + "," +
                           std::to_string(s) + "}(" + std::to_string(key.reduced_arg) + ")");
  }
  return value;
}

std::size_t RamanujanCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void RamanujanCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
  hits_.store(0, std::memory_order_relaxed);
  misses_.store(0, std::memory_order_relaxed);
}

}  // namespace ramcong

// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference computations. Deliberately naive: every helper here is
// a direct scan of a definition and shares no code with the library.

#ifndef RAMCONG_TESTS_TEST_ORACLES_HPP
#define RAMCONG_TESTS_TEST_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace ramcong::testing {

inline std::int64_t naive_pow(std::int64_t b, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

inline std::int64_t naive_gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Largest l^s dividing both a and b, by scanning l upward.
inline std::int64_t scan_ggcd(std::int64_t a, std::int64_t b, int s) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  const std::int64_t bound = (a == 0) ? b : (b == 0 ? a : std::min(a, b));
  std::int64_t best = 1;
  for (std::int64_t l = 1; naive_pow(l, s) <= bound; ++l) {
    const std::int64_t ls = naive_pow(l, s);
    if (a % ls == 0 && b % ls == 0) best = ls;
  }
  return best;
}

inline std::vector<std::int64_t> scan_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

/// Cohen sum straight from its exponential definition, rounded.
inline std::int64_t scan_cohen(std::int64_t r, int s, std::int64_t n) {
  const std::int64_t m = naive_pow(r, s);
  std::complex<double> acc{0.0, 0.0};
  for (std::int64_t j = 1; j <= m; ++j) {
    if (scan_ggcd(j, m, s) != 1) continue;
    std::int64_t phase = (n % m) * j % m;
    if (phase < 0) phase += m;
    acc += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(m));
  }
  return static_cast<std::int64_t>(std::llround(acc.real()));
}

/// Solutions of x_1 + ... + x_k = b (mod n^s) with (x_i, n^s)_s = t_i^s, by
/// full enumeration of [1, n^s]^k.
inline std::int64_t scan_restricted(std::int64_t n, int s, std::int64_t b, const std::vector<std::int64_t>& t) {
  const std::int64_t m = naive_pow(n, s);
  const std::size_t k = t.size();
  std::int64_t target = b % m;
  if (target < 0) target += m;
  std::vector<std::int64_t> x(k, 1);
  std::int64_t count = 0;
  if (k == 0) return target == 0 ? 1 : 0;
  while (true) {
    bool ok = true;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < k && ok; ++i) {
      ok = scan_ggcd(x[i], m, s) == naive_pow(t[i], s);
      sum += x[i];
    }
    if (ok && sum % m == target) ++count;
    std::size_t pos = 0;
    while (pos < k && x[pos] == m) x[pos++] = 1;
    if (pos == k) break;
    ++x[pos];
  }
  return count;
}

}  // namespace ramcong::testing

#endif  // RAMCONG_TESTS_TEST_ORACLES_HPP

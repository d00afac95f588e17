// SPDX-License-Identifier: Apache-2.0

#ifndef RAMCONG_PROPERTIES_HPP
#define RAMCONG_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ramcong {

/// Outcome of one exhaustive identity check.
struct SuiteResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when nothing failed

  [[nodiscard]] bool passed() const noexcept { return failures == 0 && checked > 0; }
};

/// Runs the identity suites for the generalized gcd, the arithmetic
/// functions, and Cohen's sums over fixed exhaustive ranges.
[[nodiscard]] std::vector<SuiteResult> run_property_suites();

// Individual suites, exposed for tests.
[[nodiscard]] SuiteResult check_ggcd_periodicity();      // (a+b,b)_s = (a,b)_s
[[nodiscard]] SuiteResult check_ggcd_brute_force();      // vs scan over l^s <= min(a,b)
[[nodiscard]] SuiteResult check_mobius_sum();            // sum_{d|n} mu(d) = [n = 1]
[[nodiscard]] SuiteResult check_jordan_partition();      // sum_{d|n} J_s(n/d) = n^s
[[nodiscard]] SuiteResult check_jordan_phi();            // J_1 = phi
[[nodiscard]] SuiteResult check_ramanujan_direct();      // Mobius formula vs exponential sum
[[nodiscard]] SuiteResult check_ramanujan_periodicity(); // c_{r,s}(n + r^s) = c_{r,s}(n)
[[nodiscard]] SuiteResult check_ramanujan_evenness();    // c_{r,s}(n) = c_{r,s}((n, r^s)_s)
[[nodiscard]] SuiteResult check_ramanujan_reflection();  // c_{r,s}(-n) = c_{r,s}(n)
[[nodiscard]] SuiteResult check_classic_reduction();     // c_{r,1} = c_r
[[nodiscard]] SuiteResult check_multiplicativity();      // c_{rr',s} = c_{r,s} c_{r',s}, (r,r') = 1
[[nodiscard]] SuiteResult check_divisor_evenness();      // c_{e,s}(m) = c_{e,s}((m, n^s)_s), e | n
[[nodiscard]] SuiteResult check_character_sums();        // class exponential sums vs c_{n/d,s}

}  // namespace ramcong

#endif  // RAMCONG_PROPERTIES_HPP

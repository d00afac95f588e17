// SPDX-License-Identifier: Apache-2.0

#ifndef RAMCONG_VERIFY_HPP
#define RAMCONG_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ramcong/congruence.hpp"
#include "ramcong/oracle.hpp"
#include "ramcong/properties.hpp"

namespace ramcong {

using CountEngine = std::function<SolutionCount(const CongruenceInstance&)>;

struct VerifyOptions {
  std::int64_t max_n = 6;
  std::vector<int> s_values{1, 2};
  std::int64_t min_k = 1;
  std::int64_t max_k = 3;
  std::uint64_t seed = 0;
  // Cells (n, s, k) with more instances than this are randomly subsampled.
  std::int64_t cell_cap = 250'000;
  std::int64_t brute_budget = kBruteForceBudget;
  std::int64_t convolution_budget = kConvolutionBudget;
  bool run_properties = true;
  // Replaces the closed-form engine; used for mutation testing.
  CountEngine formula_override;
};

struct CellSummary {
  std::int64_t n = 0;
  int s = 0;
  std::int64_t k = 0;
  std::int64_t population = 0;  // all (b, t) pairs in the cell
  std::int64_t checked = 0;
  std::int64_t brute_skipped = 0;
  std::int64_t convolution_skipped = 0;
  bool sampled = false;
};

struct Mismatch {
  CongruenceInstance instance;
  std::string formula;  // decimal count, "-" if skipped, or an error message
  std::string brute;
  std::string convolution;
};

struct VerifyReport {
  std::vector<CellSummary> cells;
  std::vector<Mismatch> mismatches;  // sorted by (n, s, k, b, t)
  std::vector<SuiteResult> suites;
  std::int64_t instances = 0;

  [[nodiscard]] bool ok() const noexcept;
};

/// Engine-agreement sweep: for each n <= max_n, s in s_values and
/// min_k <= k <= max_k, every b in [0, n^s) and every t in divisors(n)^k,
/// compares the closed form with brute force and convolution. Instances run
/// in parallel; the report does not depend on scheduling.
[[nodiscard]] VerifyReport run_verify(const VerifyOptions& options);

/// Closed form with a deliberately wrong Ramanujan index (d_j in place of
/// n/d_j), truncating the final division. For mutation tests.
[[nodiscard]] SolutionCount mutated_formula_count(const CongruenceInstance& instance);

/// Orders instances by (n, s, k, b mod n^s, t).
[[nodiscard]] bool instance_less(const CongruenceInstance& a, const CongruenceInstance& b);

}  // namespace ramcong

#endif  // RAMCONG_VERIFY_HPP

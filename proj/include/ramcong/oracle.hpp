// SPDX-License-Identifier: Apache-2.0

#ifndef RAMCONG_ORACLE_HPP
#define RAMCONG_ORACLE_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "ramcong/congruence.hpp"

// Independent counting engines used to check the closed-form count. None of
// them touches Ramanujan sums: brute force walks every admissible tuple and
// the convolution engine builds the full distribution of x_1 + ... + x_k.
//
// The tuple walk and the convolution step come in two flavours: an OpenMP
// kernel (the default entry points) and a single-threaded reference kept for
// testing and benchmarking. Both must produce bit-identical results.

namespace ramcong {

inline constexpr std::int64_t kBruteForceBudget = 10'000'000;
inline constexpr std::int64_t kConvolutionBudget = 100'000;

/// Number of residues hit by each sum, indexed 0 .. modulus-1.
struct ResidueVector {
  std::int64_t modulus = 1;
  std::vector<mpz_class> counts;

  [[nodiscard]] mpz_class total() const;
};

/// Product of the class sizes |C(t_i)|, saturating at INT64_MAX.
[[nodiscard]] std::int64_t tuple_space_size(const CongruenceInstance& instance);

[[nodiscard]] SolutionCount brute_force_count(const CongruenceInstance& instance,
                                              std::int64_t budget = kBruteForceBudget);
[[nodiscard]] SolutionCount brute_force_count_serial(const CongruenceInstance& instance,
                                                     std::int64_t budget = kBruteForceBudget);

/// Distribution of x_1 + ... + x_k over Z/n^s, by repeated cyclic convolution
/// with class indicator vectors. Checks mass conservation after each step.
[[nodiscard]] ResidueVector convolution_distribution(const CongruenceInstance& instance,
                                                     std::int64_t budget = kConvolutionBudget);
[[nodiscard]] ResidueVector convolution_distribution_serial(const CongruenceInstance& instance,
                                                            std::int64_t budget = kConvolutionBudget);

[[nodiscard]] SolutionCount convolution_count(const CongruenceInstance& instance,
                                              std::int64_t budget = kConvolutionBudget);
[[nodiscard]] SolutionCount convolution_count_serial(const CongruenceInstance& instance,
                                                     std::int64_t budget = kConvolutionBudget);

/// sum_{x in C} e(m x / n^s) for the class C of divisor d.
[[nodiscard]] std::complex<double> class_character_sum(std::int64_t n, int s, std::int64_t d, std::int64_t m,
                                                       std::int64_t budget = kClassMembersBudget);

struct SolutionListing {
  std::vector<std::vector<std::int64_t>> tuples;  // lexicographic, at most `limit`
  SolutionCount total;                             // all solutions, listed or not
};

[[nodiscard]] SolutionListing enumerate_solutions(const CongruenceInstance& instance, std::int64_t limit,
                                                  std::int64_t budget = kBruteForceBudget);

}  // namespace ramcong

#endif  // RAMCONG_ORACLE_HPP

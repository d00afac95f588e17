// SPDX-License-Identifier: Apache-2.0

#ifndef RAMCONG_SRC_PHASE_SUM_HPP
#define RAMCONG_SRC_PHASE_SUM_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace ramcong::detail {

__extension__ typedef __int128 wide_int;

inline std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms) {
  if (terms.size() <= 8) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& t : terms) acc += t;
    return acc;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

/// sum_x e(arg * x / modulus) over the given x, with the phase arg*x reduced
/// mod modulus in exact arithmetic first.
inline std::complex<double> exponential_sum(std::span<const std::int64_t> xs, std::int64_t arg,
                                            std::int64_t modulus) {
  std::int64_t a = arg % modulus;
  if (a < 0) a += modulus;
  std::vector<std::complex<double>> terms;
  terms.reserve(xs.size());
  for (const std::int64_t x : xs) {
    const auto phase = static_cast<std::int64_t>((static_cast<wide_int>(a) * x) % modulus);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(modulus);
    terms.emplace_back(std::cos(angle), std::sin(angle));
  }
  return pairwise_sum(terms);
}

}  // namespace ramcong::detail

#endif  // RAMCONG_SRC_PHASE_SUM_HPP

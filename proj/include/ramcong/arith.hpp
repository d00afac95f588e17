// SPDX-License-Identifier: Apache-2.0

#ifndef RAMCONG_ARITH_HPP
#define RAMCONG_ARITH_HPP

#include <cstdint>
#include <vector>

namespace ramcong {

/// Largest argument accepted by factorize(). Trial division up to the square
/// root stays well under a millisecond below this bound.
inline constexpr std::int64_t kFactorizeLimit = 1'000'000'000'000;

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer. Primes strictly ascend and
/// every exponent is at least one; 1 has no factors.
struct Factorization {
  std::int64_t value = 1;
  std::vector<PrimePower> factors;

  /// Product of prime^exponent, recomputed from the factor list.
  [[nodiscard]] std::int64_t reconstruct() const;
};

/// The generalized gcd (a,b)_s = l^s, the largest s-th power dividing a and b.
struct GeneralizedGcd {
  std::int64_t base = 1;   // l
  int power = 1;           // s
  std::int64_t value = 1;  // l^s

  friend bool operator==(const GeneralizedGcd&, const GeneralizedGcd&) = default;
};

/// base^exp, throwing DomainError if the result does not fit in int64.
[[nodiscard]] std::int64_t checked_pow(std::int64_t base, int exp);

/// As checked_pow, but reports overflow through the return value (-1).
[[nodiscard]] std::int64_t pow_or_overflow(std::int64_t base, int exp) noexcept;

/// Floor of the s-th root of x >= 0, by integer binary search.
[[nodiscard]] std::int64_t integer_root(std::int64_t x, int s);

[[nodiscard]] bool is_perfect_power(std::int64_t x, int s);

/// Trial division; 1 <= n <= kFactorizeLimit.
[[nodiscard]] Factorization factorize(std::int64_t n);

/// Positive divisors of n in ascending order.
[[nodiscard]] std::vector<std::int64_t> divisors(std::int64_t n);
[[nodiscard]] std::vector<std::int64_t> divisors(const Factorization& f);

[[nodiscard]] int mobius(std::int64_t n);
[[nodiscard]] int mobius(const Factorization& f);

[[nodiscard]] std::int64_t euler_phi(std::int64_t n);

/// J_s(n) = n^s * prod_{p|n} (1 - p^-s): the number of 1 <= y <= n^s with
/// (y, n^s)_s = 1.
[[nodiscard]] std::int64_t jordan_totient(std::int64_t n, int s);

/// (a,b)_s. Signs are ignored; (0,b)_s is the largest s-th power dividing b.
/// Throws DomainError when a = b = 0 or s < 1.
[[nodiscard]] GeneralizedGcd generalized_gcd(std::int64_t a, std::int64_t b, int s);

}  // namespace ramcong

#endif  // RAMCONG_ARITH_HPP

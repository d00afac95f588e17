// SPDX-License-Identifier: Apache-2.0

#ifndef RAMCONG_CONGRUENCE_HPP
#define RAMCONG_CONGRUENCE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ramcong/ramanujan.hpp"

namespace ramcong {

inline constexpr std::int64_t kClassMembersBudget = 1'000'000;

/// Number of solutions of a congruence. Arbitrary precision, never negative.
class SolutionCount {
 public:
  SolutionCount() = default;
  explicit SolutionCount(mpz_class value);
  explicit SolutionCount(std::uint64_t value) : value_(static_cast<unsigned long>(value)) {}

  [[nodiscard]] const mpz_class& value() const noexcept { return value_; }
  [[nodiscard]] std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const SolutionCount& a, const SolutionCount& b) { return a.value_ == b.value_; }
  friend std::ostream& operator<<(std::ostream& os, const SolutionCount& c);

 private:
  mpz_class value_{0};
};

/// x_1 + ... + x_k = b (mod n^s) with (x_i, n^s)_s = t_i^s for each i.
/// Restrictions are given as the base divisors t_i of n.
struct CongruenceInstance {
  std::int64_t n = 1;
  int s = 1;
  std::int64_t b = 0;
  std::vector<std::int64_t> restrictions;

  /// n^s; DomainError if it does not fit in int64.
  [[nodiscard]] std::int64_t modulus() const;
  /// b reduced into [0, n^s).
  [[nodiscard]] std::int64_t reduced_b() const;
  [[nodiscard]] std::size_t k() const noexcept { return restrictions.size(); }
  /// Throws DomainError naming the first offending restriction index.
  void validate() const;
};

/// Divisors d_1 < ... < d_tau(n) of n with the number g_j of unknowns
/// restricted to class j.
struct ClassProfile {
  std::vector<std::int64_t> divisors;
  std::vector<std::int64_t> multiplicities;

  friend bool operator==(const ClassProfile&, const ClassProfile&) = default;
};

[[nodiscard]] ClassProfile class_profile(const CongruenceInstance& instance);

/// Inverse of class_profile(): expands multiplicities g_j (aligned with the
/// ascending divisors of n) into a sorted restriction list.
[[nodiscard]] std::vector<std::int64_t> restrictions_from_multiplicities(std::int64_t n,
                                                                          std::span<const std::int64_t> g);

/// Members of the class {1 <= x <= n^s : (x, n^s)_s = d^s}, ascending.
[[nodiscard]] std::vector<std::int64_t> class_members(std::int64_t n, int s, std::int64_t d,
                                                      std::int64_t budget = kClassMembersBudget);

/// Cardinality of the class of d, J_s(n/d), without enumeration.
[[nodiscard]] std::int64_t class_size(std::int64_t n, int s, std::int64_t d);

/// One outer term of the counting formula, for a divisor d of n:
///   outer * prod_j class_values[j]^{g_j},
/// where outer = c_{d,s}(b) and class_values[j] = c_{n/d_j,s}(n^s/d^s).
struct FormulaTerm {
  std::int64_t d = 1;
  std::int64_t outer = 0;
  std::int64_t argument = 0;
  std::vector<std::int64_t> class_values;
  mpz_class product;
};

struct FormulaEvaluation {
  ClassProfile profile;
  std::int64_t modulus = 1;
  std::vector<FormulaTerm> terms;
  mpz_class pre_division_sum;
  SolutionCount count;
};

/// Closed-form count over generalized Ramanujan sums, keeping every
/// intermediate value. Throws ConsistencyError if the pre-division sum is not
/// a multiple of n^s.
[[nodiscard]] FormulaEvaluation evaluate_restricted(const CongruenceInstance& instance, RamanujanCache& cache);
[[nodiscard]] FormulaEvaluation evaluate_restricted(const CongruenceInstance& instance);

[[nodiscard]] SolutionCount count_restricted(const CongruenceInstance& instance, RamanujanCache& cache);
[[nodiscard]] SolutionCount count_restricted(const CongruenceInstance& instance);

/// Process-wide cache used by the overloads without an explicit cache.
RamanujanCache& shared_ramanujan_cache();

/// Unrestricted a_1 x_1 + ... + a_k x_k = b (mod n) over (Z/n)^k:
/// l n^{k-1} solutions when l = gcd(a_1..a_k, n) divides b, none otherwise.
[[nodiscard]] SolutionCount count_unrestricted_lehmer(std::span<const std::int64_t> coefficients, std::int64_t b,
                                                      std::int64_t n);

/// Units-only count x_1 + ... + x_k = b (mod n), gcd(x_i, n) = 1, from the
/// product formula over the primes of n.
[[nodiscard]] SolutionCount count_units_rademacher(std::int64_t n, std::int64_t k, std::int64_t b);

/// The same count as (1/n) sum_{d|n} c_d(b) c_n(n/d)^k.
[[nodiscard]] SolutionCount count_units_nicol(std::int64_t n, std::int64_t k, std::int64_t b);

}  // namespace ramcong

#endif  // RAMCONG_CONGRUENCE_HPP

// SPDX-License-Identifier: Apache-2.0

#include "ramcong/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "ramcong/arith.hpp"
#include "ramcong/errors.hpp"

namespace ramcong {

namespace {

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

mpz_class mpz_pow(std::int64_t base, std::uint64_t exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), to_mpz(base).get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

std::int64_t residue(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

SolutionCount::SolutionCount(mpz_class value) : value_(std::move(value)) {
  if (sgn(value_) < 0) throw ConsistencyError("SolutionCount: negative value " + value_.get_str());
}

std::ostream& operator<<(std::ostream& os, const SolutionCount& c) { return os << c.to_string(); }

std::int64_t CongruenceInstance::modulus() const {
  if (n < 1 || s < 1) throw DomainError("congruence: need n >= 1 and s >= 1");
  return checked_pow(n, s);
}

std::int64_t CongruenceInstance::reduced_b() const { return residue(b, modulus()); }

void CongruenceInstance::validate() const {
  (void)modulus();
  for (std::size_t i = 0; i < restrictions.size(); ++i) {
    const std::int64_t t = restrictions[i];
    if (t < 1 || n % t != 0) {
      throw DomainError("restriction t_" + std::to_string(i + 1) + " = " + std::to_string(t) +
                        " is not a positive divisor of n = " + std::to_string(n));
    }
  }
}

ClassProfile class_profile(const CongruenceInstance& instance) {
  instance.validate();
  ClassProfile profile{divisors(instance.n), {}};
  profile.multiplicities.assign(profile.divisors.size(), 0);
  for (const std::int64_t t : instance.restrictions) {
    const auto it = std::lower_bound(profile.divisors.begin(), profile.divisors.end(), t);
    ++profile.multiplicities[static_cast<std::size_t>(it - profile.divisors.begin())];
  }
  return profile;
}

std::vector<std::int64_t> restrictions_from_multiplicities(std::int64_t n, std::span<const std::int64_t> g) {
  const std::vector<std::int64_t> ds = divisors(n);
  if (g.size() != ds.size()) {
    throw DomainError("expected " + std::to_string(ds.size()) + " multiplicities (one per divisor of " +
                      std::to_string(n) + "), got " + std::to_string(g.size()));
  }
  std::vector<std::int64_t> out;
  for (std::size_t j = 0; j < ds.size(); ++j) {
    if (g[j] < 0) throw DomainError("multiplicity g_" + std::to_string(j + 1) + " is negative");
    out.insert(out.end(), static_cast<std::size_t>(g[j]), ds[j]);
  }
  return out;
}

std::vector<std::int64_t> class_members(std::int64_t n, int s, std::int64_t d, std::int64_t budget) {
  if (n < 1 || s < 1) throw DomainError("class_members: need n >= 1 and s >= 1");
  if (d < 1 || n % d != 0) {
    throw DomainError("class_members: d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));
  }
  const std::int64_t modulus = pow_or_overflow(n, s);
  if (modulus < 0 || modulus > budget) {
    throw ResourceError("class_members: n^s exceeds the enumeration budget of " + std::to_string(budget));
  }
  const std::int64_t target = checked_pow(d, s);
  std::vector<std::int64_t> out;
  // members are multiples of d^s
  for (std::int64_t x = target; x <= modulus; x += target) {
    if (generalized_gcd(x, modulus, s).value == target) out.push_back(x);
  }
  return out;
}

std::int64_t class_size(std::int64_t n, int s, std::int64_t d) {
  if (d < 1 || n % d != 0) {
    throw DomainError("class_size: d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));
  }
  return jordan_totient(n / d, s);
}

RamanujanCache& shared_ramanujan_cache() {
  static RamanujanCache cache;
  return cache;
}

FormulaEvaluation evaluate_restricted(const CongruenceInstance& instance, RamanujanCache& cache) {
  FormulaEvaluation eval;
  eval.profile = class_profile(instance);
  eval.modulus = instance.modulus();
  const std::int64_t b = instance.reduced_b();
  const auto& ds = eval.profile.divisors;
  const auto& g = eval.profile.multiplicities;

  for (const std::int64_t d : ds) {
    FormulaTerm term;
    term.d = d;
    term.outer = cache.get(d, instance.s, b);
    term.argument = eval.modulus / checked_pow(d, instance.s);
    term.product = 1;
    term.class_values.reserve(ds.size());
    for (std::size_t j = 0; j < ds.size(); ++j) {
      const std::int64_t value = cache.get(instance.n / ds[j], instance.s, term.argument);
      term.class_values.push_back(value);
      if (g[j] == 0) continue;
      mpz_class factor;
      mpz_pow_ui(factor.get_mpz_t(), to_mpz(value).get_mpz_t(), static_cast<unsigned long>(g[j]));
      term.product *= factor;
    }
    eval.pre_division_sum += to_mpz(term.outer) * term.product;
    eval.terms.push_back(std::move(term));
  }

  const mpz_class modulus = to_mpz(eval.modulus);
  if (!mpz_divisible_p(eval.pre_division_sum.get_mpz_t(), modulus.get_mpz_t())) {
    throw ConsistencyError("count_restricted: pre-division sum " + eval.pre_division_sum.get_str() +
                           " is not divisible by n^s = " + std::to_string(eval.modulus));
  }
  mpz_class quotient;
  mpz_divexact(quotient.get_mpz_t(), eval.pre_division_sum.get_mpz_t(), modulus.get_mpz_t());
  eval.count = SolutionCount(std::move(quotient));
  return eval;
}

FormulaEvaluation evaluate_restricted(const CongruenceInstance& instance) {
  return evaluate_restricted(instance, shared_ramanujan_cache());
}

SolutionCount count_restricted(const CongruenceInstance& instance, RamanujanCache& cache) {
  return evaluate_restricted(instance, cache).count;
}

SolutionCount count_restricted(const CongruenceInstance& instance) {
  return count_restricted(instance, shared_ramanujan_cache());
}

SolutionCount count_unrestricted_lehmer(std::span<const std::int64_t> coefficients, std::int64_t b,
                                        std::int64_t n) {
  if (n < 1) throw DomainError("count_unrestricted_lehmer: n must be positive");
  if (coefficients.empty()) throw DomainError("count_unrestricted_lehmer: need at least one coefficient");
  std::int64_t l = n;
  for (const std::int64_t a : coefficients) l = std::gcd(l, a);
  if (b % l != 0) return SolutionCount{};
  return SolutionCount(to_mpz(l) * mpz_pow(n, coefficients.size() - 1));
}

SolutionCount count_units_rademacher(std::int64_t n, std::int64_t k, std::int64_t b) {
  if (n < 1 || k < 1) throw DomainError("count_units_rademacher: need n >= 1 and k >= 1");
  const std::int64_t br = residue(b, n);
  const auto uk = static_cast<std::uint64_t>(k);
  mpq_class value(mpz_pow(euler_phi(n), uk), to_mpz(n));
  value.canonicalize();
  for (const auto& [p, e] : factorize(n).factors) {
    // p | b uses exponent k-1, p does not divide b uses exponent k
    const std::uint64_t exp = (br % p == 0) ? uk - 1 : uk;
    mpq_class ratio(exp % 2 == 0 ? 1 : -1);
    ratio /= mpq_class(mpz_pow(p - 1, exp));
    value *= mpq_class(1) - ratio;
  }
  value.canonicalize();
  if (value.get_den() != 1 || sgn(value) < 0) {
    throw ConsistencyError("count_units_rademacher: non-integral or negative result " + value.get_str());
  }
  return SolutionCount(value.get_num());
}

SolutionCount count_units_nicol(std::int64_t n, std::int64_t k, std::int64_t b) {
  if (n < 1 || k < 1) throw DomainError("count_units_nicol: need n >= 1 and k >= 1");
  mpz_class sum;
  for (const std::int64_t d : divisors(n)) {
    const std::int64_t inner = ramanujan_classic(n, n / d);
    sum += to_mpz(ramanujan_classic(d, b)) * mpz_pow(inner, static_cast<std::uint64_t>(k));
  }
  const mpz_class modulus = to_mpz(n);
  if (!mpz_divisible_p(sum.get_mpz_t(), modulus.get_mpz_t())) {
    throw ConsistencyError("count_units_nicol: pre-division sum " + sum.get_str() + " is not divisible by " +
                           std::to_string(n));
  }
  mpz_class quotient;
  mpz_divexact(quotient.get_mpz_t(), sum.get_mpz_t(), modulus.get_mpz_t());
  return SolutionCount(std::move(quotient));
}

}  // namespace ramcong

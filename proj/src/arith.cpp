// SPDX-License-Identifier: Apache-2.0

#include "ramcong/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "ramcong/errors.hpp"

namespace ramcong {

namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

void require_positive(std::int64_t n, const char* op) {
  if (n < 1) {
    throw DomainError(std::string(op) + ": argument must be positive, got " + std::to_string(n));
  }
}

std::int64_t abs_checked(std::int64_t v) {
  if (v == std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("generalized_gcd: argument magnitude exceeds int64");
  }
  return v < 0 ? -v : v;
}

}  // namespace

std::int64_t Factorization::reconstruct() const {
  std::int64_t out = 1;
  for (const auto& pp : factors) out *= checked_pow(pp.prime, pp.exponent);
  return out;
}

std::int64_t pow_or_overflow(std::int64_t base, int exp) noexcept {
  if (exp < 0 || base < 0) return -1;
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > kInt64Max / base) return -1;
    out *= base;
  }
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  const std::int64_t out = pow_or_overflow(base, exp);
  if (out < 0) {
    throw DomainError("power " + std::to_string(base) + "^" + std::to_string(exp) +
                      " does not fit in 64 bits");
  }
  return out;
}

std::int64_t integer_root(std::int64_t x, int s) {
  if (x < 0 || s < 1) throw DomainError("integer_root: need x >= 0 and s >= 1");
  if (s == 1 || x < 2) return x;
  std::int64_t lo = 1;
  std::int64_t hi = std::min<std::int64_t>(x, 3'037'000'500);  // > sqrt(2^63)
  // invariant: lo^s <= x < (hi+1)^s
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    const std::int64_t p = pow_or_overflow(mid, s);
    if (p >= 0 && p <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

bool is_perfect_power(std::int64_t x, int s) {
  if (x < 0) return false;
  return pow_or_overflow(integer_root(x, s), s) == x;
}

Factorization factorize(std::int64_t n) {
  require_positive(n, "factorize");
  if (n > kFactorizeLimit) {
    throw DomainError("factorize: " + std::to_string(n) + " exceeds the trial-division limit " +
                      std::to_string(kFactorizeLimit));
  }
  Factorization f{n, {}};
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

std::vector<std::int64_t> divisors(const Factorization& f) {
  std::vector<std::int64_t> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t width = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < width; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) { return divisors(factorize(n)); }

int mobius(const Factorization& f) {
  for (const auto& pp : f.factors) {
    if (pp.exponent > 1) return 0;
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

int mobius(std::int64_t n) { return mobius(factorize(n)); }

std::int64_t euler_phi(std::int64_t n) { return jordan_totient(n, 1); }

std::int64_t jordan_totient(std::int64_t n, int s) {
  require_positive(n, "jordan_totient");
  if (s < 1) throw DomainError("jordan_totient: s must be positive");
  // n^s prod (1 - p^-s) = prod p^{s(e-1)} (p^s - 1)
  const Factorization f = factorize(n);
  std::int64_t out = 1;
  for (const auto& [p, e] : f.factors) {
    const std::int64_t ps = checked_pow(p, s);
    const std::int64_t head = checked_pow(ps, e - 1);
    if ((ps - 1) != 0 && head > kInt64Max / (ps - 1)) {
      throw DomainError("jordan_totient: result does not fit in 64 bits");
    }
    const std::int64_t factor = head * (ps - 1);
    if (out > kInt64Max / factor) throw DomainError("jordan_totient: result does not fit in 64 bits");
    out *= factor;
  }
  return out;
}

GeneralizedGcd generalized_gcd(std::int64_t a, std::int64_t b, int s) {
  if (s < 1) throw DomainError("generalized_gcd: s must be positive");
  if (a == 0 && b == 0) throw DomainError("generalized_gcd: (0, 0)_s is undefined");
  const std::int64_t g = std::gcd(abs_checked(a), abs_checked(b));
  if (s == 1) return {g, 1, g};
  std::int64_t base = 1;
  for (const auto& [p, e] : factorize(g).factors) base *= checked_pow(p, e / s);
  return {base, s, checked_pow(base, s)};
}

}  // namespace ramcong

// SPDX-License-Identifier: Apache-2.0

#include "ramcong/oracle.hpp"

#include <limits>
#include <string>

#include "ramcong/arith.hpp"
#include "ramcong/errors.hpp"
#include "phase_sum.hpp"

namespace ramcong {

namespace {

using MemberLists = std::vector<std::vector<std::int64_t>>;

void require_tuple_budget(const CongruenceInstance& instance, std::int64_t budget, const char* op) {
  const std::int64_t space = tuple_space_size(instance);
  if (space > budget) {
    throw ResourceError(std::string(op) + ": " + std::to_string(space) + " candidate tuples exceed the budget of " +
                        std::to_string(budget) + "; use the convolution engine instead");
  }
}

MemberLists member_lists(const CongruenceInstance& instance) {
  MemberLists lists;
  lists.reserve(instance.k());
  for (const std::int64_t t : instance.restrictions) {
    lists.push_back(class_members(instance.n, instance.s, t, std::numeric_limits<std::int64_t>::max()));
  }
  return lists;
}

// Tuples over lists[pos..] whose sum with `partial` is target mod m.
std::uint64_t count_tail(const MemberLists& lists, std::size_t pos, std::int64_t partial, std::int64_t target,
                         std::int64_t m) {
  const auto& members = lists[pos];
  std::uint64_t count = 0;
  if (pos + 1 == lists.size()) {
    for (const std::int64_t x : members) count += ((partial + x) % m == target) ? 1 : 0;
    return count;
  }
  for (const std::int64_t x : members) count += count_tail(lists, pos + 1, (partial + x) % m, target, m);
  return count;
}

void list_tail(const MemberLists& lists, std::size_t pos, std::int64_t partial, std::int64_t target,
               std::int64_t m, std::vector<std::int64_t>& prefix, SolutionListing& out, std::int64_t limit,
               std::uint64_t& total) {
  if (pos == lists.size()) {
    if (partial != target) return;
    ++total;
    if (static_cast<std::int64_t>(out.tuples.size()) < limit) out.tuples.push_back(prefix);
    return;
  }
  for (const std::int64_t x : lists[pos]) {
    prefix.push_back(x);
    list_tail(lists, pos + 1, (partial + x) % m, target, m, prefix, out, limit, total);
    prefix.pop_back();
  }
}

// One convolution step: out[r] = sum_{x in members} in[r - x mod m].
void convolve_step(const std::vector<mpz_class>& in, const std::vector<std::int64_t>& members,
                   std::vector<mpz_class>& out, bool parallel) {
  const auto m = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t r = 0; r < m; ++r) {
    mpz_class acc;
    for (const std::int64_t x : members) {
      std::int64_t src = (r - x) % m;
      if (src < 0) src += m;
      acc += in[static_cast<std::size_t>(src)];
    }
    out[static_cast<std::size_t>(r)] = std::move(acc);
  }
}

ResidueVector convolve_all(const CongruenceInstance& instance, std::int64_t budget, bool parallel) {
  instance.validate();
  const std::int64_t m = instance.modulus();
  if (m > budget) {
    throw ResourceError("convolution_count: n^s = " + std::to_string(m) + " exceeds the vector budget of " +
                        std::to_string(budget));
  }
  ResidueVector dist{m, std::vector<mpz_class>(static_cast<std::size_t>(m))};
  dist.counts[0] = 1;
  std::vector<mpz_class> next(static_cast<std::size_t>(m));
  mpz_class expected_mass = 1;
  for (const std::int64_t t : instance.restrictions) {
    const std::vector<std::int64_t> members = class_members(instance.n, instance.s, t, budget);
    convolve_step(dist.counts, members, next, parallel);
    dist.counts.swap(next);
    expected_mass *= static_cast<unsigned long>(members.size());
    if (dist.total() != expected_mass) {
      throw ConsistencyError("convolution_count: mass " + dist.total().get_str() + " after convolving class " +
                             std::to_string(t) + ", expected " + expected_mass.get_str());
    }
  }
  return dist;
}

SolutionCount brute_force(const CongruenceInstance& instance, std::int64_t budget, bool parallel) {
  instance.validate();
  require_tuple_budget(instance, budget, "brute_force_count");
  const std::int64_t m = instance.modulus();
  const std::int64_t target = instance.reduced_b();
  if (instance.k() == 0) return SolutionCount(std::uint64_t{target == 0 ? 1U : 0U});

  const MemberLists lists = member_lists(instance);
  const auto& head = lists.front();
  const auto width = static_cast<std::int64_t>(head.size());
  std::uint64_t count = 0;
  if (lists.size() == 1) {
    for (const std::int64_t x : head) count += (x % m == target) ? 1 : 0;
    return SolutionCount(count);
  }
#pragma omp parallel for reduction(+ : count) schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < width; ++i) {
    count += count_tail(lists, 1, head[static_cast<std::size_t>(i)] % m, target, m);
  }
  return SolutionCount(count);
}

}  // namespace

mpz_class ResidueVector::total() const {
  mpz_class sum;
  for (const auto& c : counts) sum += c;
  return sum;
}

std::int64_t tuple_space_size(const CongruenceInstance& instance) {
  instance.validate();
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t space = 1;
  for (const std::int64_t t : instance.restrictions) {
    const std::int64_t size = class_size(instance.n, instance.s, t);
    if (space > kMax / size) return kMax;
    space *= size;
  }
  return space;
}

SolutionCount brute_force_count(const CongruenceInstance& instance, std::int64_t budget) {
  return brute_force(instance, budget, true);
}

SolutionCount brute_force_count_serial(const CongruenceInstance& instance, std::int64_t budget) {
  return brute_force(instance, budget, false);
}

ResidueVector convolution_distribution(const CongruenceInstance& instance, std::int64_t budget) {
  return convolve_all(instance, budget, true);
}

ResidueVector convolution_distribution_serial(const CongruenceInstance& instance, std::int64_t budget) {
  return convolve_all(instance, budget, false);
}

SolutionCount convolution_count(const CongruenceInstance& instance, std::int64_t budget) {
  const ResidueVector dist = convolution_distribution(instance, budget);
  return SolutionCount(dist.counts[static_cast<std::size_t>(instance.reduced_b())]);
}

SolutionCount convolution_count_serial(const CongruenceInstance& instance, std::int64_t budget) {
  const ResidueVector dist = convolution_distribution_serial(instance, budget);
  return SolutionCount(dist.counts[static_cast<std::size_t>(instance.reduced_b())]);
}

std::complex<double> class_character_sum(std::int64_t n, int s, std::int64_t d, std::int64_t m,
                                         std::int64_t budget) {
  const std::vector<std::int64_t> members = class_members(n, s, d, budget);
  return detail::exponential_sum(members, m, checked_pow(n, s));
}

SolutionListing enumerate_solutions(const CongruenceInstance& instance, std::int64_t limit, std::int64_t budget) {
  instance.validate();
  if (limit < 1) throw DomainError("enumerate_solutions: limit must be positive");
  require_tuple_budget(instance, budget, "enumerate_solutions");
  const MemberLists lists = member_lists(instance);
  SolutionListing out;
  std::vector<std::int64_t> prefix;
  prefix.reserve(lists.size());
  std::uint64_t total = 0;
  list_tail(lists, 0, 0, instance.reduced_b(), instance.modulus(), prefix, out, limit, total);
  out.total = SolutionCount(total);
  return out;
}

}  // namespace ramcong

// SPDX-License-Identifier: Apache-2.0

#include "ramcong/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

#include "ramcong/arith.hpp"
#include "ramcong/errors.hpp"

namespace ramcong {

namespace {

struct Outcome {
  bool agree = true;
  bool brute_skipped = false;
  bool convolution_skipped = false;
  std::string formula;
  std::string brute;
  std::string convolution;
};

// Decimal result of an engine, or the error text; `skipped` is set when the
// engine declined on budget grounds.
template <typename Engine>
std::string run_engine(Engine&& engine, bool& skipped) {
  try {
    return engine().to_string();
  } catch (const ResourceError&) {
    skipped = true;
    return "-";
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what();
  }
}

Outcome check_instance(const CongruenceInstance& instance, const VerifyOptions& options, RamanujanCache& cache) {
  Outcome out;
  bool unused = false;
  out.formula = run_engine(
      [&] { return options.formula_override ? options.formula_override(instance) : count_restricted(instance, cache); },
      unused);
  // the sweep itself is parallel, so each instance uses the serial kernels
  out.brute = run_engine([&] { return brute_force_count_serial(instance, options.brute_budget); }, out.brute_skipped);
  out.convolution = run_engine([&] { return convolution_count_serial(instance, options.convolution_budget); },
                               out.convolution_skipped);
  const auto is_error = [](const std::string& v) { return v.rfind("error", 0) == 0; };
  out.agree = !is_error(out.formula) && !is_error(out.brute) && !is_error(out.convolution) &&
              (out.brute_skipped || out.brute == out.formula) &&
              (out.convolution_skipped || out.convolution == out.formula);
  return out;
}

// All t in divisors(n)^k as an odometer over divisor indices; index 0 is the
// lexicographically smallest tuple.
std::vector<std::int64_t> tuple_at(const std::vector<std::int64_t>& ds, std::int64_t k, std::int64_t index) {
  std::vector<std::int64_t> t(static_cast<std::size_t>(k));
  const auto tau = static_cast<std::int64_t>(ds.size());
  for (std::int64_t i = k - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = ds[static_cast<std::size_t>(index % tau)];
    index /= tau;
  }
  return t;
}

std::vector<CongruenceInstance> cell_instances(std::int64_t n, int s, std::int64_t k, const VerifyOptions& options,
                                               CellSummary& cell) {
  const std::vector<std::int64_t> ds = divisors(n);
  const std::int64_t modulus = checked_pow(n, s);
  const std::int64_t tuples = checked_pow(static_cast<std::int64_t>(ds.size()), static_cast<int>(k));
  cell.population = modulus * tuples;

  std::vector<std::int64_t> picks;
  if (cell.population <= options.cell_cap) {
    picks.resize(static_cast<std::size_t>(cell.population));
    std::iota(picks.begin(), picks.end(), 0);
  } else {
    cell.sampled = true;
    std::seed_seq seq{static_cast<std::uint64_t>(options.seed), static_cast<std::uint64_t>(n),
                      static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(k)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::int64_t> pick(0, cell.population - 1);
    picks.resize(static_cast<std::size_t>(options.cell_cap));
    for (auto& p : picks) p = pick(rng);
    std::sort(picks.begin(), picks.end());
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
  }

  std::vector<CongruenceInstance> out;
  out.reserve(picks.size());
  for (const std::int64_t p : picks) {
    out.push_back({n, s, p / tuples, tuple_at(ds, k, p % tuples)});
  }
  return out;
}

}  // namespace

bool VerifyReport::ok() const noexcept {
  return mismatches.empty() &&
         std::all_of(suites.begin(), suites.end(), [](const SuiteResult& r) { return r.passed(); });
}

bool instance_less(const CongruenceInstance& a, const CongruenceInstance& b) {
  const auto ka = std::make_tuple(a.n, a.s, a.k(), a.reduced_b());
  const auto kb = std::make_tuple(b.n, b.s, b.k(), b.reduced_b());
  if (ka != kb) return ka < kb;
  return a.restrictions < b.restrictions;
}

SolutionCount mutated_formula_count(const CongruenceInstance& instance) {
  const ClassProfile profile = class_profile(instance);
  const std::int64_t modulus = instance.modulus();
  const std::int64_t b = instance.reduced_b();
  mpz_class sum;
  for (const std::int64_t d : profile.divisors) {
    mpz_class product = 1;
    const std::int64_t argument = modulus / checked_pow(d, instance.s);
    for (std::size_t j = 0; j < profile.divisors.size(); ++j) {
      for (std::int64_t g = 0; g < profile.multiplicities[j]; ++g) {
        product *= static_cast<long>(cohen_ramanujan(profile.divisors[j], instance.s, argument));
      }
    }
    sum += static_cast<long>(cohen_ramanujan(d, instance.s, b)) * product;
  }
  sum /= static_cast<long>(modulus);
  if (sgn(sum) < 0) sum = -sum;
  return SolutionCount(sum);
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.max_n < 1) throw DomainError("verify: max-n must be at least 1");
  if (options.min_k < 0 || options.max_k < options.min_k) throw DomainError("verify: need 0 <= min-k <= max-k");
  if (options.s_values.empty()) throw DomainError("verify: no s values given");
  for (const int s : options.s_values) {
    if (s < 1) throw DomainError("verify: s values must be positive");
  }

  VerifyReport report;
  std::vector<CongruenceInstance> instances;
  for (std::int64_t n = 1; n <= options.max_n; ++n) {
    for (const int s : options.s_values) {
      for (std::int64_t k = options.min_k; k <= options.max_k; ++k) {
        CellSummary cell{n, s, k};
        std::vector<CongruenceInstance> batch = cell_instances(n, s, k, options, cell);
        cell.checked = static_cast<std::int64_t>(batch.size());
        report.cells.push_back(cell);
        std::move(batch.begin(), batch.end(), std::back_inserter(instances));
      }
    }
  }

  std::vector<Outcome> outcomes(instances.size());
  RamanujanCache cache;
  const auto total = static_cast<std::int64_t>(instances.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    outcomes[idx] = check_instance(instances[idx], options, cache);
  }

  std::size_t cursor = 0;
  for (auto& cell : report.cells) {
    for (std::int64_t i = 0; i < cell.checked; ++i, ++cursor) {
      const Outcome& o = outcomes[cursor];
      cell.brute_skipped += o.brute_skipped ? 1 : 0;
      cell.convolution_skipped += o.convolution_skipped ? 1 : 0;
      if (!o.agree) report.mismatches.push_back({instances[cursor], o.formula, o.brute, o.convolution});
    }
  }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const Mismatch& a, const Mismatch& b) { return instance_less(a.instance, b.instance); });
  report.instances = total;
  if (options.run_properties) report.suites = run_property_suites();
  return report;
}

}  // namespace ramcong

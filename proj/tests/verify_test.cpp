// SPDX-License-Identifier: Apache-2.0

#include "ramcong/verify.hpp"

#include <gtest/gtest.h>

#include "ramcong/errors.hpp"

namespace ramcong {
namespace {

TEST(Verify, SmallSweepAgrees) {
  VerifyOptions opt;
  opt.max_n = 4;
  opt.max_k = 2;
  opt.run_properties = false;
  const VerifyReport report = run_verify(opt);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.mismatches.empty());
  // sum over n <= 4, s in {1,2}, k in {1,2} of n^s * tau(n)^k
  std::int64_t expected = 0;
  const std::int64_t tau[] = {0, 1, 2, 2, 3};
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t m : {n, n * n}) expected += m * (tau[n] + tau[n] * tau[n]);
  }
  EXPECT_EQ(report.instances, expected);
}

TEST(Verify, TrivialSweepChecksOneTuplePerResidue) {
  VerifyOptions opt;
  opt.max_n = 1;
  opt.s_values = {1};
  opt.max_k = 1;
  opt.run_properties = false;
  const VerifyReport report = run_verify(opt);
  EXPECT_TRUE(report.ok());
  ASSERT_EQ(report.cells.size(), 1U);
  EXPECT_EQ(report.cells[0].population, 1);
  EXPECT_EQ(report.instances, 1);
}

TEST(Verify, MutationIsDetectedWithReproducer) {
  VerifyOptions opt;
  opt.max_n = 4;
  opt.s_values = {1, 2};
  opt.max_k = 2;
  opt.run_properties = false;
  opt.formula_override = mutated_formula_count;
  const VerifyReport report = run_verify(opt);
  EXPECT_FALSE(report.ok());
  ASSERT_FALSE(report.mismatches.empty());
  EXPECT_TRUE(std::is_sorted(report.mismatches.begin(), report.mismatches.end(),
                             [](const Mismatch& a, const Mismatch& b) { return instance_less(a.instance, b.instance); }));
  // the reproducer is the smallest failing instance and the oracles agree on it
  const Mismatch& first = report.mismatches.front();
  EXPECT_EQ(first.brute, first.convolution);
  EXPECT_NE(first.formula, first.brute);
}

TEST(Verify, SubsamplingIsSeededAndDeterministic) {
  VerifyOptions opt;
  opt.max_n = 6;
  opt.s_values = {2};
  opt.max_k = 3;
  opt.cell_cap = 50;
  opt.seed = 7;
  opt.run_properties = false;
  const VerifyReport a = run_verify(opt);
  const VerifyReport b = run_verify(opt);
  EXPECT_TRUE(a.ok());
  ASSERT_EQ(a.cells.size(), b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    EXPECT_EQ(a.cells[i].checked, b.cells[i].checked);
    EXPECT_LE(a.cells[i].checked, 50);
  }
  EXPECT_TRUE(a.cells.back().sampled);
}

TEST(Verify, BudgetSkipsAreCounted) {
  VerifyOptions opt;
  opt.max_n = 4;
  opt.s_values = {2};
  opt.min_k = 3;
  opt.max_k = 3;
  opt.brute_budget = 10;
  opt.run_properties = false;
  const VerifyReport report = run_verify(opt);
  EXPECT_TRUE(report.ok());
  std::int64_t skipped = 0;
  for (const auto& c : report.cells) skipped += c.brute_skipped;
  EXPECT_GT(skipped, 0);
}

TEST(Verify, PropertySuitesAllPass) {
  for (const SuiteResult& r : run_property_suites()) EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
}

TEST(Verify, RejectsBadOptions) {
  VerifyOptions opt;
  opt.max_n = 0;
  EXPECT_THROW((void)run_verify(opt), DomainError);
  opt.max_n = 3;
  opt.s_values = {};
  EXPECT_THROW((void)run_verify(opt), DomainError);
  opt.s_values = {0};
  EXPECT_THROW((void)run_verify(opt), DomainError);
}

}  // namespace
}  // namespace ramcong

#include "cycorbit/analysis.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace cycorbit {
namespace {

TEST(StirlingTable, SmallValues) {
  const StirlingTable c(6);
  EXPECT_EQ(c(0, 0), 1);
  EXPECT_EQ(c(3, 1), 2);
  EXPECT_EQ(c(3, 2), 3);
  EXPECT_EQ(c(3, 3), 1);
  EXPECT_EQ(c(4, 1), 6);
  EXPECT_EQ(c(5, 2), 50);
  EXPECT_EQ(c(3, 0), 0);
  EXPECT_EQ(c(3, 5), 0);
  EXPECT_THROW(c(7, 1), std::out_of_range);
  EXPECT_THROW(stirling_table(501), std::invalid_argument);
}

TEST(StirlingTable, DiagonalAndFirstColumn) {
  const StirlingTable c(200);
  for (std::size_t n = 1; n <= 200; ++n) {
    EXPECT_EQ(c(n, n), 1);
    EXPECT_EQ(c(n, 0), 0);
    EXPECT_EQ(c(n, 1), factorial(n - 1));
  }
}

TEST(StirlingTable, RowsSumToFactorial) {
  const StirlingTable c(200);
  for (std::size_t n = 0; n <= 200; ++n) {
    BigInt sum = 0;
    for (std::size_t k = 0; k <= n; ++k) sum += c(n, k);
    ASSERT_EQ(sum, factorial(n)) << "n=" << n;
  }
}

TEST(HarmonicValues, Examples) {
  const HarmonicValues h(4);
  EXPECT_EQ(h.h1(0), 0);
  EXPECT_EQ(h.h1(1), 1);
  EXPECT_EQ(h.h1(3), Rational(11, 6));
  EXPECT_EQ(h.h2(2), Rational(5, 4));
  EXPECT_EQ(h.h3(2), Rational(9, 8));
  EXPECT_EQ(HarmonicValues::generalized(4, 2), h.h2(4));
  EXPECT_EQ(HarmonicValues::generalized(4, 3), h.h3(4));
}

TEST(CycleMoment, Examples) {
  const StirlingTable c(4);
  EXPECT_EQ(cycle_moment(c, 3, 1), Rational(11, 6));
  EXPECT_EQ(cycle_moment(c, 1, 1), 1);
  EXPECT_EQ(cycle_moment(c, 1, 2), 1);
  EXPECT_EQ(cycle_moment(c, 2, 3), Rational(9, 2));
}

TEST(MomentIdentities, FourthStirlingColumnAtFour) {
  const StirlingTable c(5);
  const HarmonicValues h(4);
  Rational lhs(c(5, 3), factorial(4));
  lhs.canonicalize();
  EXPECT_EQ(lhs, (h.h1(4) * h.h1(4) - h.h2(4)) / 2);
}

TEST(MomentIdentities, HoldExactlyUpTo200) {
  const MomentReport report = verify_moment_identities(200);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.identities.size(), 6u);
  EXPECT_EQ(report.checks, 6u * 200u);
  for (const auto& f : report.failures) {
    ADD_FAILURE() << f.identity << " fails at n=" << f.n;
  }
  EXPECT_THROW(verify_moment_identities(201), std::invalid_argument);
}

TEST(MomentIdentities, LiteralSuperscriptReadingFails) {
  // f(n) = H_n^2 - H_n^(n) + H_n agrees with the second moment only where
  // H_n^(n) happens to equal H_n^(2).
  const StirlingTable c(12);
  const HarmonicValues h(12);
  for (std::size_t n = 3; n <= 12; ++n) {
    const Rational f = cycle_moment(c, n, 2);
    const Rational literal = h.h1(n) * h.h1(n) - HarmonicValues::generalized(n, n) + h.h1(n);
    EXPECT_NE(f, literal) << "n=" << n;
    EXPECT_EQ(f, h.h1(n) * h.h1(n) - h.h2(n) + h.h1(n));
  }
}

TEST(AsymptoticRatio, ExactStartAndTrend) {
  const auto rows = asymptotic_ratio_report(100000);
  ASSERT_EQ(rows.size(), 100000u - 1);
  EXPECT_EQ(rows.front().n, 2u);
  const double ln2 = std::log(2.0);
  EXPECT_DOUBLE_EQ(rows.front().third_moment, 4.5);
  EXPECT_DOUBLE_EQ(rows.front().ratio, 4.5 / (ln2 * ln2 * ln2));
  EXPECT_TRUE(rows[198].exact);
  EXPECT_FALSE(rows[199].exact);
  for (const RatioRow& r : rows) {
    ASSERT_TRUE(std::isfinite(r.ratio));
    ASSERT_GT(r.ratio, 0);
  }
  // Sampled at decades from n = 10 the ratio falls steadily toward 1.
  double previous = rows[10 - 2].ratio;
  for (std::size_t n : {100, 1000, 10000, 100000}) {
    const double ratio = rows[n - 2].ratio;
    EXPECT_LT(ratio, previous) << "n=" << n;
    EXPECT_GT(ratio, 1.0) << "n=" << n;
    previous = ratio;
  }
  EXPECT_LT(std::abs(rows.back().ratio - 1), std::abs(rows[10 - 2].ratio - 1));
}

TEST(AsymptoticRatio, ClosedFormMatchesExactSum) {
  const auto rows = asymptotic_ratio_report(200);
  long double h = 0, h2 = 0, h3 = 0;
  for (std::size_t n = 1; n <= 200; ++n) {
    const long double k = static_cast<long double>(n);
    h += 1 / k;
    h2 += 1 / (k * k);
    h3 += 1 / (k * k * k);
    if (n < 2) continue;
    const long double closed = (h * h * h - 3 * h * h2 + 2 * h3) + 3 * (h * h - h2) + h;
    EXPECT_NEAR(rows[n - 2].third_moment, static_cast<double>(closed), 1e-9 * closed)
        << "n=" << n;
  }
}

TEST(AverageCost, SingletonIsConstant) {
  const AverageCostReport report = measure_average_cost(1, 50, 7);
  EXPECT_EQ(report.cycles.mean, 1);
  EXPECT_EQ(report.cycles.stddev, 0);
  EXPECT_EQ(report.word_ops.max, report.word_ops.p50);
}

TEST(AverageCost, MeanCycleCountMatchesHarmonic) {
  for (std::size_t n : {10, 100}) {
    const AverageCostReport report = measure_average_cost(n, 10000, 2024);
    EXPECT_LE(std::abs(report.cycles.mean - report.harmonic), 3 * report.cycles_standard_error)
        << "n=" << n << " mean=" << report.cycles.mean << " H=" << report.harmonic;
  }
}

TEST(AverageCost, DeterministicAcrossThreadCounts) {
  const AverageCostReport one = measure_average_cost(50, 200, 9, 1);
  const AverageCostReport four = measure_average_cost(50, 200, 9, 4);
  ASSERT_EQ(one.records.size(), four.records.size());
  for (std::size_t t = 0; t < one.records.size(); ++t) {
    EXPECT_EQ(one.records[t].k_cycles, four.records[t].k_cycles);
    EXPECT_EQ(one.records[t].word_ops, four.records[t].word_ops);
    EXPECT_EQ(one.records[t].max_bits, four.records[t].max_bits);
  }
  const AverageCostReport other = measure_average_cost(50, 200, 10, 1);
  bool differs = false;
  for (std::size_t t = 0; t < one.records.size(); ++t) {
    differs = differs || one.records[t].k_cycles != other.records[t].k_cycles;
  }
  EXPECT_TRUE(differs);
}

TEST(AverageCost, SummaryPercentilesAreOrdered) {
  const AverageCostReport report = measure_average_cost(200, 500, 3);
  EXPECT_LE(report.word_ops.p50, report.word_ops.p90);
  EXPECT_LE(report.word_ops.p90, report.word_ops.p99);
  EXPECT_LE(report.word_ops.p99, report.word_ops.max);
  EXPECT_GT(report.reduce_ops.mean, 0);
}

TEST(FitPolylogExponent, RecoversKnownExponent) {
  std::vector<std::pair<std::size_t, double>> points;
  for (std::size_t n : {10, 100, 1000, 10000}) {
    points.emplace_back(n, 7 * std::pow(std::log(static_cast<double>(n)), 3.0));
  }
  EXPECT_NEAR(fit_polylog_exponent(points), 3.0, 1e-9);
  EXPECT_THROW(fit_polylog_exponent({{10, 1.0}}), std::invalid_argument);
  EXPECT_THROW(fit_polylog_exponent({{10, 1.0}, {10, 2.0}}), std::invalid_argument);
}

TEST(FitPolylogExponent, SolverCostIsPolylogarithmic) {
  std::vector<std::pair<std::size_t, double>> points;
  for (std::size_t n : {100, 1000, 10000}) {
    points.emplace_back(n, measure_average_cost(n, 300, 5).word_ops.mean);
  }
  EXPECT_LE(fit_polylog_exponent(points), 5.0);
}

}  // namespace
}  // namespace cycorbit

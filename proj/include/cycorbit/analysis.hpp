#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cycorbit/bigint.hpp"

namespace cycorbit {

// Unsigned Stirling numbers of the first kind c(n, k) for 0 <= k <= n <= n_max,
// built from c(n+1, k) = n c(n, k) + c(n, k-1).
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t n_max);

  std::size_t n_max() const { return rows_.size() - 1; }
  // c(n, k); zero when k > n. Throws std::out_of_range when n > n_max.
  const BigInt& operator()(std::size_t n, std::size_t k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

// Throws std::invalid_argument when n_max > 500.
StirlingTable stirling_table(std::size_t n_max);

// Exact H_n, H_n^(2), H_n^(3) for n <= n_max.
class HarmonicValues {
 public:
  explicit HarmonicValues(std::size_t n_max);

  const Rational& h1(std::size_t n) const { return h1_.at(n); }
  const Rational& h2(std::size_t n) const { return h2_.at(n); }
  const Rational& h3(std::size_t n) const { return h3_.at(n); }

  // H_n^(s) for arbitrary order s.
  static Rational generalized(std::size_t n, std::size_t s);

 private:
  std::vector<Rational> h1_, h2_, h3_;
};

BigInt factorial(std::size_t n);

// (1/n!) sum_k k^p c(n, k): the p-th moment of the cycle count of a uniform
// permutation in S_n. Needs n <= table.n_max().
Rational cycle_moment(const StirlingTable& table, std::size_t n, unsigned p);

struct IdentityFailure {
  std::size_t n;
  std::string identity;
  Rational lhs;
  Rational rhs;
};

struct MomentReport {
  std::size_t n_max = 0;
  std::size_t checks = 0;
  std::vector<std::string> identities;
  std::vector<IdentityFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Checks, in exact rational arithmetic for every n in [1, n_max], that the
// cycle-count moments agree with their Stirling and harmonic closed forms:
//   mean:          (1/n!) sum k c(n,k)  = H_n
//   second-moment: f(n) = (2/n!) c(n+1,3) + H_n
//   third-moment:  g(n) = (6/n!) c(n+1,4) + (6/n!) c(n+1,3) + H_n
//   c(n+1,3):      (1/n!) c(n+1,3) = (H_n^2 - H_n^(2)) / 2
//   c(n+1,4):      (1/n!) c(n+1,4) = (H_n^3 - 3 H_n H_n^(2) + 2 H_n^(3)) / 6
//   f-closed-form: f(n) = H_n^2 - H_n^(2) + H_n
// f and g are summed directly from the table. Throws std::invalid_argument
// when n_max > 200.
MomentReport verify_moment_identities(std::size_t n_max);

struct RatioRow {
  std::size_t n;
  double third_moment;  // g(n)
  double ratio;         // g(n) / ln^3 n
  bool exact;           // g(n) came from exact summation
};

// g(n) / ln^3 n for n in [2, n_max]. Up to n = 200 g(n) is the exact
// Stirling sum; beyond it the harmonic closed form is evaluated in long
// double. Throws std::invalid_argument when n_max < 10.
std::vector<RatioRow> asymptotic_ratio_report(std::size_t n_max);

struct TrialRecord {
  std::size_t n;
  std::size_t trial;
  std::size_t k_cycles;
  std::uint64_t word_ops;    // congruence solver
  std::uint64_t max_bits;    // congruence solver
  std::uint64_t reduce_ops;  // reduction to the congruence system
};

struct Summary {
  double mean = 0;
  double stddev = 0;
  double p50 = 0;
  double p90 = 0;
  double p99 = 0;
  double max = 0;
};

struct AverageCostReport {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> records;  // ordered by trial
  Summary cycles;
  Summary word_ops;
  Summary max_bits;
  Summary reduce_ops;
  double harmonic = 0;               // H_n
  double cycles_standard_error = 0;  // stddev / sqrt(trials)
};

// Samples uniform permutations of S_n with a random binary v and
// w = g^r v for uniform r in [0, ord g), then runs the reduction and the
// congruence solver with separate cost counters. Trial t draws from its own
// generator seeded by (rng_seed, t), so results do not depend on `threads`.
AverageCostReport measure_average_cost(std::size_t n, std::size_t trials, std::uint64_t rng_seed,
                                       unsigned threads = 1);

// Least-squares slope of log(mean_ops) against log(ln n): the exponent c in
// mean_ops ~ (log n)^c. Needs at least two points with n >= 2.
double fit_polylog_exponent(const std::vector<std::pair<std::size_t, double>>& n_and_mean_ops);

}  // namespace cycorbit

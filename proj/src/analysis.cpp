#include "cycorbit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "cycorbit/congruence.hpp"
#include "cycorbit/orbit.hpp"
#include "cycorbit/permutation.hpp"
#include "parallel.hpp"

namespace cycorbit {

StirlingTable::StirlingTable(std::size_t n_max) : rows_(n_max + 1), zero_(0) {
  rows_[0] = {BigInt(1)};
  for (std::size_t n = 0; n < n_max; ++n) {
    const auto& prev = rows_[n];
    auto& row = rows_[n + 1];
    row.assign(n + 2, BigInt(0));
    for (std::size_t k = 1; k <= n + 1; ++k) {
      if (k <= n) row[k] = prev[k] * static_cast<unsigned long>(n);
      row[k] += prev[k - 1];
    }
  }
}

const BigInt& StirlingTable::operator()(std::size_t n, std::size_t k) const {
  if (n >= rows_.size()) throw std::out_of_range("Stirling table row out of range");
  return k <= n ? rows_[n][k] : zero_;
}

StirlingTable stirling_table(std::size_t n_max) {
  if (n_max > 500) throw std::invalid_argument("Stirling table limited to n <= 500");
  return StirlingTable(n_max);
}

HarmonicValues::HarmonicValues(std::size_t n_max)
    : h1_(n_max + 1, Rational(0)), h2_(n_max + 1, Rational(0)), h3_(n_max + 1, Rational(0)) {
  for (std::size_t n = 1; n <= n_max; ++n) {
    const unsigned long k = n;
    h1_[n] = h1_[n - 1] + Rational(1, k);
    h2_[n] = h2_[n - 1] + Rational(1, k * k);
    Rational cube(1);
    cube /= BigInt(k) * k * k;
    h3_[n] = h3_[n - 1] + cube;
  }
}

Rational HarmonicValues::generalized(std::size_t n, std::size_t s) {
  Rational sum(0);
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), k, s);
    Rational term(1);
    term /= power;
    sum += term;
  }
  return sum;
}

BigInt factorial(std::size_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational cycle_moment(const StirlingTable& table, std::size_t n, unsigned p) {
  BigInt sum = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), k, p);
    sum += weight * table(n, k);
  }
  Rational r(sum, factorial(n));
  r.canonicalize();
  return r;
}

MomentReport verify_moment_identities(std::size_t n_max) {
  if (n_max > 200) throw std::invalid_argument("identity check limited to n <= 200");
  MomentReport report;
  report.n_max = n_max;
  report.identities = {"mean", "second-moment", "third-moment", "c(n+1,3)", "c(n+1,4)",
                       "f-closed-form"};

  const StirlingTable table(n_max + 1);
  const HarmonicValues harmonic(n_max);

  auto check = [&](std::size_t n, const std::string& name, const Rational& lhs,
                   const Rational& rhs) {
    ++report.checks;
    if (lhs != rhs) report.failures.push_back({n, name, lhs, rhs});
  };

  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational& h = harmonic.h1(n);
    const Rational& h2 = harmonic.h2(n);
    const Rational& h3 = harmonic.h3(n);
    const BigInt fact = factorial(n);
    Rational c3(table(n + 1, 3), fact);
    Rational c4(table(n + 1, 4), fact);
    c3.canonicalize();
    c4.canonicalize();

    const Rational mean = cycle_moment(table, n, 1);
    const Rational f = cycle_moment(table, n, 2);
    const Rational g = cycle_moment(table, n, 3);

    check(n, "mean", mean, h);
    check(n, "second-moment", f, 2 * c3 + h);
    check(n, "third-moment", g, 6 * c4 + 6 * c3 + h);
    check(n, "c(n+1,3)", c3, (h * h - h2) / 2);
    check(n, "c(n+1,4)", c4, (h * h * h - 3 * h * h2 + 2 * h3) / 6);
    check(n, "f-closed-form", f, h * h - h2 + h);
  }
  return report;
}

std::vector<RatioRow> asymptotic_ratio_report(std::size_t n_max) {
  if (n_max < 10) throw std::invalid_argument("ratio report needs n_max >= 10");
  constexpr std::size_t kExactLimit = 200;
  const std::size_t exact_max = std::min(n_max, kExactLimit);
  const StirlingTable table(exact_max);

  std::vector<RatioRow> rows;
  long double h = 1, h2 = 1, h3 = 1;  // running values at n = 1
  for (std::size_t n = 2; n <= n_max; ++n) {
    const long double k = static_cast<long double>(n);
    h += 1 / k;
    h2 += 1 / (k * k);
    h3 += 1 / (k * k * k);
    RatioRow row{n, 0, 0, n <= exact_max};
    if (row.exact) {
      row.third_moment = cycle_moment(table, n, 3).get_d();
    } else {
      const long double c4 = (h * h * h - 3 * h * h2 + 2 * h3) / 6;
      const long double c3 = (h * h - h2) / 2;
      row.third_moment = static_cast<double>(6 * c4 + 6 * c3 + h);
    }
    const double ln = std::log(static_cast<double>(n));
    row.ratio = row.third_moment / (ln * ln * ln);
    rows.push_back(row);
  }
  return rows;
}

namespace {

Summary summarize(std::vector<double> values) {
  Summary s;
  if (values.empty()) return s;
  double sum = 0;
  for (double x : values) sum += x;
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0;
  for (double x : values) sq += (x - s.mean) * (x - s.mean);
  s.stddev = values.size() > 1 ? std::sqrt(sq / static_cast<double>(values.size() - 1)) : 0.0;
  std::sort(values.begin(), values.end());
  auto rank = [&](double q) {
    const auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size())));
    return values[std::min(values.size() - 1, idx == 0 ? 0 : idx - 1)];
  };
  s.p50 = rank(0.50);
  s.p90 = rank(0.90);
  s.p99 = rank(0.99);
  s.max = values.back();
  return s;
}

TrialRecord run_trial(std::size_t n, std::size_t trial, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);

  auto [g, cycles] = random_permutation(n, rng);
  std::string bits(n, '0');
  for (char& ch : bits) ch = (rng() & 1) != 0 ? '1' : '0';
  const Configuration v(std::move(bits));

  const BigInt r = random_below(order(g), rng);
  const Configuration w = apply_power(g, r, v);

  CostCounter reduce_cost;
  CostCounter solve_cost;
  const auto system = reduce(g, v, w, &reduce_cost);
  if (!system) throw std::logic_error("orbit instance rejected by the reduction");
  const ArithmeticProgression solutions = solve_system(*system, solve_cost);
  if (!solutions.contains(r)) throw std::logic_error("solver lost the planted exponent");

  return {n, trial, cycles, solve_cost.word_ops(), solve_cost.max_bits(), reduce_cost.word_ops()};
}

}  // namespace

AverageCostReport measure_average_cost(std::size_t n, std::size_t trials, std::uint64_t rng_seed,
                                       unsigned threads) {
  if (n == 0 || trials == 0) throw std::invalid_argument("n and trials must be positive");
  AverageCostReport report;
  report.n = n;
  report.trials = trials;
  report.seed = rng_seed;
  report.records.resize(trials);

  detail::parallel_for(trials, threads,
                       [&](std::size_t t) { report.records[t] = run_trial(n, t, rng_seed); });

  std::vector<double> cycles, ops, bits, reduce_ops;
  for (const TrialRecord& rec : report.records) {
    cycles.push_back(static_cast<double>(rec.k_cycles));
    ops.push_back(static_cast<double>(rec.word_ops));
    bits.push_back(static_cast<double>(rec.max_bits));
    reduce_ops.push_back(static_cast<double>(rec.reduce_ops));
  }
  report.cycles = summarize(std::move(cycles));
  report.word_ops = summarize(std::move(ops));
  report.max_bits = summarize(std::move(bits));
  report.reduce_ops = summarize(std::move(reduce_ops));
  double h = 0;
  for (std::size_t k = 1; k <= n; ++k) h += 1.0 / static_cast<double>(k);
  report.harmonic = h;
  report.cycles_standard_error = report.cycles.stddev / std::sqrt(static_cast<double>(trials));
  return report;
}

double fit_polylog_exponent(const std::vector<std::pair<std::size_t, double>>& n_and_mean_ops) {
  if (n_and_mean_ops.size() < 2) throw std::invalid_argument("need at least two sizes");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, ops] : n_and_mean_ops) {
    if (n < 2 || ops <= 0) throw std::invalid_argument("sizes must be >= 2 with positive cost");
    const double x = std::log(std::log(static_cast<double>(n)));
    const double y = std::log(ops);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(n_and_mean_ops.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("sizes must differ");
  return (m * sxy - sx * sy) / denom;
}

}  // namespace cycorbit

#include "cycorbit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "parallel.hpp"

namespace cycorbit {

std::uint64_t instance_size_bits(const Permutation& g, const Configuration& v,
                                 const Configuration& w) {
  std::uint64_t bits = 0;
  for (const Cycle& c : g.cycles()) {
    for (std::size_t j : c.elements()) bits += bit_length(static_cast<std::uint64_t>(j + 1));
  }
  std::set<char> symbols(v.str().begin(), v.str().end());
  symbols.insert(w.str().begin(), w.str().end());
  const std::uint64_t per_symbol =
      std::max<std::uint64_t>(1, bit_length(static_cast<std::uint64_t>(symbols.size() - 1)));
  return bits + per_symbol * (v.size() + w.size());
}

namespace {

struct Instance {
  std::size_t size_parameter;
  Permutation g;
  Configuration v;
  Configuration w;
  BigInt planted;
};

ScalingRow measure(const Instance& inst, std::size_t repetitions, bool timed) {
  ScalingRow row;
  row.size_parameter = inst.size_parameter;
  row.degree = inst.g.degree();
  row.input_size_bits = instance_size_bits(inst.g, inst.v, inst.w);
  row.order = order(inst.g);
  row.planted_exponent = inst.planted;

  CostCounter counter;
  row.result = decide_orbit(inst.g, inst.v, inst.w, &counter);
  row.word_ops = counter.word_ops();
  row.max_bits = counter.max_bits();
  row.recovered = row.result.in_orbit() && row.result.solutions().contains(inst.planted) &&
                  apply_power(inst.g, row.result.witness(), inst.v) == inst.w;

  if (timed) {
    std::vector<double> samples;
    for (std::size_t rep = 0; rep < std::max<std::size_t>(5, repetitions); ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const OrbitAnswer answer = decide_orbit(inst.g, inst.v, inst.w);
      const auto stop = std::chrono::steady_clock::now();
      if (!(answer == row.result)) throw std::logic_error("nondeterministic orbit answer");
      samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
    }
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
    row.wall_time_ns = samples[samples.size() / 2];
  }
  return row;
}

ScalingReport run_all(std::vector<Instance> instances, const ScalingOptions& options) {
  ScalingReport report;
  report.seed = options.seed;
  report.rows.resize(instances.size());
  const bool timed = options.parallel_threads == 0;
  detail::parallel_for(instances.size(), std::max(1u, options.parallel_threads),
                       [&](std::size_t i) {
                         report.rows[i] = measure(instances[i], options.repetitions, timed);
                       });
  return report;
}

}  // namespace

ScalingReport run_primorial_scaling(std::size_t i_max, const ScalingOptions& options) {
  if (i_max < 1 || i_max > 25) throw std::invalid_argument("i_max must lie in [1, 25]");
  std::mt19937_64 rng(options.seed);
  std::vector<Instance> instances;
  for (std::size_t i = 1; i <= i_max; ++i) {
    Permutation g = primorial_permutation(i);
    std::string marks(g.degree(), '0');
    for (const Cycle& c : g.cycles()) marks[c[0]] = '1';
    Configuration v(std::move(marks));
    BigInt planted = random_below(order(g), rng);
    Configuration w = apply_power(g, planted, v);
    instances.push_back({i, std::move(g), std::move(v), std::move(w), std::move(planted)});
  }
  return run_all(std::move(instances), options);
}

ScalingReport run_random_scaling(const std::vector<std::size_t>& degrees,
                                 const ScalingOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<Instance> instances;
  for (std::size_t n : degrees) {
    auto [g, cycles] = random_permutation(n, rng);
    std::string bits(n, '0');
    for (char& ch : bits) ch = (rng() & 1) != 0 ? '1' : '0';
    Configuration v(std::move(bits));
    BigInt planted = random_below(order(g), rng);
    Configuration w = apply_power(g, planted, v);
    instances.push_back({n, std::move(g), std::move(v), std::move(w), std::move(planted)});
  }
  return run_all(std::move(instances), options);
}

double top_decade_cost_spread(const ScalingReport& report) {
  if (report.rows.empty()) throw std::invalid_argument("empty report");
  std::uint64_t largest = 0;
  for (const ScalingRow& row : report.rows) largest = std::max(largest, row.input_size_bits);
  double lo = 0, hi = 0;
  bool first = true;
  for (const ScalingRow& row : report.rows) {
    if (10 * row.input_size_bits < largest) continue;
    const double ratio =
        static_cast<double>(row.word_ops) / static_cast<double>(row.input_size_bits);
    lo = first ? ratio : std::min(lo, ratio);
    hi = first ? ratio : std::max(hi, ratio);
    first = false;
  }
  return hi / lo;
}

void write_scaling_csv(const ScalingReport& report, std::ostream& out, bool with_timing) {
  out << "size_parameter,degree,input_size_bits,word_ops,max_bits,order,planted_exponent,"
         "witness,period,recovered";
  if (with_timing) out << ",wall_time_ns";
  out << '\n';
  for (const ScalingRow& row : report.rows) {
    out << row.size_parameter << ',' << row.degree << ',' << row.input_size_bits << ','
        << row.word_ops << ',' << row.max_bits << ',' << row.order.get_str() << ','
        << row.planted_exponent.get_str() << ','
        << (row.result.in_orbit() ? row.result.witness().get_str() : "") << ','
        << (row.result.in_orbit() ? row.result.solutions().period().get_str() : "") << ','
        << (row.recovered ? 1 : 0);
    if (with_timing) out << ',' << static_cast<std::uint64_t>(row.wall_time_ns);
    out << '\n';
  }
}

}  // namespace cycorbit

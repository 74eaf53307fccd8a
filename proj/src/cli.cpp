#include "cycorbit/cli.hpp"

#include <fstream>
#include <iomanip>

#include <CLI11.hpp>

#include "cycorbit/analysis.hpp"
#include "cycorbit/bench.hpp"
#include "cycorbit/crt_solver.hpp"
#include "cycorbit/instance.hpp"
#include "cycorbit/orbit.hpp"
#include "cycorbit/oracle.hpp"

namespace cycorbit::cli {

namespace {

// Loads and parses a file, turning every input problem into a diagnostic.
template <typename Parse>
auto load(const std::string& path, std::ostream& err, Parse parse)
    -> std::optional<decltype(parse(std::string_view{}))> {
  try {
    const std::string text = read_file(path);
    return parse(text);
  } catch (const InputError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << path << ": " << e.what() << '\n';
  }
  return std::nullopt;
}

std::ostream& print_system(std::ostream& os, const CongruenceSystem& system) {
  for (const Congruence& eq : system.equations()) {
    os << eq.residue.get_str() << " mod " << eq.modulus.get_str() << '\n';
  }
  return os;
}

}  // namespace

int cmd_solve(const std::string& path, std::ostream& out, std::ostream& err, bool verbose) {
  const auto inst = load(path, err, parse_instance);
  if (!inst) return kInputError;
  CostCounter counter;
  if (verbose) {
    const auto system = reduce(inst->perm, inst->v, inst->w);
    if (system) {
      err << "system:\n";
      print_system(err, *system);
    } else {
      err << "reduction rejected the instance\n";
    }
  }
  const OrbitAnswer answer = decide_orbit(inst->perm, inst->v, inst->w, &counter);
  out << answer.to_string() << '\n';
  if (verbose) {
    err << "word_ops " << counter.word_ops() << "\nmax_bits " << counter.max_bits() << '\n';
  }
  return answer.in_orbit() ? kYes : kNo;
}

int cmd_oracle(const std::string& path, std::uint64_t bound, std::ostream& out,
               std::ostream& err) {
  const auto inst = load(path, err, parse_instance);
  if (!inst) return kInputError;
  try {
    const OrbitAnswer answer = brute_force_orbit(inst->perm, inst->v, inst->w, bound);
    out << answer.to_string() << '\n';
    return answer.in_orbit() ? kYes : kNo;
  } catch (const OracleBoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kOracleBound;
  }
}

int cmd_congruence(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto system = load(path, err, parse_congruence_system);
  if (!system) return kInputError;
  const ArithmeticProgression solutions = solve_system(*system);
  out << solutions.to_string() << '\n';
  return solutions.is_empty() ? kNo : kYes;
}

int cmd_crt_check(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto system = load(path, err, parse_congruence_system);
  if (!system) return kInputError;
  CrtReport report;
  try {
    report = crt_check(*system);
  } catch (const std::overflow_error& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return kInputError;
  }
  out << (report.solvable ? "SOLVABLE" : "UNSOLVABLE") << '\n'
      << "p_max " << report.p_max << '\n'
      << "e_max " << report.e_max << '\n'
      << "prime_power_equations " << report.prime_power_equations << '\n'
      << "factor_bit_ops " << report.factor_bit_ops << '\n'
      << "split_bit_ops " << report.split_bit_ops << '\n'
      << "scan_bit_ops " << report.scan_bit_ops << '\n';
  return report.solvable ? kYes : kNo;
}

int cmd_stirling(std::size_t max_n, std::size_t ratio_max, std::ostream& out, std::ostream& err) {
  if (max_n < 1 || max_n > 200) {
    err << "error: --max-n must lie in [1, 200]\n";
    return kInputError;
  }
  const MomentReport report = verify_moment_identities(max_n);
  for (const std::string& name : report.identities) {
    std::size_t failed = 0;
    for (const IdentityFailure& f : report.failures) failed += f.identity == name ? 1 : 0;
    out << "identity " << name << " n=1.." << max_n << ' ' << (failed == 0 ? "OK" : "FAILED")
        << '\n';
  }
  for (const IdentityFailure& f : report.failures) {
    out << "failure " << f.identity << " n=" << f.n << " lhs=" << f.lhs.get_str()
        << " rhs=" << f.rhs.get_str() << '\n';
  }
  out << "checks " << report.checks << " failures " << report.failures.size() << '\n';

  if (ratio_max != 0) {
    if (ratio_max < 10) {
      err << "error: --ratio-max must be at least 10\n";
      return kInputError;
    }
    out << "n,g(n),g(n)/ln^3(n)\n" << std::setprecision(10);
    for (const RatioRow& row : asymptotic_ratio_report(ratio_max)) {
      out << row.n << ',' << row.third_moment << ',' << row.ratio << '\n';
    }
  }
  return report.ok() ? kYes : kNo;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  std::ofstream csv;
  if (args.csv_path) {
    csv.open(*args.csv_path);
    if (!csv) {
      err << "error: cannot write '" << *args.csv_path << "'\n";
      return kInputError;
    }
  }

  try {
    if (args.mode == "average") {
      const AverageCostReport report =
          measure_average_cost(args.n, args.trials, args.seed, args.threads);
      out << std::setprecision(6) << "n " << report.n << "\ntrials " << report.trials
          << "\nseed " << report.seed << "\nmean_cycles " << report.cycles.mean
          << "\nharmonic " << report.harmonic << "\ncycles_stderr "
          << report.cycles_standard_error << "\nmean_word_ops " << report.word_ops.mean
          << "\np50_word_ops " << report.word_ops.p50 << "\np90_word_ops "
          << report.word_ops.p90 << "\np99_word_ops " << report.word_ops.p99
          << "\nmean_max_bits " << report.max_bits.mean << "\nmean_reduce_ops "
          << report.reduce_ops.mean << '\n';
      if (csv.is_open()) {
        csv << "n,trial,k_cycles,word_ops,max_bits\n";
        for (const TrialRecord& r : report.records) {
          csv << r.n << ',' << r.trial << ',' << r.k_cycles << ',' << r.word_ops << ','
              << r.max_bits << '\n';
        }
      }
      return kYes;
    }

    ScalingOptions options;
    options.seed = args.seed;
    options.parallel_threads = args.threads > 1 ? args.threads : 0;
    ScalingReport report;
    if (args.mode == "primorial") {
      report = run_primorial_scaling(args.max_i, options);
    } else if (args.mode == "random") {
      report = run_random_scaling(args.sizes.empty() ? std::vector<std::size_t>{args.n}
                                                     : args.sizes,
                                  options);
    } else {
      err << "error: unknown bench mode '" << args.mode << "'\n";
      return kInputError;
    }

    bool all_recovered = true;
    out << "seed " << report.seed << '\n'
        << "size degree input_bits word_ops max_bits ops_per_bit recovered median_ns\n";
    for (const ScalingRow& row : report.rows) {
      all_recovered = all_recovered && row.recovered;
      out << row.size_parameter << ' ' << row.degree << ' ' << row.input_size_bits << ' '
          << row.word_ops << ' ' << row.max_bits << ' ' << std::setprecision(4)
          << static_cast<double>(row.word_ops) / static_cast<double>(row.input_size_bits)
          << ' ' << (row.recovered ? "yes" : "NO") << ' '
          << static_cast<std::uint64_t>(row.wall_time_ns) << '\n';
    }
    out << "top_decade_spread " << top_decade_cost_spread(report) << '\n';
    if (csv.is_open()) write_scaling_csv(report, csv, args.with_timing);
    return all_recovered ? kYes : kNo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit problem over cyclic permutation groups"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::optional<std::string> csv_path;
  bool verbose = false;
  app.add_option("--seed", seed, "random seed for bench runs");
  app.add_option("--csv", csv_path, "write machine-readable bench rows to this file");
  app.add_flag("-v,--verbose", verbose, "print intermediate results to stderr");

  std::string path;
  auto* solve = app.add_subcommand("solve", "decide an orbit instance file");
  solve->add_option("instance", path, "instance file")->required();
  solve->fallthrough();

  std::uint64_t bound = 1'000'000;
  auto* oracle = app.add_subcommand("oracle", "brute-force an orbit instance file");
  oracle->add_option("instance", path, "instance file")->required();
  oracle->add_option("--bound", bound, "largest group order to enumerate");
  oracle->fallthrough();

  auto* congruence = app.add_subcommand("congruence", "solve a congruence system file");
  congruence->add_option("system", path, "system file, one 'a mod b' per line")->required();
  congruence->fallthrough();

  auto* crt = app.add_subcommand("crt-check", "decide solvability by prime-power splitting");
  crt->add_option("system", path, "system file, one 'a mod b' per line")->required();
  crt->fallthrough();

  std::size_t max_n = 20;
  std::size_t ratio_max = 0;
  auto* stirling = app.add_subcommand("stirling", "check the cycle-count moment identities");
  stirling->add_option("--max-n", max_n, "check every n in [1, K]");
  stirling->add_option("--ratio-max", ratio_max, "also print g(n)/ln^3 n up to this n");
  stirling->fallthrough();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "scaling and average-case measurements");
  bench->add_option("--mode", bench_args.mode, "primorial | random | average")
      ->check(CLI::IsMember({"primorial", "random", "average"}));
  bench->add_option("--max-i", bench_args.max_i, "largest primorial index (<= 25)");
  bench->add_option("--n", bench_args.n, "permutation degree");
  bench->add_option("--sizes", bench_args.sizes, "degrees for random mode");
  bench->add_option("--trials", bench_args.trials, "trials for average mode");
  bench->add_option("--threads", bench_args.threads, "worker threads (untimed when > 1)");
  bench->add_flag("--with-timing", bench_args.with_timing, "add wall time to the CSV");
  bench->fallthrough();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kInputError;
  }

  if (*solve) return cmd_solve(path, out, err, verbose);
  if (*oracle) return cmd_oracle(path, bound, out, err);
  if (*congruence) return cmd_congruence(path, out, err);
  if (*crt) return cmd_crt_check(path, out, err);
  if (*stirling) return cmd_stirling(max_n, ratio_max, out, err);
  bench_args.seed = seed;
  bench_args.csv_path = csv_path;
  return cmd_bench(bench_args, out, err);
}

}  // namespace cycorbit::cli

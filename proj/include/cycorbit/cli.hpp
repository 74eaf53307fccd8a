#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cycorbit::cli {

// Exit statuses shared by all subcommands.
enum ExitCode : int {
  kYes = 0,         // in orbit / solvable / all identities hold / bench ok
  kNo = 1,          // not in orbit / unsolvable / identity failure
  kInputError = 2,  // unreadable or malformed input, bad arguments
  kOracleBound = 3  // oracle refused: group order above its bound
};

int cmd_solve(const std::string& path, std::ostream& out, std::ostream& err, bool verbose);
int cmd_oracle(const std::string& path, std::uint64_t bound, std::ostream& out,
               std::ostream& err);
int cmd_congruence(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_crt_check(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_stirling(std::size_t max_n, std::size_t ratio_max, std::ostream& out, std::ostream& err);

struct BenchArgs {
  std::string mode = "primorial";  // primorial | random | average
  std::size_t max_i = 10;
  std::size_t n = 100;
  std::size_t trials = 1000;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 1;
  std::optional<std::string> csv_path;
  unsigned threads = 1;
  bool with_timing = false;
};
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

// Full command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycorbit::cli

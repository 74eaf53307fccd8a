#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cycorbit/orbit.hpp"

namespace cycorbit {

// Encoded size of an orbit instance: the bit lengths of every index written
// in the cycle notation plus ceil(log2 |symbols|) bits per position of v and w.
std::uint64_t instance_size_bits(const Permutation& g, const Configuration& v,
                                 const Configuration& w);

struct ScalingRow {
  std::size_t size_parameter = 0;  // i for the primorial family, n otherwise
  std::size_t degree = 0;
  std::uint64_t input_size_bits = 0;
  double wall_time_ns = 0;  // median over repetitions; 0 when not timed
  std::uint64_t word_ops = 0;
  std::uint64_t max_bits = 0;
  BigInt order;
  BigInt planted_exponent;
  OrbitAnswer result = OrbitAnswer::not_in_orbit();
  bool recovered = false;  // result contains the planted exponent
};

struct ScalingReport {
  std::uint64_t seed = 0;
  std::vector<ScalingRow> rows;  // input_size_bits strictly increasing
};

struct ScalingOptions {
  std::uint64_t seed = 1;
  std::size_t repetitions = 5;  // timed runs per row, at least 5
  // Correctness-only sweep: rows run concurrently and are not timed.
  unsigned parallel_threads = 0;
};

// For i = 1..i_max: g = primorial_permutation(i), v marks the first index of
// every cycle, w = g^r v for a seeded random r < ord(g). Times reduce +
// solve_system and records whether r was recovered. Throws
// std::invalid_argument unless 1 <= i_max <= 25.
ScalingReport run_primorial_scaling(std::size_t i_max, const ScalingOptions& options = {});

// Same measurement on uniform random permutations of the given degrees with a
// random binary v.
ScalingReport run_random_scaling(const std::vector<std::size_t>& degrees,
                                 const ScalingOptions& options = {});

// Ratio of the largest to the smallest word_ops / input_size_bits among rows
// whose input size is at least a tenth of the largest.
double top_decade_cost_spread(const ScalingReport& report);

void write_scaling_csv(const ScalingReport& report, std::ostream& out, bool with_timing);

}  // namespace cycorbit

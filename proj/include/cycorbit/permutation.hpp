#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cycorbit/bigint.hpp"

namespace cycorbit {

// Malformed textual input. `position` is the 1-based column of the offending
// character within the text that was being parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at column " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A cycle (j_1, ..., j_k). Stored 0-based; the element order is the order in
// which the cycle was written and determines how configurations are projected
// onto it.
class Cycle {
 public:
  explicit Cycle(std::vector<std::size_t> elements);

  std::span<const std::size_t> elements() const { return elements_; }
  std::size_t length() const { return elements_.size(); }
  std::size_t operator[](std::size_t t) const { return elements_[t]; }

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<std::size_t> elements_;
};

// A string over a finite alphabet of single characters.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::string symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const { return symbols_.size(); }
  char operator[](std::size_t i) const { return symbols_[i]; }
  char& operator[](std::size_t i) { return symbols_[i]; }
  const std::string& str() const { return symbols_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::string symbols_;
};

// A permutation of {1..n} given as a product of pairwise-disjoint cycles.
// Cycles of length one are dropped on construction; every index not covered
// by a stored cycle is a fixed point.
class Permutation {
 public:
  static Permutation identity(std::size_t n);

  // `cycles` uses 1-based indices. Throws std::invalid_argument on an index
  // outside [1, n], a repeated index, or an empty cycle.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const { return n_; }
  std::span<const Cycle> cycles() const { return cycles_; }
  std::span<const std::size_t> fixed_points() const { return fixed_points_; }

  // Image of a 0-based index.
  std::size_t image(std::size_t j) const;

  // Cycle notation with 1-based indices, e.g. "(6,5,7,3,2,1)(4,8)".
  // The identity formats as "".
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.cycles_ == b.cycles_;
  }

 private:
  Permutation(std::size_t n, std::vector<Cycle> cycles);

  std::size_t n_ = 0;
  std::vector<Cycle> cycles_;
  std::vector<std::size_t> fixed_points_;
  // cycle_of_[j] = (cycle index, position in cycle) or npos for fixed points.
  std::vector<std::size_t> cycle_of_;
  std::vector<std::size_t> slot_of_;
};

// Parses concatenated cycle notation. Whitespace may appear between tokens.
Permutation parse_permutation(std::string_view text, std::size_t n);

// Position pi(j) of the result holds v_j.
Configuration apply(const Permutation& g, const Configuration& v);

// g^r v, computed per cycle by rotating r mod |c| steps.
Configuration apply_power(const Permutation& g, const BigInt& r, const Configuration& v);

// v[c] = v_{j_1} ... v_{j_k} in the cycle's stored order.
std::string project(const Configuration& v, const Cycle& c);

// lcm of the cycle lengths.
BigInt order(const Permutation& g);

// The first `count` primes, ascending.
std::vector<std::size_t> first_primes(std::size_t count);

// (1,2)(3,4,5)(6,...,10)... : i disjoint consecutive cycles of prime lengths
// p_1..p_i, so the order is the i-th primorial.
Permutation primorial_permutation(std::size_t i);

struct RandomPermutation {
  Permutation permutation;
  // Cycle count in S_n, fixed points included.
  std::size_t cycle_count;
};

// Uniform over S_n: Fisher-Yates shuffle, then cycle decomposition starting
// each cycle at its smallest unvisited index.
RandomPermutation random_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace cycorbit

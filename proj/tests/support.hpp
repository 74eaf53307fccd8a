#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "cycorbit/congruence.hpp"
#include "cycorbit/permutation.hpp"

namespace cycorbit::testing {

inline std::string random_string(std::mt19937_64& rng, std::size_t length,
                                 std::size_t alphabet_size) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet_size - 1);
  std::string s(length, 'a');
  for (char& ch : s) ch = static_cast<char>('a' + pick(rng));
  return s;
}

// Cycle decomposition of a 0-based one-line image, 1-cycles included.
inline Permutation from_image(const std::vector<std::size_t>& image) {
  std::vector<bool> seen(image.size(), false);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t s = 0; s < image.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = s; !seen[j]; j = image[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
    }
    cycles.push_back(cycle);
  }
  return Permutation::from_cycles(image.size(), cycles);
}

// Random permutation whose cycles start at a random element, so stored cycle
// order is not always smallest-first.
inline Permutation random_rotated_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  std::shuffle(image.begin(), image.end(), rng);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> starts(n);
  for (std::size_t i = 0; i < n; ++i) starts[i] = i;
  std::shuffle(starts.begin(), starts.end(), rng);
  for (std::size_t s : starts) {
    if (seen[s]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = s; !seen[j]; j = image[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
    }
    cycles.push_back(cycle);
  }
  std::shuffle(cycles.begin(), cycles.end(), rng);
  return Permutation::from_cycles(n, cycles);
}

inline CongruenceSystem random_system(std::mt19937_64& rng, std::size_t max_equations,
                                      std::uint64_t max_modulus) {
  std::uniform_int_distribution<std::size_t> count(0, max_equations);
  std::uniform_int_distribution<std::uint64_t> modulus(1, max_modulus);
  CongruenceSystem system;
  const std::size_t m = count(rng);
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t b = modulus(rng);
    std::uniform_int_distribution<std::uint64_t> residue(0, b - 1);
    system.add(residue(rng), b);
  }
  return system;
}

}  // namespace cycorbit::testing

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cycorbit {

using BigInt = mpz_class;
using Rational = mpq_class;

// Number of bits in |x| without leading zeros; 0 has bit length 0.
inline std::size_t bit_length(const BigInt& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline std::size_t bit_length(std::uint64_t x) {
  std::size_t bits = 0;
  while (x != 0) {
    ++bits;
    x >>= 1;
  }
  return bits;
}

inline BigInt to_bigint(std::uint64_t x) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
  return r;
}

// Throws std::overflow_error when x is negative or wider than 64 bits.
inline std::uint64_t to_u64(const BigInt& x) {
  if (sgn(x) < 0 || bit_length(x) > 64) {
    throw std::overflow_error("value " + x.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
  return out;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

// Uniform in [0, bound) by rejection sampling on bit_length(bound) random
// bits. Requires bound > 0.
inline BigInt random_below(const BigInt& bound, std::mt19937_64& rng) {
  const std::size_t bits = bit_length(bound);
  std::vector<std::uint64_t> words((bits + 63) / 64);
  const std::size_t top_bits = bits % 64;
  BigInt r;
  do {
    for (auto& word : words) word = rng();
    if (top_bits != 0) words.back() &= (std::uint64_t{1} << top_bits) - 1;
    mpz_import(r.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
  } while (r >= bound);
  return r;
}

}  // namespace cycorbit

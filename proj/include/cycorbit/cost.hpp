#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "cycorbit/bigint.hpp"

namespace cycorbit {

// Word-operation accounting for the bit-complexity experiments. A primitive
// big-integer operation whose widest operand has `bits` bits costs
// ceil(bits / kWordBits) units (at least one). `max_bits` tracks the widest
// value the algorithm kept alive.
class CostCounter {
 public:
  static constexpr std::size_t kWordBits = 64;

  void charge_units(std::uint64_t units) { word_ops_ += units; }

  void charge_bits(std::size_t bits) {
    word_ops_ += std::max<std::uint64_t>(1, (bits + kWordBits - 1) / kWordBits);
  }

  // One primitive operation over the given operands.
  template <typename... Ts>
  void charge(const Ts&... operands) {
    std::size_t widest = 0;
    ((widest = std::max(widest, bit_length(operands))), ...);
    charge_bits(widest);
  }

  template <typename... Ts>
  void observe(const Ts&... values) {
    ((max_bits_ = std::max<std::uint64_t>(max_bits_, bit_length(values))), ...);
  }

  std::uint64_t word_ops() const { return word_ops_; }
  std::uint64_t max_bits() const { return max_bits_; }

  CostCounter& operator+=(const CostCounter& other) {
    word_ops_ += other.word_ops_;
    max_bits_ = std::max(max_bits_, other.max_bits_);
    return *this;
  }

 private:
  std::uint64_t word_ops_ = 0;
  std::uint64_t max_bits_ = 0;
};

}  // namespace cycorbit

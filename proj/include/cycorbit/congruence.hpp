#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycorbit/bigint.hpp"
#include "cycorbit/cost.hpp"

namespace cycorbit {

// Either the empty set or a + bZ with 0 <= a < b.
class ArithmeticProgression {
 public:
  static ArithmeticProgression empty() { return ArithmeticProgression(); }

  // Reduces `offset` into [0, period). Throws std::invalid_argument if
  // period <= 0.
  static ArithmeticProgression of(BigInt offset, BigInt period);

  bool is_empty() const { return empty_; }
  const BigInt& offset() const;
  const BigInt& period() const;
  bool contains(const BigInt& x) const;

  // "EMPTY" or "a + b Z".
  std::string to_string() const;

  friend bool operator==(const ArithmeticProgression& x, const ArithmeticProgression& y) {
    if (x.empty_ || y.empty_) return x.empty_ == y.empty_;
    return x.offset_ == y.offset_ && x.period_ == y.period_;
  }

 private:
  ArithmeticProgression() = default;

  bool empty_ = true;
  BigInt offset_;
  BigInt period_;
};

// x == residue (mod modulus)
struct Congruence {
  BigInt residue;
  BigInt modulus;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

class CongruenceSystem {
 public:
  CongruenceSystem() = default;

  // Throws std::invalid_argument unless 0 <= residue < modulus.
  void add(BigInt residue, BigInt modulus);
  void add(std::uint64_t residue, std::uint64_t modulus) {
    add(to_bigint(residue), to_bigint(modulus));
  }

  const std::vector<Congruence>& equations() const { return equations_; }
  std::size_t size() const { return equations_.size(); }
  bool empty() const { return equations_.empty(); }

  friend bool operator==(const CongruenceSystem&, const CongruenceSystem&) = default;

 private:
  std::vector<Congruence> equations_;
};

// Solution set of a*x == b (mod n) via the extended Euclidean algorithm: empty
// unless d = gcd(a, n) divides b, otherwise x0 + (n/d)Z with the minimal
// x0 >= 0. Throws std::invalid_argument if n < 1.
ArithmeticProgression solve_linear_congruence(const BigInt& a, const BigInt& b, const BigInt& n,
                                              CostCounter* counter = nullptr);

// Intersection of residue classes, folded one equation at a time from 0 + 1Z.
// Step i solves b*y == a_i - a (mod b_i) and sets a := y0*b + a, b := b*b'.
ArithmeticProgression solve_system(const CongruenceSystem& system, CostCounter& counter);
ArithmeticProgression solve_system(const CongruenceSystem& system);

class ScanBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reference answer by sieving: the solutions of the first i equations form
// a + L Z, and candidates a + L t for t in [0, b_{i+1}) are tried one by one
// against the next equation. Throws ScanBoundExceeded if some modulus exceeds
// `scan_bound`.
ArithmeticProgression naive_intersection(const CongruenceSystem& system,
                                         std::uint64_t scan_bound = 1'000'000);

}  // namespace cycorbit

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cycorbit/congruence.hpp"

namespace cycorbit {

// Solvability of congruence systems whose numbers are small enough to count
// as unary-encoded: each modulus is split into prime-power equations by the
// CRT, and equations over the same prime are checked against each other
// through two lookup tables. Moduli must fit in 64 bits.

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// x == residue (mod prime^exponent)
struct PrimePowerEquation {
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t residue;

  std::uint64_t modulus() const;

  friend bool operator==(const PrimePowerEquation&, const PrimePowerEquation&) = default;
};

// Trial division. Primes ascending; factorize(1) is empty. Throws
// std::invalid_argument for 0.
std::vector<PrimePower> factorize(std::uint64_t b);

// x == a (mod b) as one equation per prime-power factor of b. Requires a < b.
std::vector<PrimePowerEquation> split_equation(std::uint64_t a, std::uint64_t b);

// A[p] = (z, e) records the strongest equation x == z (mod p^e) seen so far;
// B[p][l] caches z mod p^l for l in [1, e] so weaker equations compare
// against a value no wider than their own modulus.
class ConflictTables {
 public:
  struct Entry {
    std::uint64_t residue;
    unsigned exponent;
  };

  const Entry* find(std::uint64_t prime) const;
  std::uint64_t level(std::uint64_t prime, unsigned l) const;

  // Overwrites A[prime] and refreshes B[prime][1..exponent]. Returns the bit
  // operations spent.
  std::uint64_t assign(std::uint64_t prime, std::uint64_t residue, unsigned exponent);

  bool coherent() const;
  std::size_t primes() const { return a_.size(); }

 private:
  std::unordered_map<std::uint64_t, Entry> a_;
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> b_;
};

struct CrtReport {
  bool solvable = true;
  std::uint64_t p_max = 0;
  unsigned e_max = 0;
  std::size_t prime_power_equations = 0;
  // Bit-operation estimates per phase.
  std::uint64_t factor_bit_ops = 0;
  std::uint64_t split_bit_ops = 0;
  std::uint64_t scan_bit_ops = 0;
  // Per input equation: its unary size a_i + b_i and the scan cost of its
  // prime-power equations. Stops at the first conflict.
  std::vector<std::uint64_t> unary_sizes;
  std::vector<std::uint64_t> equation_scan_bit_ops;

  std::uint64_t total_bit_ops() const { return factor_bit_ops + split_bit_ops + scan_bit_ops; }
};

CrtReport crt_check(const CongruenceSystem& system);

bool decide_solvable(const CongruenceSystem& system);

}  // namespace cycorbit

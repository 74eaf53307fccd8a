#pragma once

#include <optional>
#include <string>

#include "cycorbit/congruence.hpp"
#include "cycorbit/cost.hpp"
#include "cycorbit/permutation.hpp"

namespace cycorbit {

// Outcome of an orbit query under <g>. In the positive case `solutions` is the
// full set {r : g^r v = w} and `witness` its least nonnegative member.
class OrbitAnswer {
 public:
  static OrbitAnswer not_in_orbit() { return OrbitAnswer(); }
  // Throws std::invalid_argument on an empty progression.
  static OrbitAnswer in_orbit(ArithmeticProgression solutions);

  bool in_orbit() const { return !solutions_.is_empty(); }
  const ArithmeticProgression& solutions() const { return solutions_; }
  const BigInt& witness() const { return solutions_.offset(); }

  // "YES r=<witness> solutions=<a>+<b>Z" or "NO".
  std::string to_string() const;

  friend bool operator==(const OrbitAnswer&, const OrbitAnswer&) = default;

 private:
  OrbitAnswer() : solutions_(ArithmeticProgression::empty()) {}
  explicit OrbitAnswer(ArithmeticProgression s) : solutions_(std::move(s)) {}

  ArithmeticProgression solutions_;
};

// One congruence x == a_i (mod b_i) per cycle of g whose solutions are the
// exponents r with (g^r v)[c_i] = w[c_i], emitted in cycle order. Returns
// std::nullopt when some cycle admits no rotation or a fixed point of g
// differs between v and w. Throws std::invalid_argument on length mismatch.
std::optional<CongruenceSystem> reduce(const Permutation& g, const Configuration& v,
                                       const Configuration& w, CostCounter* counter = nullptr);

// reduce followed by solve_system.
OrbitAnswer decide_orbit(const Permutation& g, const Configuration& v, const Configuration& w,
                         CostCounter* counter = nullptr);

}  // namespace cycorbit

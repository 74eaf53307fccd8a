#include "cycorbit/orbit.hpp"

#include <cassert>
#include <stdexcept>

#include "cycorbit/strmatch.hpp"

namespace cycorbit {

OrbitAnswer OrbitAnswer::in_orbit(ArithmeticProgression solutions) {
  if (solutions.is_empty()) throw std::invalid_argument("in-orbit answer needs solutions");
  return OrbitAnswer(std::move(solutions));
}

std::string OrbitAnswer::to_string() const {
  if (!in_orbit()) return "NO";
  return "YES r=" + witness().get_str() + " solutions=" + solutions_.offset().get_str() + "+" +
         solutions_.period().get_str() + "Z";
}

namespace {

#ifndef NDEBUG
bool is_progression(const std::vector<std::size_t>& s) {
  for (std::size_t t = 2; t < s.size(); ++t) {
    if (s[t] - s[t - 1] != s[1] - s[0]) return false;
  }
  return true;
}
#endif

}  // namespace

std::optional<CongruenceSystem> reduce(const Permutation& g, const Configuration& v,
                                       const Configuration& w, CostCounter* counter) {
  if (v.size() != g.degree() || w.size() != g.degree()) {
    throw std::invalid_argument("configurations must have length " +
                                std::to_string(g.degree()));
  }

  // No power of g moves a fixed point, so any mismatch there is final.
  for (std::size_t j : g.fixed_points()) {
    if (counter != nullptr) counter->charge_units(1);
    if (v[j] != w[j]) return std::nullopt;
  }

  CongruenceSystem system;
  std::string vc, wc;
  for (const Cycle& c : g.cycles()) {
    const std::size_t k = c.length();
    vc.clear();
    wc.clear();
    for (std::size_t j : c.elements()) {
      vc += v[j];
      wc += w[j];
    }
    if (counter != nullptr) counter->charge_units(2 * k);

    const auto exponents = rotation_exponents(vc, wc, counter);
    if (exponents.empty()) return std::nullopt;
    assert(is_progression(exponents));

    const std::size_t residue = exponents[0];
    const std::size_t modulus = exponents.size() == 1 ? k : exponents[1] - exponents[0];
    if (counter != nullptr) {
      counter->charge_bits(bit_length(static_cast<std::uint64_t>(k)));
      counter->observe(static_cast<std::uint64_t>(k));
    }
    system.add(residue, modulus);
  }
  return system;
}

OrbitAnswer decide_orbit(const Permutation& g, const Configuration& v, const Configuration& w,
                         CostCounter* counter) {
  const auto system = reduce(g, v, w, counter);
  if (!system) return OrbitAnswer::not_in_orbit();
  CostCounter local;
  ArithmeticProgression solutions = solve_system(*system, counter != nullptr ? *counter : local);
  if (solutions.is_empty()) return OrbitAnswer::not_in_orbit();
  assert(apply_power(g, solutions.offset(), v) == w);
  return OrbitAnswer::in_orbit(std::move(solutions));
}

}  // namespace cycorbit

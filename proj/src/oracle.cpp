#include "cycorbit/oracle.hpp"

#include <string>

#include "cycorbit/strmatch.hpp"

namespace cycorbit {

OrbitAnswer brute_force_orbit(const Permutation& g, const Configuration& v,
                              const Configuration& w, std::uint64_t bound) {
  if (v.size() != g.degree() || w.size() != g.degree()) {
    throw std::invalid_argument("configurations must have length " +
                                std::to_string(g.degree()));
  }
  const BigInt ord = order(g);
  if (ord > to_bigint(bound)) {
    throw OracleBoundExceeded("group order " + ord.get_str() + " exceeds oracle bound " +
                              std::to_string(bound));
  }
  const std::uint64_t steps = to_u64(ord);

  std::vector<std::uint64_t> hits;
  std::string current = v.str();
  std::string next = current;
  for (std::uint64_t r = 0; r < steps; ++r) {
    if (current == w.str()) hits.push_back(r);
    for (const Cycle& c : g.cycles()) {
      const auto elems = c.elements();
      for (std::size_t t = 0; t < elems.size(); ++t) {
        next[elems[t + 1 == elems.size() ? 0 : t + 1]] = current[elems[t]];
      }
    }
    current.swap(next);
    next = current;
  }

  if (hits.empty()) return OrbitAnswer::not_in_orbit();
  const std::uint64_t period = hits.size() == 1 ? steps : hits[1] - hits[0];
  if (steps % period != 0) throw std::logic_error("orbit hits period does not divide order");
  for (std::size_t t = 0; t < hits.size(); ++t) {
    if (hits[t] != hits[0] + t * period) {
      throw std::logic_error("orbit hits are not an arithmetic progression");
    }
  }
  if (hits.size() != steps / period) {
    throw std::logic_error("orbit hits do not cover a full progression");
  }
  return OrbitAnswer::in_orbit(ArithmeticProgression::of(to_bigint(hits[0]), to_bigint(period)));
}

std::vector<std::size_t> brute_force_cycle_solutions(const Cycle& c, std::string_view vc,
                                                     std::string_view wc) {
  if (vc.size() != c.length() || wc.size() != c.length()) {
    throw std::invalid_argument("projection length differs from cycle length");
  }
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < c.length(); ++h) {
    if (rotate_right(vc, h) == wc) out.push_back(h);
  }
  return out;
}

}  // namespace cycorbit

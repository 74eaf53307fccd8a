#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cycorbit/orbit.hpp"
#include "cycorbit/permutation.hpp"

namespace cycorbit {

class OracleBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumerates g^r v for r in [0, ord(g)) by applying g one step at a time and
// collects every r that reaches w. Throws OracleBoundExceeded when ord(g)
// exceeds `bound`, and std::logic_error if the hits do not form a progression
// whose period divides ord(g).
OrbitAnswer brute_force_orbit(const Permutation& g, const Configuration& v,
                              const Configuration& w, std::uint64_t bound = 1'000'000);

// { h in [0,k) : rotate_right(vc, h) == wc } by trying every rotation.
std::vector<std::size_t> brute_force_cycle_solutions(const Cycle& c, std::string_view vc,
                                                     std::string_view wc);

}  // namespace cycorbit

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cycorbit/cost.hpp"

namespace cycorbit {

struct MatchResult {
  // 1-based start positions, strictly ascending.
  std::vector<std::size_t> positions;
};

// All occurrences of `pattern` in `text` (Knuth-Morris-Pratt). Each symbol
// comparison is charged one unit to `counter` when given. Throws
// std::invalid_argument on an empty pattern.
MatchResult kmp_find_all(std::string_view text, std::string_view pattern,
                         CostCounter* counter = nullptr);

// { r in [0,k) : rotate_right(vc, r) == wc }, ascending.
//
// vc occurs at 1-based position p of wc.wc exactly when the right rotation
// of vc by p-1 equals wc, so the search runs with wc doubled as the text
// and vc as the pattern. Position k+1 repeats position 1 and is never
// reported.
std::vector<std::size_t> rotation_exponents(std::string_view vc, std::string_view wc,
                                            CostCounter* counter = nullptr);

// rotate_right("a_1...a_k", r) = a_{k-r+1} ... a_k a_1 ... a_{k-r}.
std::string rotate_right(std::string_view s, std::size_t r);

}  // namespace cycorbit

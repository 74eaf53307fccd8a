#include "cycorbit/strmatch.hpp"

#include <stdexcept>
#include <string>

namespace cycorbit {

namespace {

std::vector<std::size_t> failure_function(std::string_view pattern, std::uint64_t& comparisons) {
  std::vector<std::size_t> fail(pattern.size(), 0);
  std::size_t matched = 0;
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    while (true) {
      ++comparisons;
      if (pattern[i] == pattern[matched]) {
        ++matched;
        break;
      }
      if (matched == 0) break;
      matched = fail[matched - 1];
    }
    fail[i] = matched;
  }
  return fail;
}

// KMP over a text given by an accessor, so a doubled string never has to be
// materialized. Reports 0-based start offsets.
template <typename TextAt>
std::vector<std::size_t> kmp_scan(std::size_t text_size, TextAt text_at,
                                  std::string_view pattern, CostCounter* counter) {
  std::uint64_t comparisons = 0;
  const auto fail = failure_function(pattern, comparisons);
  std::vector<std::size_t> hits;
  std::size_t matched = 0;
  for (std::size_t i = 0; i < text_size; ++i) {
    const char symbol = text_at(i);
    while (true) {
      ++comparisons;
      if (symbol == pattern[matched]) {
        ++matched;
        break;
      }
      if (matched == 0) break;
      matched = fail[matched - 1];
    }
    if (matched == pattern.size()) {
      hits.push_back(i + 1 - pattern.size());
      matched = fail[matched - 1];
    }
  }
  if (counter != nullptr) counter->charge_units(comparisons);
  return hits;
}

}  // namespace

MatchResult kmp_find_all(std::string_view text, std::string_view pattern,
                         CostCounter* counter) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  MatchResult result;
  result.positions = kmp_scan(
      text.size(), [text](std::size_t i) { return text[i]; }, pattern, counter);
  for (std::size_t& p : result.positions) ++p;
  return result;
}

std::vector<std::size_t> rotation_exponents(std::string_view vc, std::string_view wc,
                                            CostCounter* counter) {
  if (vc.size() != wc.size()) {
    throw std::invalid_argument("cycle projections differ in length");
  }
  const std::size_t k = vc.size();
  if (k == 0) throw std::invalid_argument("empty cycle projection");
  if (k == 1) {
    if (counter != nullptr) counter->charge_units(1);
    return vc[0] == wc[0] ? std::vector<std::size_t>{0} : std::vector<std::size_t>{};
  }
  // Offsets in [0, k) live inside the first 2k-1 symbols of wc.wc.
  return kmp_scan(
      2 * k - 1, [wc, k](std::size_t i) { return wc[i < k ? i : i - k]; }, vc, counter);
}

std::string rotate_right(std::string_view s, std::size_t r) {
  if (s.empty()) return {};
  r %= s.size();
  std::string out;
  out.reserve(s.size());
  out.append(s.substr(s.size() - r));
  out.append(s.substr(0, s.size() - r));
  return out;
}

}  // namespace cycorbit

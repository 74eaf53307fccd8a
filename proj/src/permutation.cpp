#include "cycorbit/permutation.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cycorbit {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void require_same_length(const Permutation& g, const Configuration& v) {
  if (v.size() != g.degree()) {
    throw std::invalid_argument("configuration length " + std::to_string(v.size()) +
                                " does not match permutation degree " +
                                std::to_string(g.degree()));
  }
}

}  // namespace

Cycle::Cycle(std::vector<std::size_t> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("empty cycle");
}

Permutation::Permutation(std::size_t n, std::vector<Cycle> cycles)
    : n_(n), cycles_(std::move(cycles)), cycle_of_(n, kNone), slot_of_(n, kNone) {
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    const Cycle& c = cycles_[i];
    for (std::size_t t = 0; t < c.length(); ++t) {
      cycle_of_[c[t]] = i;
      slot_of_[c[t]] = t;
    }
  }
  for (std::size_t j = 0; j < n_; ++j) {
    if (cycle_of_[j] == kNone) fixed_points_.push_back(j);
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("permutation degree must be positive");
  return Permutation(n, {});
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  if (n == 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(n, false);
  std::vector<Cycle> kept;
  for (const auto& one_based : cycles) {
    if (one_based.empty()) throw std::invalid_argument("empty cycle");
    std::vector<std::size_t> zero_based;
    zero_based.reserve(one_based.size());
    for (std::size_t j : one_based) {
      if (j < 1 || j > n) {
        throw std::invalid_argument("index " + std::to_string(j) + " outside [1," +
                                    std::to_string(n) + "]");
      }
      if (seen[j - 1]) {
        throw std::invalid_argument("duplicate index " + std::to_string(j));
      }
      seen[j - 1] = true;
      zero_based.push_back(j - 1);
    }
    if (zero_based.size() > 1) kept.emplace_back(std::move(zero_based));
  }
  return Permutation(n, std::move(kept));
}

std::size_t Permutation::image(std::size_t j) const {
  if (j >= n_) throw std::out_of_range("index outside permutation domain");
  if (cycle_of_[j] == kNone) return j;
  const Cycle& c = cycles_[cycle_of_[j]];
  return c[(slot_of_[j] + 1) % c.length()];
}

std::string Permutation::to_string() const {
  std::string out;
  for (const Cycle& c : cycles_) {
    out += '(';
    for (std::size_t t = 0; t < c.length(); ++t) {
      if (t != 0) out += ',';
      out += std::to_string(c[t] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation parse_permutation(std::string_view text, std::size_t n) {
  if (n == 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t pos = 0;

  auto column = [&] { return pos + 1; };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip_space();
    if (pos >= text.size()) {
      throw ParseError(std::string("expected '") + ch + "' but input ended", column());
    }
    if (text[pos] != ch) {
      throw ParseError(std::string("expected '") + ch + "' but found '" + text[pos] + "'",
                       column());
    }
    ++pos;
  };
  auto read_index = [&]() -> std::size_t {
    skip_space();
    const std::size_t start = column();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected a cycle index", start);
    }
    std::size_t value = 0;
    bool overflow = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t digit = static_cast<std::size_t>(text[pos] - '0');
      if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) overflow = true;
      if (!overflow) value = value * 10 + digit;
      ++pos;
    }
    if (overflow || value < 1 || value > n) {
      throw ParseError("index " + std::string(text.substr(start - 1, pos - start + 1)) +
                           " outside [1," + std::to_string(n) + "]",
                       start);
    }
    if (seen[value - 1]) {
      throw ParseError("duplicate index " + std::to_string(value), start);
    }
    seen[value - 1] = true;
    return value;
  };

  skip_space();
  while (pos < text.size()) {
    expect('(');
    std::vector<std::size_t> cycle{read_index()};
    skip_space();
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      cycle.push_back(read_index());
      skip_space();
    }
    expect(')');
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(n, cycles);
}

Configuration apply(const Permutation& g, const Configuration& v) {
  require_same_length(g, v);
  Configuration out = v;
  for (const Cycle& c : g.cycles()) {
    const std::size_t k = c.length();
    for (std::size_t t = 0; t < k; ++t) out[c[(t + 1) % k]] = v[c[t]];
  }
  return out;
}

Configuration apply_power(const Permutation& g, const BigInt& r, const Configuration& v) {
  require_same_length(g, v);
  if (sgn(r) < 0) throw std::invalid_argument("negative exponent");
  Configuration out = v;
  for (const Cycle& c : g.cycles()) {
    const std::size_t k = c.length();
    const std::size_t shift = mpz_fdiv_ui(r.get_mpz_t(), k);
    if (shift == 0) continue;
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t target = t + shift < k ? t + shift : t + shift - k;
      out[c[target]] = v[c[t]];
    }
  }
  return out;
}

std::string project(const Configuration& v, const Cycle& c) {
  std::string out;
  out.reserve(c.length());
  for (std::size_t j : c.elements()) {
    if (j >= v.size()) throw std::out_of_range("cycle index outside configuration");
    out += v[j];
  }
  return out;
}

BigInt order(const Permutation& g) {
  BigInt result = 1;
  for (const Cycle& c : g.cycles()) {
    mpz_lcm_ui(result.get_mpz_t(), result.get_mpz_t(), c.length());
  }
  return result;
}

std::vector<std::size_t> first_primes(std::size_t count) {
  std::vector<std::size_t> primes;
  primes.reserve(count);
  for (std::size_t candidate = 2; primes.size() < count; ++candidate) {
    bool prime = true;
    for (std::size_t p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

Permutation primorial_permutation(std::size_t i) {
  if (i == 0) throw std::invalid_argument("primorial family is indexed from 1");
  const auto primes = first_primes(i);
  const std::size_t n = std::accumulate(primes.begin(), primes.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t next = 1;
  for (std::size_t p : primes) {
    std::vector<std::size_t> cycle(p);
    std::iota(cycle.begin(), cycle.end(), next);
    next += p;
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(n, cycles);
}

RandomPermutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{1});
  for (std::size_t i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i);
    std::swap(image[i], image[pick(rng)]);
  }
  std::vector<bool> visited(n, false);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = start; !visited[j]; j = image[j] - 1) {
      visited[j] = true;
      cycle.push_back(j + 1);
    }
    cycles.push_back(std::move(cycle));
  }
  const std::size_t count = cycles.size();
  return {Permutation::from_cycles(n, cycles), count};
}

}  // namespace cycorbit

#include "cycorbit/crt_solver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cycorbit {

namespace {

// Schoolbook cost of a division or product involving operands of these widths.
std::uint64_t quadratic_cost(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t bits = bit_length(x) + bit_length(y) + 1;
  return bits * bits;
}

// Comparing numbers stored without leading zeros reads at most the shorter one.
std::uint64_t compare_cost(std::uint64_t x, std::uint64_t y) {
  return std::min(bit_length(x), bit_length(y)) + 1;
}

std::uint64_t power(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

std::vector<PrimePower> factorize_counted(std::uint64_t b, std::uint64_t& bit_ops) {
  if (b == 0) throw std::invalid_argument("cannot factorize 0");
  std::vector<PrimePower> out;
  auto take = [&](std::uint64_t d) {
    unsigned e = 0;
    while (b % d == 0) {
      bit_ops += quadratic_cost(b, d);
      b /= d;
      ++e;
    }
    bit_ops += quadratic_cost(b, d);
    if (e > 0) out.push_back({d, e});
  };
  take(2);
  for (std::uint64_t d = 3; d <= b / d; d += 2) take(d);
  if (b > 1) out.push_back({b, 1});
  return out;
}

}  // namespace

std::uint64_t PrimePowerEquation::modulus() const { return power(prime, exponent); }

std::vector<PrimePower> factorize(std::uint64_t b) {
  std::uint64_t unused = 0;
  return factorize_counted(b, unused);
}

std::vector<PrimePowerEquation> split_equation(std::uint64_t a, std::uint64_t b) {
  if (b == 0) throw std::invalid_argument("modulus must be positive");
  if (a >= b) throw std::invalid_argument("residue must be below modulus");
  std::vector<PrimePowerEquation> out;
  for (const PrimePower& f : factorize(b)) {
    out.push_back({f.prime, f.exponent, a % power(f.prime, f.exponent)});
  }
  return out;
}

const ConflictTables::Entry* ConflictTables::find(std::uint64_t prime) const {
  auto it = a_.find(prime);
  return it == a_.end() ? nullptr : &it->second;
}

std::uint64_t ConflictTables::level(std::uint64_t prime, unsigned l) const {
  return b_.at(prime).at(l - 1);
}

std::uint64_t ConflictTables::assign(std::uint64_t prime, std::uint64_t residue,
                                     unsigned exponent) {
  std::uint64_t bit_ops = 1;
  a_[prime] = {residue, exponent};
  auto& levels = b_[prime];
  levels.resize(exponent);
  std::uint64_t modulus = 1;
  for (unsigned l = 1; l <= exponent; ++l) {
    bit_ops += quadratic_cost(modulus, prime);
    modulus *= prime;
    bit_ops += quadratic_cost(residue, modulus);
    levels[l - 1] = residue % modulus;
  }
  assert(coherent());
  return bit_ops;
}

bool ConflictTables::coherent() const {
  for (const auto& [prime, entry] : a_) {
    auto it = b_.find(prime);
    if (it == b_.end() || it->second.size() < entry.exponent) return false;
    std::uint64_t modulus = 1;
    for (unsigned l = 1; l <= entry.exponent; ++l) {
      modulus *= prime;
      if (it->second[l - 1] != entry.residue % modulus) return false;
    }
  }
  return true;
}

CrtReport crt_check(const CongruenceSystem& system) {
  CrtReport report;
  std::vector<std::vector<PrimePowerEquation>> split;
  split.reserve(system.size());

  for (const Congruence& eq : system.equations()) {
    const std::uint64_t a = to_u64(eq.residue);
    const std::uint64_t b = to_u64(eq.modulus);
    report.unary_sizes.push_back(a + b);
    auto factors = factorize_counted(b, report.factor_bit_ops);
    std::vector<PrimePowerEquation> parts;
    for (const PrimePower& f : factors) {
      const std::uint64_t m = power(f.prime, f.exponent);
      report.split_bit_ops += quadratic_cost(a, m) * (f.exponent + 1);
      parts.push_back({f.prime, f.exponent, a % m});
    }
    report.prime_power_equations += parts.size();
    split.push_back(std::move(parts));
  }

  for (const auto& parts : split) {
    for (const PrimePowerEquation& e : parts) {
      report.scan_bit_ops += compare_cost(e.prime, report.p_max);
      report.scan_bit_ops += compare_cost(e.exponent, report.e_max);
      report.p_max = std::max(report.p_max, e.prime);
      report.e_max = std::max(report.e_max, e.exponent);
    }
  }

  ConflictTables tables;
  for (const auto& parts : split) {
    std::uint64_t cost = 0;
    bool conflict = false;
    for (const PrimePowerEquation& e : parts) {
      const ConflictTables::Entry* seen = tables.find(e.prime);
      ++cost;
      if (seen == nullptr) {
        cost += tables.assign(e.prime, e.residue, e.exponent);
        continue;
      }
      cost += compare_cost(seen->exponent, e.exponent);
      if (seen->exponent == e.exponent) {
        cost += compare_cost(seen->residue, e.residue);
        conflict = seen->residue != e.residue;
      } else if (seen->exponent < e.exponent) {
        const std::uint64_t weaker = power(e.prime, seen->exponent);
        cost += quadratic_cost(e.residue, weaker);
        conflict = e.residue % weaker != seen->residue;
        if (!conflict) cost += tables.assign(e.prime, e.residue, e.exponent);
      } else {
        const std::uint64_t cached = tables.level(e.prime, e.exponent);
        cost += compare_cost(cached, e.residue);
        conflict = cached != e.residue;
      }
      if (conflict) break;
    }
    report.equation_scan_bit_ops.push_back(cost);
    report.scan_bit_ops += cost;
    if (conflict) {
      report.solvable = false;
      break;
    }
  }
  return report;
}

bool decide_solvable(const CongruenceSystem& system) { return crt_check(system).solvable; }

}  // namespace cycorbit

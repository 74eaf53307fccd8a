#include "cycorbit/congruence.hpp"

#include <stdexcept>

namespace cycorbit {

ArithmeticProgression ArithmeticProgression::of(BigInt offset, BigInt period) {
  if (sgn(period) <= 0) throw std::invalid_argument("period must be positive");
  ArithmeticProgression ap;
  ap.empty_ = false;
  mpz_fdiv_r(offset.get_mpz_t(), offset.get_mpz_t(), period.get_mpz_t());
  ap.offset_ = std::move(offset);
  ap.period_ = std::move(period);
  return ap;
}

const BigInt& ArithmeticProgression::offset() const {
  if (empty_) throw std::logic_error("empty progression has no offset");
  return offset_;
}

const BigInt& ArithmeticProgression::period() const {
  if (empty_) throw std::logic_error("empty progression has no period");
  return period_;
}

bool ArithmeticProgression::contains(const BigInt& x) const {
  if (empty_) return false;
  BigInt diff = x - offset_;
  return mpz_divisible_p(diff.get_mpz_t(), period_.get_mpz_t()) != 0;
}

std::string ArithmeticProgression::to_string() const {
  if (empty_) return "EMPTY";
  return offset_.get_str() + " + " + period_.get_str() + " Z";
}

void CongruenceSystem::add(BigInt residue, BigInt modulus) {
  if (sgn(modulus) <= 0) throw std::invalid_argument("modulus must be positive");
  if (sgn(residue) < 0 || residue >= modulus) {
    throw std::invalid_argument("residue " + residue.get_str() + " outside [0," +
                                modulus.get_str() + ")");
  }
  equations_.push_back({std::move(residue), std::move(modulus)});
}

namespace {

struct GcdWithCoefficient {
  BigInt gcd;
  BigInt coefficient;  // coefficient * a == gcd (mod n)
};

GcdWithCoefficient extended_gcd(const BigInt& a, const BigInt& n, CostCounter* counter) {
  BigInt old_r = a, r = n;
  BigInt old_s = 1, s = 0;
  BigInt q, tmp;
  while (sgn(r) != 0) {
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    tmp = old_r - q * r;
    old_r.swap(r);
    r.swap(tmp);
    tmp = old_s - q * s;
    old_s.swap(s);
    s.swap(tmp);
    if (counter != nullptr) {
      // quotient, two multiply-subtract pairs
      counter->charge(old_r, r);
      counter->charge(q, old_r);
      counter->charge(q, old_r);
      counter->charge(q, old_s);
      counter->charge(q, old_s);
      counter->observe(old_r, old_s, q);
    }
  }
  return {std::move(old_r), std::move(old_s)};
}

}  // namespace

ArithmeticProgression solve_linear_congruence(const BigInt& a, const BigInt& b, const BigInt& n,
                                              CostCounter* counter) {
  if (sgn(n) <= 0) throw std::invalid_argument("modulus must be positive");
  BigInt a_red, b_red;
  mpz_fdiv_r(a_red.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  mpz_fdiv_r(b_red.get_mpz_t(), b.get_mpz_t(), n.get_mpz_t());
  if (counter != nullptr) {
    counter->charge(a, n);
    counter->charge(b, n);
  }

  auto [d, coefficient] = extended_gcd(a_red, n, counter);
  if (counter != nullptr) counter->charge(b_red, d);
  if (!mpz_divisible_p(b_red.get_mpz_t(), d.get_mpz_t())) return ArithmeticProgression::empty();

  BigInt period = n / d;
  BigInt x0 = coefficient * (b_red / d);
  if (counter != nullptr) {
    counter->charge(n, d);
    counter->charge(b_red, d);
    counter->charge(coefficient, x0);
    counter->charge(x0, period);
    counter->observe(period, x0);
  }
  return ArithmeticProgression::of(std::move(x0), std::move(period));
}

ArithmeticProgression solve_system(const CongruenceSystem& system, CostCounter& counter) {
  BigInt a = 0;
  BigInt b = 1;
  BigInt rhs;
  for (const Congruence& eq : system.equations()) {
    rhs = eq.residue - a;
    counter.charge(eq.residue, a);
    const ArithmeticProgression step = solve_linear_congruence(b, rhs, eq.modulus, &counter);
    if (step.is_empty()) return ArithmeticProgression::empty();
    // a := a' b + a; b := b b'
    counter.charge(step.offset(), b);
    a += step.offset() * b;
    counter.charge(a, b);
    counter.charge(b, step.period());
    b *= step.period();
    counter.observe(a, b);
  }
  return ArithmeticProgression::of(std::move(a), std::move(b));
}

ArithmeticProgression solve_system(const CongruenceSystem& system) {
  CostCounter unused;
  return solve_system(system, unused);
}

ArithmeticProgression naive_intersection(const CongruenceSystem& system,
                                         std::uint64_t scan_bound) {
  BigInt offset = 0;
  BigInt period = 1;
  for (const Congruence& c : system.equations()) {
    if (c.modulus > to_bigint(scan_bound)) {
      throw ScanBoundExceeded("modulus " + c.modulus.get_str() + " exceeds scan bound " +
                              std::to_string(scan_bound));
    }
    const std::uint64_t m = to_u64(c.modulus);
    BigInt candidate = offset;
    bool found = false;
    for (std::uint64_t t = 0; t < m && !found; ++t) {
      if (mpz_fdiv_ui(candidate.get_mpz_t(), m) == to_u64(c.residue)) {
        found = true;
      } else {
        candidate += period;
      }
    }
    if (!found) return ArithmeticProgression::empty();
    offset = candidate;
    mpz_lcm_ui(period.get_mpz_t(), period.get_mpz_t(), m);
  }
  return ArithmeticProgression::of(offset, period);
}

}  // namespace cycorbit

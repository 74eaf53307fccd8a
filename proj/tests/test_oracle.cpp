#include "cycorbit/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cycorbit/strmatch.hpp"
#include "support.hpp"

namespace cycorbit {
namespace {

using Positions = std::vector<std::size_t>;

OrbitAnswer yes(unsigned long offset, unsigned long period) {
  return OrbitAnswer::in_orbit(ArithmeticProgression::of(offset, period));
}

TEST(BruteForceOrbit, RotationOfFour) {
  const auto g = parse_permutation("(1,2,3,4)", 4);
  EXPECT_EQ(brute_force_orbit(g, Configuration("1100"), Configuration("0011")), yes(2, 4));
}

TEST(BruteForceOrbit, IdentityHitHasOrderPeriod) {
  const auto g = parse_permutation("(1,2)", 2);
  EXPECT_EQ(brute_force_orbit(g, Configuration("ab"), Configuration("ab")), yes(0, 2));
}

TEST(BruteForceOrbit, ThreeCycleScan) {
  // (1,2,3) sends position 1 to 2: aba -> aab -> baa -> aba.
  const auto g = parse_permutation("(1,2,3)", 3);
  EXPECT_EQ(brute_force_orbit(g, Configuration("aba"), Configuration("aab")), yes(1, 3));
  EXPECT_EQ(brute_force_orbit(g, Configuration("aba"), Configuration("bba")),
            OrbitAnswer::not_in_orbit());
}

TEST(BruteForceOrbit, WorkedInstance) {
  const auto g = parse_permutation("(6,5,7,3,2,1)(4,8)", 9);
  EXPECT_EQ(brute_force_orbit(g, Configuration("010001111"), Configuration("101110001")),
            yes(1, 2));
}

TEST(BruteForceOrbit, BoundEnforced) {
  const auto g = primorial_permutation(4);  // order 210
  const Configuration v(std::string(g.degree(), '0'));
  EXPECT_THROW(brute_force_orbit(g, v, v, 209), OracleBoundExceeded);
  EXPECT_NO_THROW(brute_force_orbit(g, v, v, 210));
}

TEST(BruteForceOrbit, HitsFormProgressionDividingOrder) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const auto g = testing::random_rotated_permutation(rng, n);
    const Configuration v(testing::random_string(rng, n, 1 + trial % 3));
    // Mostly orbit members so the positive branch is exercised.
    const Configuration w = trial % 4 == 0
                                ? Configuration(testing::random_string(rng, n, 1 + trial % 3))
                                : apply_power(g, BigInt(static_cast<unsigned long>(rng() % 60)), v);
    const OrbitAnswer a = brute_force_orbit(g, v, w);
    if (!a.in_orbit()) continue;
    const BigInt ord = order(g);
    EXPECT_TRUE(mpz_divisible_p(ord.get_mpz_t(), a.solutions().period().get_mpz_t()));
  }
}

TEST(BruteForceCycleSolutions, Examples) {
  EXPECT_EQ(brute_force_cycle_solutions(Cycle({0, 1, 2, 3, 4, 5}), "101010", "010101"),
            (Positions{1, 3, 5}));
  EXPECT_EQ(brute_force_cycle_solutions(Cycle({3, 7, 8}), "011", "101"), (Positions{1}));
  EXPECT_TRUE(brute_force_cycle_solutions(Cycle({0}), "a", "b").empty());
  EXPECT_THROW(brute_force_cycle_solutions(Cycle({0, 1}), "a", "b"), std::invalid_argument);
}

TEST(BruteForceCycleSolutions, AgreesWithKmpExhaustivelyOnBinary) {
  for (std::size_t k = 1; k <= 12; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    const Cycle c(idx);
    for (std::uint32_t vb = 0; vb < (1u << k); ++vb) {
      std::string vc(k, '0');
      for (std::size_t i = 0; i < k; ++i) vc[i] = (vb >> i) & 1 ? '1' : '0';
      // Every w in the orbit of v plus one generic w keeps this at O(k 2^k).
      for (std::size_t r = 0; r <= k; ++r) {
        std::string wc = r < k ? rotate_right(vc, r) : vc;
        if (r == k) wc[0] = wc[0] == '0' ? '1' : '0';
        ASSERT_EQ(rotation_exponents(vc, wc), brute_force_cycle_solutions(c, vc, wc))
            << vc << " -> " << wc;
      }
    }
  }
}

TEST(BruteForceCycleSolutions, AgreesWithKmpOnRandomStrings) {
  std::mt19937_64 rng(29);
  for (std::size_t k = 13; k <= 64; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    const Cycle c(idx);
    for (int trial = 0; trial < 50; ++trial) {
      const auto vc = testing::random_string(rng, k, 1 + trial % 3);
      const auto wc = trial % 2 ? rotate_right(vc, rng() % k)
                                : testing::random_string(rng, k, 1 + trial % 3);
      ASSERT_EQ(rotation_exponents(vc, wc), brute_force_cycle_solutions(c, vc, wc));
    }
  }
}

}  // namespace
}  // namespace cycorbit

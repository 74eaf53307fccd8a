#include "cycorbit/instance.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace cycorbit {
namespace {

const char* kWorked =
    "n 9\n"
    "alphabet 01\n"
    "perm (6,5,7,3,2,1)(4,8)\n"
    "v 010001111\n"
    "w 101110001\n";

struct Location {
  std::size_t line;
  std::size_t column;
};

Location error_location(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const InputError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return {0, 0};
}

TEST(ParseInstance, WorkedInstance) {
  const InstanceFile inst = parse_instance(kWorked);
  EXPECT_EQ(inst.n, 9u);
  EXPECT_EQ(inst.alphabet, "01");
  EXPECT_EQ(inst.perm.to_string(), "(6,5,7,3,2,1)(4,8)");
  EXPECT_EQ(inst.v.str(), "010001111");
  EXPECT_EQ(inst.w.str(), "101110001");
}

TEST(ParseInstance, CommentsBlankLinesAndKeyOrder) {
  const InstanceFile inst = parse_instance(
      "# orbit instance\n\n  w 101\r\nv 011\nperm (1, 2 ,3)\n\nalphabet 10\nn 3\n");
  EXPECT_EQ(inst.perm.to_string(), "(1,2,3)");
  EXPECT_EQ(inst.v.str(), "011");
  EXPECT_EQ(inst.w.str(), "101");
}

TEST(ParseInstance, LeadingZerosAreDecimal) {
  EXPECT_EQ(parse_instance("n 09\nalphabet 0\nperm (08,9)\nv 000000000\nw 000000000\n").n, 9u);
  EXPECT_EQ(parse_congruence_system("010 mod 011\n").equations()[0].modulus, 11);
}

TEST(ParseInstance, EmptyPermIsIdentity) {
  const InstanceFile inst = parse_instance("n 2\nalphabet ab\nperm\nv ab\nw ab\n");
  EXPECT_EQ(inst.perm, Permutation::identity(2));
}

TEST(ParseInstance, ErrorLocations) {
  auto at = [](std::string_view text, std::size_t line, std::size_t column) {
    const Location loc = error_location(text);
    EXPECT_EQ(loc.line, line) << text;
    EXPECT_EQ(loc.column, column) << text;
  };
  at("n 3\nalphabet 01\nperm (1,4)\nv 011\nw 101\n", 3, 9);
  at("n 3\nalphabet 01\nperm (1,2)(2,3)\nv 011\nw 101\n", 3, 12);
  at("n 3\nalphabet 01\nperm (1,2\nv 011\nw 101\n", 3, 10);
  at("n 3\nalphabet 01\nperm (1,2)\nv 021\nw 101\n", 4, 4);
  at("n 3\nalphabet 01\nperm (1,2)\nv 0111\nw 101\n", 4, 3);
  at("n x3\nalphabet 01\nperm (1,2)\nv 011\nw 101\n", 1, 3);
  at("n 0\nalphabet 01\nperm\nv\nw\n", 1, 3);
  at("n 3\nalphabet 010\nperm (1,2)\nv 011\nw 101\n", 2, 12);
  at("n 3\nalphabet 01\nperm (1,2)\nv 011\nw 101\nsize 4\n", 6, 1);
  at("n 3\nalphabet 01\nperm (1,2)\nv 011\nv 011\nw 101\n", 5, 1);
  at("n 3\nalphabet 01\nperm (1,2)\nv 011\n", 4, 1);
  at("", 1, 1);
  at("n 99999999999\nalphabet 01\nperm\nv 0\nw 0\n", 1, 3);
  at("n 4000000000\nalphabet 01\nperm (1,2)\nv 0\nw 0\n", 4, 3);
}

TEST(ParseInstance, MessageCarriesLocation) {
  try {
    parse_instance("n 3\nalphabet 01\nperm (1,4)\nv 011\nw 101\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(std::string(e.what()), "line 3, column 9: index 4 outside [1,3]");
  }
}

TEST(ParseInstance, FormatRoundTrip) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    InstanceFile inst;
    inst.n = n;
    inst.alphabet = "abc";
    inst.perm = testing::random_rotated_permutation(rng, n);
    inst.v = Configuration(testing::random_string(rng, n, 3));
    inst.w = Configuration(testing::random_string(rng, n, 3));
    const InstanceFile back = parse_instance(format_instance(inst));
    ASSERT_EQ(back.perm, inst.perm);
    ASSERT_EQ(back.v, inst.v);
    ASSERT_EQ(back.w, inst.w);
    ASSERT_EQ(format_instance(back), format_instance(inst));
  }
}

TEST(ParseInstance, FuzzedInputNeverEscapesAsOtherExceptions) {
  std::mt19937_64 rng(109);
  const std::string base = kWorked;
  const std::string noise = "()0123456789,# \nabnvwperm\t-";
  std::size_t accepted = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    std::string text = base;
    const int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits; ++e) {
      const std::size_t pos = rng() % (text.size() + 1);
      switch (rng() % 3) {
        case 0:
          text.insert(text.begin() + static_cast<std::ptrdiff_t>(pos), noise[rng() % noise.size()]);
          break;
        case 1:
          if (pos < text.size()) text.erase(pos, 1);
          break;
        default:
          if (pos < text.size()) text[pos] = static_cast<char>(rng() % 256);
      }
    }
    try {
      parse_instance(text);
      ++accepted;
    } catch (const InputError&) {
    }
  }
  EXPECT_GT(accepted, 0u);
}

TEST(ParseCongruenceSystem, Examples) {
  const CongruenceSystem s = parse_congruence_system("# pair\n1 mod 2\n  1   mod 3 \n\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.equations()[1].residue, 1);
  EXPECT_EQ(s.equations()[1].modulus, 3);
  EXPECT_TRUE(parse_congruence_system("").empty());
  const CongruenceSystem big = parse_congruence_system("5 mod 100000000000000000000000\n");
  EXPECT_EQ(big.equations()[0].modulus, BigInt("100000000000000000000000"));
}

TEST(ParseCongruenceSystem, ErrorLocations) {
  auto at = [](std::string_view text, std::size_t line, std::size_t column) {
    try {
      parse_congruence_system(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const InputError& e) {
      EXPECT_EQ(e.line(), line) << text;
      EXPECT_EQ(e.column(), column) << text;
    }
  };
  at("1 mod 2\n3 mod 3\n", 2, 1);
  at("1 mod 0\n", 1, 7);
  at("1 md 2\n", 1, 3);
  at("1 mod\n", 1, 3);
  at("7\n", 1, 1);
  at("-1 mod 2\n", 1, 1);
  at("1 mod 2x\n", 1, 8);
  at("1 mod 2 3\n", 1, 3);
}

TEST(ReadFile, MissingFile) {
  EXPECT_THROW(read_file("/nonexistent/instance.txt"), InputError);
}

}  // namespace
}  // namespace cycorbit

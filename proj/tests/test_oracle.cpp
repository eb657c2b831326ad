#include <gtest/gtest.h>

#include <cstdint>
#include <sstream>
#include <vector>

#include "fibpart/oracle.hpp"
#include "test_support.hpp"

using namespace fibpart;

TEST(Oracle, EmptyTable) {
  const auto t = build_oracle(0);
  EXPECT_EQ(t.r_values, std::vector<BigNat>{1});
  EXPECT_EQ(t.a_values, std::vector<BigNat>{1});
}

TEST(Oracle, FirstNineValues) {
  const auto t = build_oracle(8);
  EXPECT_EQ(t.r_values, (std::vector<BigNat>{1, 1, 1, 2, 1, 2, 2, 1, 3}));
  EXPECT_EQ(t.a_values.back(), 14);
}

TEST(Oracle, MatchesSubsetEnumerationThroughF20) {
  // 19 distinct Fibonacci values up to 6765: all 2^19 subsets are enumerated.
  const auto t = build_oracle(6765);
  const auto expected = fibpart::testing::subset_enumeration_r(6765);
  ASSERT_EQ(t.r_values.size(), expected.size());
  BigNat running = 0;
  for (std::size_t n = 0; n < expected.size(); ++n) {
    ASSERT_EQ(t.r_values[n], expected[n]) << "n=" << n;
    running += t.r_values[n];
    ASSERT_EQ(t.a_values[n], running);
  }
}

TEST(Oracle, SubsetsBelowFibonacciIndex) {
  // Every subset of {F_2, ..., F_{m-2}} sums to at most F_m - 1, so all 2^{m-3}
  // of them are counted by A(F_m - 1); the identity F_1 + ... + F_{m-2} = F_m - 1 is checked too.
  const auto t = build_oracle(46368);
  const auto f = fibpart::testing::naive_fibs(30);
  for (int m = 4; m <= 24; ++m) {
    std::uint64_t sum = 0;
    for (int i = 1; i <= m - 2; ++i) sum += f[i];
    ASSERT_EQ(sum, f[m] - 1);
    ASSERT_GE(t.a_values[f[m] - 1], BigNat(1) << (m - 3));
  }
}

TEST(Oracle, Deterministic) {
  const auto a = build_oracle(20000);
  const auto b = build_oracle(20000);
  EXPECT_EQ(a.r_values, b.r_values);
  EXPECT_EQ(a.a_values, b.a_values);
}

TEST(Oracle, RefusesOversizedTables) { EXPECT_THROW(build_oracle(kOracleMaxLimit + 1), ResourceError); }

TEST(Oracle, CsvDump) {
  std::ostringstream out;
  write_oracle_csv(build_oracle(4), out);
  EXPECT_EQ(out.str(), "n,R,A\n0,1,1\n1,1,2\n2,1,3\n3,2,5\n4,1,6\n");
}

TEST(VerifyFormulas, Zero) { EXPECT_TRUE(verify_formulas(0).empty()); }

TEST(VerifyFormulas, ThroughF25) {
  EXPECT_TRUE(verify_formulas(75025).empty());
  EXPECT_EQ(build_oracle(75025).a_values[75025], a_fib(25));
}

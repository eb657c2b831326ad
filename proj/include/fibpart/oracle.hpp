#ifndef FIBPART_ORACLE_HPP
#define FIBPART_ORACLE_HPP

// Brute-force ground truth: R(n) by 0/1 subset-sum counting over the distinct
// Fibonacci values {1, 2, 3, 5, 8, ...}, and A as its prefix sums.

#include <cstddef>
#include <cstdint>
#include <new>
#include <ostream>
#include <string>
#include <vector>

#include "fibpart/errors.hpp"
#include "fibpart/numeric.hpp"
#include "fibpart/partition_count.hpp"
#include "fibpart/summatory.hpp"

namespace fibpart {

struct OracleTable {
  std::uint64_t limit = 0;
  std::vector<BigNat> r_values;  // r_values[n] = R(n)
  std::vector<BigNat> a_values;  // a_values[n] = R(0) + ... + R(n)
};

inline constexpr std::uint64_t kOracleMaxLimit = 50'000'000;

inline OracleTable build_oracle(std::uint64_t limit) {
  if (limit > kOracleMaxLimit) {
    throw ResourceError("build_oracle: limit " + std::to_string(limit) + " exceeds the supported maximum of " +
                        std::to_string(kOracleMaxLimit) + " table entries");
  }
  OracleTable table;
  table.limit = limit;
  const auto size = static_cast<std::size_t>(limit) + 1;
  try {
    table.r_values.assign(size, BigNat(0));
    table.a_values.reserve(size);
  } catch (const std::bad_alloc&) {
    throw ResourceError("build_oracle: out of memory allocating " + std::to_string(size) + " entries");
  }
  table.r_values[0] = 1;

  // Each distinct Fibonacci value is one 0/1 item; F_1 = F_2 contributes once.
  std::uint64_t prev = 1, item = 1;
  while (item <= limit) {
    for (std::uint64_t n = limit; n >= item; --n) {
      table.r_values[n] += table.r_values[n - item];
      if (n == item) break;
    }
    const std::uint64_t next = prev + item;
    prev = item;
    item = next;
  }

  BigNat running = 0;
  for (const auto& r : table.r_values) {
    running += r;
    table.a_values.push_back(running);
  }
  return table;
}

/// CSV dump `n,R,A`.
inline void write_oracle_csv(const OracleTable& table, std::ostream& out) {
  out << "n,R,A\n";
  for (std::size_t n = 0; n < table.r_values.size(); ++n) {
    out << n << ',' << table.r_values[n] << ',' << table.a_values[n] << '\n';
  }
}

struct Mismatch {
  std::uint64_t h;
  std::string function;  // "r_exact", "r_robbins", "a_exact" or "a_recursive"
  BigInt expected;
  BigInt actual;
};

inline constexpr std::size_t kMaxReportedMismatches = 100;

/// Checks r_exact, r_robbins, a_exact and a_recursive against the oracle for
/// every 0 <= H <= limit. Returns at most the first 100 mismatches.
inline std::vector<Mismatch> verify_formulas(std::uint64_t limit) {
  const OracleTable table = build_oracle(limit);
  SummatoryRecursion recursive;
  std::vector<Mismatch> out;
  auto check = [&](std::uint64_t h, const char* name, const BigInt& expected, BigInt actual) {
    if (out.size() < kMaxReportedMismatches && expected != actual) {
      out.push_back({h, name, expected, std::move(actual)});
    }
  };
  for (std::uint64_t h = 0; h <= limit && out.size() < kMaxReportedMismatches; ++h) {
    const BigNat big_h(h);
    const auto& r = table.r_values[h];
    const auto& a = table.a_values[h];
    check(h, "r_exact", r, r_exact(big_h));
    check(h, "r_robbins", r, r_robbins(big_h));
    check(h, "a_exact", a, a_exact(big_h));
    check(h, "a_recursive", a, recursive(big_h));
  }
  return out;
}

}  // namespace fibpart

#endif  // FIBPART_ORACLE_HPP

#ifndef FIBPART_TEST_SUPPORT_HPP
#define FIBPART_TEST_SUPPORT_HPP

// Independent reference computations for the test suites. Nothing here calls
// into the library's formula paths.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace fibpart::testing {

/// Seed for randomized property tests; override with FIBPART_SEED.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("FIBPART_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240613ULL;
}

inline std::mt19937_64 seeded_rng() { return std::mt19937_64(test_seed()); }

/// F_0..F_n by plain iteration in 64-bit (n <= 93).
inline std::vector<std::uint64_t> naive_fibs(int n) {
  std::vector<std::uint64_t> f(static_cast<std::size_t>(n) + 1);
  f[0] = 0;
  if (n >= 1) f[1] = 1;
  for (int i = 2; i <= n; ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}

/// Zeckendorf indices of n >= 1 by greedy subtraction over a 64-bit table.
inline std::vector<int> greedy_zeckendorf(std::uint64_t n) {
  const auto f = naive_fibs(92);
  std::vector<int> out;
  for (int m = 92; m >= 2 && n > 0; --m) {
    if (f[m] <= n) {
      n -= f[m];
      out.push_back(m);
    }
  }
  return out;
}

/// R(0..limit) by enumerating every subset of the distinct Fibonacci values <= limit.
inline std::vector<std::uint64_t> subset_enumeration_r(std::uint64_t limit) {
  std::vector<std::uint64_t> values;
  for (std::uint64_t a = 1, b = 2; a <= limit; b = a + b, a = b - a) values.push_back(a);
  std::vector<std::uint64_t> r(limit + 1, 0);
  const std::uint64_t subsets = 1ULL << values.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < values.size() && sum <= limit; ++i) {
      if (mask >> i & 1) sum += values[i];
    }
    if (sum <= limit) ++r[sum];
  }
  return r;
}

/// 0/1 word of a Zeckendorf index list, most significant digit first, padded to `top`.
inline std::string zeckendorf_word(const std::vector<int>& indices, int top) {
  std::string w(static_cast<std::size_t>(top - 1), '0');
  for (int m : indices) w[static_cast<std::size_t>(top - m)] = '1';
  return w;
}

}  // namespace fibpart::testing

#endif  // FIBPART_TEST_SUPPORT_HPP

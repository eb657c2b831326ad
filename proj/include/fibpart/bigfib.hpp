#ifndef FIBPART_BIGFIB_HPP
#define FIBPART_BIGFIB_HPP

// Fibonacci numbers (F_1 = F_2 = 1) and the Zeckendorf codec.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fibpart/errors.hpp"
#include "fibpart/numeric.hpp"

namespace fibpart {

namespace detail {

inline constexpr int kFibCacheSize = 200;

/// F_0 .. F_{kFibCacheSize-1}, built once.
inline const std::vector<BigNat>& fib_cache() {
  static const std::vector<BigNat> table = [] {
    std::vector<BigNat> t(kFibCacheSize);
    t[0] = 0;
    t[1] = 1;
    for (int i = 2; i < kFibCacheSize; ++i) t[i] = t[i - 1] + t[i - 2];
    return t;
  }();
  return table;
}

/// (F_n, F_{n+1}) by fast doubling.
inline std::pair<BigNat, BigNat> fib_pair(int n) {
  if (n == 0) return {BigNat(0), BigNat(1)};
  auto [a, b] = fib_pair(n / 2);
  BigNat c = a * (2 * b - a);  // F_{2k}
  BigNat d = a * a + b * b;    // F_{2k+1}
  if (n % 2 == 0) return {std::move(c), std::move(d)};
  BigNat e = c + d;
  return {std::move(d), std::move(e)};
}

}  // namespace detail

/// F_m with F_1 = F_2 = 1. O(log m) multiplications beyond the cached range.
inline BigNat fib(int m) {
  if (m < 1) detail::domain_fail("fib: index must be >= 1, got " + std::to_string(m));
  if (m < detail::kFibCacheSize) return detail::fib_cache()[static_cast<std::size_t>(m)];
  return detail::fib_pair(m).first;
}

/// Largest m >= 2 with F_m <= n.
inline int max_fib_index(const BigNat& n) {
  if (n < 1) detail::domain_fail("max_fib_index: argument must be >= 1");
  const auto& cache = detail::fib_cache();
  if (n < cache.back()) {
    int m = 2;
    while (cache[static_cast<std::size_t>(m + 1)] <= n) ++m;
    return m;
  }
  // log_phi(n * sqrt 5) estimate from the bit length, then walk to the exact index.
  const double bits = static_cast<double>(msb(n)) + 1.0;
  int m = static_cast<int>(bits * 1.4404200904125564) - 2;  // log(2)/log(phi)
  if (m < detail::kFibCacheSize - 2) m = detail::kFibCacheSize - 2;
  BigNat lo = fib(m), hi = fib(m + 1);
  while (lo > n) {
    BigNat prev = hi - lo;
    hi = std::move(lo);
    lo = std::move(prev);
    --m;
  }
  while (hi <= n) {
    BigNat next = lo + hi;
    lo = std::move(hi);
    hi = std::move(next);
    ++m;
  }
  return m;
}

/// A Zeckendorf expansion H = F_{m_0} + ... + F_{m_k}, most significant index first.
class ZeckendorfExpansion {
 public:
  /// Validates m_{i-1} - m_i >= 2, m_k >= 2 and non-emptiness.
  explicit ZeckendorfExpansion(std::vector<int> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw ValidationError("Zeckendorf expansion must have at least one term");
    if (indices_.back() < 2) {
      throw ValidationError("Zeckendorf expansion: smallest index must be >= 2, got " +
                            std::to_string(indices_.back()));
    }
    for (std::size_t i = 1; i < indices_.size(); ++i) {
      if (indices_[i - 1] - indices_[i] < 2) {
        throw ValidationError("Zeckendorf expansion: indices " + std::to_string(indices_[i - 1]) + " and " +
                              std::to_string(indices_[i]) + " are not separated by at least 2");
      }
    }
  }

  std::span<const int> indices() const noexcept { return indices_; }
  int operator[](std::size_t i) const { return indices_[i]; }
  std::size_t size() const noexcept { return indices_.size(); }
  /// k in H = F_{m_0} + ... + F_{m_k}.
  std::size_t k() const noexcept { return indices_.size() - 1; }
  int leading() const noexcept { return indices_.front(); }

  /// x_l = F_{m_l} + ... + F_{m_k}; x_{k+1} = 0.
  BigNat suffix_value(std::size_t l) const {
    BigNat x = 0;
    for (std::size_t i = l; i < indices_.size(); ++i) x += fib(indices_[i]);
    return x;
  }

  /// Expansion of x_l, the tail starting at position l (l <= k).
  ZeckendorfExpansion suffix(std::size_t l) const {
    return ZeckendorfExpansion(std::vector<int>(indices_.begin() + static_cast<std::ptrdiff_t>(l), indices_.end()));
  }

  /// Zeckendorf word order; agrees with numeric order of the represented values.
  friend auto operator<=>(const ZeckendorfExpansion&, const ZeckendorfExpansion&) = default;
  friend bool operator==(const ZeckendorfExpansion&, const ZeckendorfExpansion&) = default;

 private:
  std::vector<int> indices_;
};

/// Greedy Zeckendorf expansion of n >= 1.
inline ZeckendorfExpansion zeckendorf_encode(const BigNat& n) {
  if (n < 1) detail::domain_fail("zeckendorf_encode: argument must be >= 1");
  const int top = max_fib_index(n);
  std::vector<BigNat> fibs(static_cast<std::size_t>(top) + 1);
  if (top < detail::kFibCacheSize) {
    const auto& cache = detail::fib_cache();
    std::copy(cache.begin(), cache.begin() + top + 1, fibs.begin());
  } else {
    fibs[0] = 0;
    fibs[1] = 1;
    for (int i = 2; i <= top; ++i) fibs[static_cast<std::size_t>(i)] = fibs[i - 1] + fibs[i - 2];
  }
  std::vector<int> out;
  BigNat rest = n;
  for (int m = top; m >= 2 && rest > 0; --m) {
    if (fibs[static_cast<std::size_t>(m)] <= rest) {
      rest -= fibs[static_cast<std::size_t>(m)];
      out.push_back(m);
      --m;  // next index is at least two lower
    }
  }
  return ZeckendorfExpansion(std::move(out));
}

inline BigNat zeckendorf_decode(const ZeckendorfExpansion& z) { return z.suffix_value(0); }

/// JSON array of indices, most significant first.
inline std::string to_json(const ZeckendorfExpansion& z) {
  std::string s = "[";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(z[i]);
  }
  return s + "]";
}

}  // namespace fibpart

#endif  // FIBPART_BIGFIB_HPP

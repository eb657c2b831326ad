#ifndef FIBPART_SUMMATORY_HPP
#define FIBPART_SUMMATORY_HPP

// The summatory function A(H) = R(0) + ... + R(H), its mean and logarithmic average.

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "fibpart/bigfib.hpp"
#include "fibpart/errors.hpp"
#include "fibpart/numeric.hpp"
#include "fibpart/partition_count.hpp"

namespace fibpart {

/// f(t) = 1 + 2 (4^{t-1} - 1) / 3.
inline BigNat f_weight(int t) {
  if (t < 1) detail::domain_fail("f_weight: t must be >= 1, got " + std::to_string(t));
  const BigNat pow4 = BigNat(1) << (2 * (t - 1));
  return 1 + 2 * (pow4 - 1) / 3;
}

/// A(F_m) = floor(2^m / 6 + (m + 1) / 2).
inline BigNat a_fib(int m) {
  if (m < 2) detail::domain_fail("a_fib: index must be >= 2, got " + std::to_string(m));
  return ((BigNat(1) << m) + 3 * (m + 1)) / 6;
}

/// A(H) in closed form from the Zeckendorf coefficient tables. A(0) = 1.
inline BigNat a_exact(const BigNat& h) {
  if (h < 0) detail::domain_fail("a_exact: argument must be >= 0");
  if (h == 0) return BigNat(1);
  const auto z = zeckendorf_encode(h);
  const std::size_t k = z.k();
  if (k == 0) return a_fib(z[0]);
  const auto tab = recursion_tables(z);
  BigNat sum = tab.a[k] * a_fib(z[k]) - tab.eps_at(k) * tab.a[k - 1];
  for (std::size_t i = 1; i <= k; ++i) {
    const int t = tab.t_at(i);
    // m_{i-1} - 2 t_i is m_i - 2 or m_i - 1, never negative since m_i >= 2.
    const int exponent = z[i - 1] - 2 * t;
    if (exponent < 0) throw ValidationError("a_exact: negative power of two in weight term");
    sum += tab.a[i - 1] * f_weight(t) * (BigNat(1) << exponent);
  }
  return sum;
}

/// Memoized evaluation of A through the three-term recursion
///   A(H) = A(H - F_m) + A(H - F_{m-1}) - A(H - 2 F_{m-1}) + 2^{m-3},  F_m <= H < F_{m+1},
/// with A(x) = 0 for x < 0. The memo persists across calls on the same instance;
/// an instance is not safe to share between threads.
class SummatoryRecursion {
 public:
  BigInt operator()(const BigInt& h) { return eval(h); }
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  struct Hash {
    std::size_t operator()(const BigInt& x) const noexcept {
      const auto* p = x.backend().data();
      return p->_mp_size == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(p, 0)) ^ static_cast<std::size_t>(p->_mp_size);
    }
  };

  BigInt eval(const BigInt& h) {
    if (h < 0) return BigInt(0);
    if (h <= 2) return h + 1;  // A(0), A(1), A(2) = 1, 2, 3
    if (auto it = memo_.find(h); it != memo_.end()) return it->second;
    const int m = max_fib_index(h);
    const BigNat fm = fib(m);
    const BigNat fm1 = fib(m - 1);
    BigInt value = eval(h - fm) + eval(h - fm1) - eval(h - 2 * fm1) + (BigInt(1) << (m - 3));
    memo_.emplace(h, value);
    return value;
  }

  std::unordered_map<BigInt, BigInt, Hash> memo_;
};

/// A(H) by the memoized three-term recursion, with a fresh memo. A(x) = 0 for x < 0.
inline BigInt a_recursive(const BigInt& h) {
  SummatoryRecursion rec;
  return rec(h);
}

/// M(H) = A(H) / H.
inline Rational mean(const BigNat& h) {
  if (h < 1) detail::domain_fail("mean: argument must be >= 1");
  return Rational(a_exact(h), h);
}

struct Sample {
  std::uint64_t h;
  Real value;
};

/// B(h) = (log h)^{-1} sum_{1 <= n <= h} R(n) / n^lambda for every h in [2, h_max].
inline std::vector<Sample> b_log_series(std::uint64_t h_max, unsigned digits) {
  if (h_max < 2) detail::domain_fail("b_log_average: argument must be >= 2");
  PrecisionScope scope(digits);
  const Real lambda = growth_exponent();
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(h_max - 1));
  Real acc = 1;  // n = 1: R(1) / 1
  for (std::uint64_t n = 2; n <= h_max; ++n) {
    const Real logn = log(Real(n));
    acc += to_real(r_exact(BigNat(n))) / exp(lambda * logn);
    out.push_back({n, acc / logn});
  }
  return out;
}

inline Real b_log_average(std::uint64_t h, unsigned digits) {
  auto series = b_log_series(h, digits);
  return std::move(series.back().value);
}

/// A(H) / H^lambda for every H in [1, h_max], accumulating A through R.
inline std::vector<Sample> ratio_series(std::uint64_t h_max, unsigned digits) {
  if (h_max < 1) detail::domain_fail("ratio_series: limit must be >= 1");
  PrecisionScope scope(digits);
  const Real lambda = growth_exponent();
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(h_max));
  BigNat a = 1;  // A(0)
  for (std::uint64_t h = 1; h <= h_max; ++h) {
    a += r_exact(BigNat(h));
    out.push_back({h, to_real(a) / exp(lambda * log(Real(h)))});
  }
  return out;
}

}  // namespace fibpart

#endif  // FIBPART_SUMMATORY_HPP

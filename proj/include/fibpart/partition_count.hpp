#ifndef FIBPART_PARTITION_COUNT_HPP
#define FIBPART_PARTITION_COUNT_HPP

// R(H): the number of ways to write H as a sum of distinct Fibonacci numbers.

#include <cstddef>
#include <string>
#include <vector>

#include "fibpart/bigfib.hpp"
#include "fibpart/errors.hpp"
#include "fibpart/numeric.hpp"

namespace fibpart {

/// Gap-derived coefficients of a Zeckendorf expansion (m_0, ..., m_k).
///
/// For 1 <= i <= k, with gap g_i = m_{i-1} - m_i:
///   t_i   = floor((g_i + 2) / 2)
///   eps_i = 2 t_i - 1 - g_i         (1 when g_i is even, else 0)
/// and a_0 = 1, a_1 = t_1, a_{l+1} = t_{l+1} a_l - eps_l a_{l-1}.
///
/// Vectors are zero-based: t[i-1] holds t_i, eps[i-1] holds eps_i, a[l] holds a_l.
struct RecursionTables {
  std::vector<int> t;
  std::vector<int> eps;
  std::vector<BigNat> a;

  int t_at(std::size_t i) const { return t[i - 1]; }
  int eps_at(std::size_t i) const { return eps[i - 1]; }
};

inline RecursionTables recursion_tables(const ZeckendorfExpansion& z) {
  const std::size_t k = z.k();
  RecursionTables tab;
  tab.t.reserve(k);
  tab.eps.reserve(k);
  tab.a.reserve(k + 1);
  for (std::size_t i = 1; i <= k; ++i) {
    const int gap = z[i - 1] - z[i];
    const int t = (gap + 2) / 2;
    tab.t.push_back(t);
    tab.eps.push_back(2 * t - 1 - gap);
  }
  tab.a.emplace_back(1);
  if (k >= 1) tab.a.emplace_back(tab.t[0]);
  for (std::size_t l = 1; l + 1 <= k; ++l) {
    tab.a.push_back(tab.t[l] * tab.a[l] - tab.eps[l - 1] * tab.a[l - 1]);
  }
  return tab;
}

/// R(F_m) = floor(m / 2) for m >= 2.
inline BigNat r_carlitz(int m) {
  if (m < 2) detail::domain_fail("r_carlitz: index must be >= 2, got " + std::to_string(m));
  return BigNat(m / 2);
}

/// R(H) from the closed form over the Zeckendorf coefficient tables; R(0) = 1.
inline BigNat r_exact(const BigNat& h) {
  if (h < 0) detail::domain_fail("r_exact: argument must be >= 0");
  if (h == 0) return BigNat(1);
  const auto z = zeckendorf_encode(h);
  const std::size_t k = z.k();
  if (k == 0) return r_carlitz(z[0]);
  const auto tab = recursion_tables(z);
  return tab.a[k] * (z[k] / 2) - tab.eps_at(k) * tab.a[k - 1];
}

/// R(H) by Robbins's two-term recursion R(x) = t R(x_1) - eps R(x_2), evaluated
/// bottom-up along the suffix chain x_k, x_{k-1}, ..., x_0 = H.
inline BigNat r_robbins(const BigNat& h) {
  if (h < 0) detail::domain_fail("r_robbins: argument must be >= 0");
  if (h == 0) return BigNat(1);
  const auto z = zeckendorf_encode(h);
  const auto m = z.indices();
  const std::size_t k = z.k();
  BigNat next = 1;                  // R(x_{l+2})
  BigNat cur = r_carlitz(m[k]);     // R(x_{l+1})
  for (std::size_t l = k; l-- > 0;) {
    // x_l has leading index m[l]; its first gap is m[l] - m[l+1].
    const int gap = m[l] - m[l + 1];
    const int t = (gap + 2) / 2;
    const int eps = gap % 2 == 0 ? 1 : 0;
    BigNat r = t * cur - eps * next;
    next = std::move(cur);
    cur = std::move(r);
  }
  return cur;
}

}  // namespace fibpart

#endif  // FIBPART_PARTITION_COUNT_HPP

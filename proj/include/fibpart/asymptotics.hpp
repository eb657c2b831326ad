#ifndef FIBPART_ASYMPTOTICS_HPP
#define FIBPART_ASYMPTOTICS_HPP

// Enclosures of c1 = liminf A(H)/H^lambda and c2 = limsup A(H)/H^lambda.
//
// For large m the interval [F_m, F_{m+1}) is cut at the points
//   p = F_m + F_{m-a_1} + ... + F_{m-a_l},   a_1 >= 2, a_i - a_{i-1} >= 2, a_l <= depth,
// plus the closing fence post F_{m+1}. Along each such family A(p) / 2^m -> v and
// p sqrt(5) / phi^m -> w, so A(p) / p^lambda -> v (sqrt(5) / w)^lambda. Because A is
// nondecreasing and w increases along the value-ordered fence posts, every H in
// [p_j, p_{j+1}) satisfies, asymptotically,
//   L_j = v_j (sqrt5 / w_{j+1})^lambda  <=  A(H) / H^lambda  <=  U_j = v_{j+1} (sqrt5 / w_j)^lambda.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fibpart/bigfib.hpp"
#include "fibpart/errors.hpp"
#include "fibpart/numeric.hpp"
#include "fibpart/partition_count.hpp"
#include "fibpart/summatory.hpp"

namespace fibpart {

/// Offsets (a_1, ..., a_l) naming the fence post F_m + sum_i F_{m - a_i}. Possibly empty.
class OffsetPattern {
 public:
  OffsetPattern() = default;
  explicit OffsetPattern(std::vector<int> offsets) : offsets_(std::move(offsets)) {
    int prev = 0;
    for (int a : offsets_) {
      if (a - prev < 2) {
        throw ValidationError("offset pattern: offsets must start at >= 2 and increase by >= 2");
      }
      prev = a;
    }
  }

  std::span<const int> offsets() const noexcept { return offsets_; }
  std::size_t size() const noexcept { return offsets_.size(); }
  bool empty() const noexcept { return offsets_.empty(); }
  /// a_l, or 0 for the empty pattern.
  int last() const noexcept { return offsets_.empty() ? 0 : offsets_.back(); }

  /// Zeckendorf expansion of the fence post at leading index m (needs m - a_l >= 2).
  ZeckendorfExpansion expansion(int m) const {
    if (m - last() < 2) detail::domain_fail("offset pattern: leading index too small for this pattern");
    std::vector<int> idx{m};
    for (int a : offsets_) idx.push_back(m - a);
    return ZeckendorfExpansion(std::move(idx));
  }

  /// "7;12;19" (empty string for the empty pattern).
  std::string to_string(char sep = ';') const {
    std::string s;
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(offsets_[i]);
    }
    return s;
  }

  std::string to_json() const { return "[" + to_string(',') + "]"; }

  friend bool operator==(const OffsetPattern&, const OffsetPattern&) = default;

 private:
  std::vector<int> offsets_;
};

namespace detail {

inline void append_patterns(int start, int depth, std::vector<int>& prefix, std::vector<OffsetPattern>& out) {
  if (start > depth) {
    out.emplace_back(prefix);
    return;
  }
  // Everything built from offsets > start lies below phi^-start, so it comes first.
  append_patterns(start + 1, depth, prefix, out);
  prefix.push_back(start);
  append_patterns(start + 2, depth, prefix, out);
  prefix.pop_back();
}

}  // namespace detail

/// All offset patterns with a_l <= depth, in increasing order of the fence post
/// they name. There are F_{depth+1} of them.
inline std::vector<OffsetPattern> enumerate_patterns(int depth) {
  if (depth < 2) detail::domain_fail("enumerate_patterns: depth must be >= 2, got " + std::to_string(depth));
  if (depth > 60) detail::domain_fail("enumerate_patterns: depth " + std::to_string(depth) + " is too large to enumerate");
  std::vector<OffsetPattern> out;
  out.reserve(static_cast<std::size_t>(fib(depth + 1)));
  std::vector<int> prefix;
  detail::append_patterns(2, depth, prefix, out);
  return out;
}

/// lim A(p) / 2^m for the fence post named by `p`, exactly.
inline Rational endpoint_v(const OffsetPattern& p) {
  if (p.empty()) return Rational(1, 6);
  // The coefficient tables depend only on the gaps, so any admissible leading index works.
  const int lead = p.last() + 2;
  const auto z = p.expansion(lead);
  const auto tab = recursion_tables(z);
  const auto offs = p.offsets();
  const std::size_t l = p.size();
  Rational v(tab.a[l], BigInt(6) << p.last());
  for (std::size_t i = 1; i <= l; ++i) {
    const int prev_offset = i == 1 ? 0 : offs[i - 2];
    const int t = tab.t_at(i);
    v += Rational(tab.a[i - 1] * f_weight(t), BigInt(1) << (prev_offset + 2 * t));
  }
  return v;
}

/// Value of the closing fence post F_{m+1}: A(F_{m+1}) / 2^m -> 1/3.
inline Rational closing_endpoint_v() { return Rational(1, 3); }

/// lim p sqrt(5) / phi^m = 1 + sum_i phi^{-a_i}.
inline Real endpoint_w(const OffsetPattern& p, unsigned digits) {
  PrecisionScope scope(digits);
  const Real inv_phi = 1 / golden_ratio();
  Real w = 1;
  for (int a : p.offsets()) w += pow(inv_phi, a);
  return w;
}

/// lim A(H) / H^lambda along H = F_m + sum_i F_{m - a_i}.
inline Real ratio_limit(const OffsetPattern& p, unsigned digits) {
  PrecisionScope scope(digits);
  const Real w = endpoint_w(p, digits);
  return to_real(endpoint_v(p)) * pow(sqrt(Real(5)) / w, growth_exponent());
}

struct EndpointEstimate {
  OffsetPattern pattern;
  bool closing = false;  // the F_{m+1} fence post; `pattern` is empty
  Rational v;
  Real w;
  Real ratio;  // v (sqrt5 / w)^lambda
};

/// One subinterval [p_j, p_{j+1}) with its bounds.
struct SubintervalBound {
  std::size_t j;
  Real lower;  // L_j
  Real upper;  // U_j
};

struct Subdivision {
  int depth = 0;
  unsigned digits = 0;
  std::vector<EndpointEstimate> endpoints;  // patterns in value order, then the closing post
  std::vector<SubintervalBound> intervals;  // one per pattern
};

/// Every fence post estimate and every (L_j, U_j) at the given depth.
inline Subdivision subdivide(int depth, unsigned digits) {
  auto patterns = enumerate_patterns(depth);
  PrecisionScope scope(digits);
  const Real phi = golden_ratio();
  const Real lambda = growth_exponent();
  const Real log_sqrt5 = log(Real(5)) / 2;

  std::vector<Real> inv_phi_pow(static_cast<std::size_t>(depth) + 1);
  inv_phi_pow[0] = 1;
  const Real inv_phi = 1 / phi;
  for (std::size_t a = 1; a < inv_phi_pow.size(); ++a) inv_phi_pow[a] = pow(inv_phi, static_cast<long>(a));

  Subdivision sub;
  sub.depth = depth;
  sub.digits = digits;
  sub.endpoints.reserve(patterns.size() + 1);
  std::vector<Real> v_real;
  std::vector<Real> power;  // (sqrt5 / w)^lambda
  v_real.reserve(patterns.size() + 1);
  power.reserve(patterns.size() + 1);

  auto add = [&](OffsetPattern p, bool closing, Rational v, Real w) {
    Real g = exp(lambda * (log_sqrt5 - log(w)));
    Real vr = to_real(v);
    Real ratio = vr * g;
    v_real.push_back(std::move(vr));
    power.push_back(std::move(g));
    sub.endpoints.push_back({std::move(p), closing, std::move(v), std::move(w), std::move(ratio)});
  };

  for (auto& p : patterns) {
    Real w = 1;
    for (int a : p.offsets()) w += inv_phi_pow[static_cast<std::size_t>(a)];
    Rational v = endpoint_v(p);
    add(std::move(p), false, std::move(v), std::move(w));
  }
  add(OffsetPattern{}, true, closing_endpoint_v(), phi);

  sub.intervals.reserve(patterns.size());
  for (std::size_t j = 0; j + 1 < sub.endpoints.size(); ++j) {
    sub.intervals.push_back({j, v_real[j] * power[j + 1], v_real[j + 1] * power[j]});
  }
  return sub;
}

struct BoundsReport {
  int depth = 0;
  unsigned digits = 0;
  Real c1_lower, c1_upper;
  Real c2_lower, c2_upper;
  Real slack;  // padding applied to each side for rounding of transcendental steps
  OffsetPattern argmin_pattern, argmax_pattern;
  std::size_t argmin_index = 0, argmax_index = 0;  // zero-based fence post index j
  std::size_t endpoint_count = 0;                  // number of patterns (= subintervals)
};

/// Transcendental steps feeding one bound: sqrt 5, phi, two logs for lambda,
/// phi^-a, log w, exp.
inline constexpr int kTranscendentalSteps = 7;

/// Padding per bound: kTranscendentalSteps * 10^-(digits - 10).
inline Real rounding_slack(unsigned digits) {
  PrecisionScope scope(digits);
  return Real(kTranscendentalSteps) * pow(Real(10), -static_cast<long>(digits) + 10);
}

inline BoundsReport bounds_from(const Subdivision& sub) {
  PrecisionScope scope(sub.digits);
  const Real slack = rounding_slack(sub.digits);

  std::size_t jmin = 0, jmax = 0;
  for (std::size_t j = 1; j < sub.intervals.size(); ++j) {
    if (sub.intervals[j].lower < sub.intervals[jmin].lower) jmin = j;
    if (sub.intervals[j].upper > sub.intervals[jmax].upper) jmax = j;
  }
  // The witnesses must stand clear of every competitor by more than the rounding slack.
  for (std::size_t j = 0; j < sub.intervals.size(); ++j) {
    if (j != jmin && sub.intervals[j].lower - sub.intervals[jmin].lower <= 2 * slack) {
      throw PrecisionError("bounds: minimum lower bound is not separated at " + std::to_string(sub.digits) +
                           " digits; increase the precision");
    }
    if (j != jmax && sub.intervals[jmax].upper - sub.intervals[j].upper <= 2 * slack) {
      throw PrecisionError("bounds: maximum upper bound is not separated at " + std::to_string(sub.digits) +
                           " digits; increase the precision");
    }
  }

  BoundsReport rep;
  rep.depth = sub.depth;
  rep.digits = sub.digits;
  rep.slack = slack;
  rep.c1_lower = sub.intervals[jmin].lower - slack;
  rep.c1_upper = sub.endpoints[jmin].ratio + slack;
  rep.c2_lower = sub.endpoints[jmax].ratio - slack;
  rep.c2_upper = sub.intervals[jmax].upper + slack;
  rep.argmin_pattern = sub.endpoints[jmin].pattern;
  rep.argmax_pattern = sub.endpoints[jmax].pattern;
  rep.argmin_index = jmin;
  rep.argmax_index = jmax;
  rep.endpoint_count = sub.intervals.size();

  if (!(rep.c1_lower < rep.c1_upper && rep.c2_lower < rep.c2_upper)) {
    throw PrecisionError("bounds: enclosures collapsed at " + std::to_string(sub.digits) + " digits");
  }
  return rep;
}

/// Certified enclosures of c1 and c2 from the depth-`depth` subdivision.
inline BoundsReport bounds(int depth, unsigned digits) {
  if (depth < 2) detail::domain_fail("bounds: depth must be >= 2, got " + std::to_string(depth));
  if (digits < kMinDigits) {
    detail::domain_fail("bounds: digits must be >= " + std::to_string(kMinDigits) + ", got " + std::to_string(digits));
  }
  return bounds_from(subdivide(depth, digits));
}

/// JSON report {depth, digits, c1:[lo,hi], c2:[lo,hi], argmin_pattern, argmax_pattern, endpoint_count, ...}.
/// Reals are emitted as decimal strings so no precision is lost.
inline void write_bounds_json(const BoundsReport& r, std::ostream& out) {
  auto q = [&](const Real& x) { return "\"" + to_decimal(x, r.digits) + "\""; };
  out << "{\"depth\":" << r.depth << ",\"digits\":" << r.digits << ",\"c1\":[" << q(r.c1_lower) << ','
      << q(r.c1_upper) << "],\"c2\":[" << q(r.c2_lower) << ',' << q(r.c2_upper)
      << "],\"argmin_pattern\":" << r.argmin_pattern.to_json() << ",\"argmax_pattern\":" << r.argmax_pattern.to_json()
      << ",\"endpoint_count\":" << r.endpoint_count << ",\"argmin_index\":" << r.argmin_index
      << ",\"argmax_index\":" << r.argmax_index << ",\"slack\":" << q(r.slack) << "}\n";
}

/// CSV `pattern,v_num,v_den,w,L,U`, one row per subinterval [p_j, p_{j+1}).
inline void write_subdivision_csv(const Subdivision& sub, std::ostream& out) {
  out << "pattern,v_num,v_den,w,L,U\n";
  for (const auto& iv : sub.intervals) {
    const auto& e = sub.endpoints[iv.j];
    out << e.pattern.to_string() << ',' << numerator(e.v) << ',' << denominator(e.v) << ','
        << to_decimal(e.w, sub.digits) << ',' << to_decimal(iv.lower, sub.digits) << ','
        << to_decimal(iv.upper, sub.digits) << '\n';
  }
}

}  // namespace fibpart

#endif  // FIBPART_ASYMPTOTICS_HPP

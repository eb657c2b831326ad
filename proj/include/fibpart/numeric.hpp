#ifndef FIBPART_NUMERIC_HPP
#define FIBPART_NUMERIC_HPP

// Number types shared by every module: exact integers and rationals on GMP,
// variable-precision reals on MPFR.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <mutex>
#include <string>

#include "fibpart/errors.hpp"

namespace fibpart {

/// Unbounded signed integer. Values documented as "natural" are checked at API entry.
using BigInt = boost::multiprecision::mpz_int;
/// Unbounded non-negative integer (same representation as BigInt).
using BigNat = BigInt;
using Rational = boost::multiprecision::mpq_rational;
/// Arbitrary-precision binary float whose precision is chosen at run time.
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 50;
inline constexpr unsigned kMinDigits = 15;

namespace detail {

inline std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

}  // namespace detail

/// Sets the working precision (significant decimal digits) for the lifetime of
/// the scope. Boost keeps the MPFR default precision in a process-wide
/// variable, so every scope holds a process-wide recursive lock; nested scopes
/// on the same thread are fine.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits)
      : lock_(detail::precision_mutex()), saved_(Real::default_precision()) {
    if (digits < 1) detail::domain_fail("precision must be at least one digit");
    Real::default_precision(digits);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

/// Converts an exact value to a Real at the current default precision.
inline Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

inline Real to_real(const BigInt& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
  return r;
}

/// Golden ratio (1 + sqrt 5) / 2.
inline Real golden_ratio() { return (Real(1) + sqrt(Real(5))) / 2; }

/// lambda = log 2 / log phi, the growth exponent of the summatory function.
inline Real growth_exponent() { return log(Real(2)) / log(golden_ratio()); }

/// c = sqrt(5)^lambda / 6, the limit of A(F_m) / F_m^lambda.
inline Real fibonacci_ratio_constant() { return pow(sqrt(Real(5)), growth_exponent()) / 6; }

/// Decimal rendering with `digits` significant figures.
inline std::string to_decimal(const Real& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
}

/// Parses a non-negative decimal integer; rejects signs, blanks and other bases.
inline BigNat parse_natural(const std::string& text) {
  if (text.empty()) throw ValidationError("expected a non-negative decimal integer, got an empty string");
  for (char c : text) {
    if (c < '0' || c > '9') throw ValidationError("expected a non-negative decimal integer, got '" + text + "'");
  }
  // Leading zeros would otherwise be read as an octal prefix.
  const auto first = text.find_first_not_of('0');
  return first == std::string::npos ? BigNat(0) : BigNat(text.substr(first));
}

}  // namespace fibpart

#endif  // FIBPART_NUMERIC_HPP

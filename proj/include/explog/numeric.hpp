#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <mpfr.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace explog {

/// Exact arbitrary-precision integer (GMP-backed).
using big_int = boost::multiprecision::mpz_int;
/// Exact rational (GMP-backed), canonical form maintained automatically.
using big_rat = boost::multiprecision::mpq_rational;
/// Arbitrary-precision binary float with runtime-selectable mantissa (MPFR,
/// round-to-nearest). Precision is a process-wide default; see scoped_precision.
using big_float = boost::multiprecision::mpfr_float;

inline unsigned digits10_for_bits(unsigned bits) {
  // log10(2) = 0.3010299956...
  return static_cast<unsigned>(bits * 0.30102999566398119521) + 1;
}

inline void set_working_precision_bits(unsigned bits) {
  big_float::default_precision(digits10_for_bits(bits));
}

/// Sets the default big_float precision for the lifetime of the guard.
class scoped_precision {
 public:
  explicit scoped_precision(unsigned digits10)
      : saved_(big_float::default_precision()) {
    big_float::default_precision(digits10);
  }
  ~scoped_precision() { big_float::default_precision(saved_); }
  scoped_precision(const scoped_precision&) = delete;
  scoped_precision& operator=(const scoped_precision&) = delete;

 private:
  unsigned saved_;
};

/// Raises (never lowers) the default precision for the guard's lifetime.
inline unsigned raised_digits10(unsigned want_digits10) {
  unsigned cur = big_float::default_precision();
  return want_digits10 > cur ? want_digits10 : cur;
}

inline big_int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  big_int r;
  mpz_fac_ui(r.backend().data(), static_cast<unsigned long>(n));
  return r;
}

/// In-place division known to be exact; faster than operator/ and asserts
/// nothing silently (GMP behaviour is undefined on inexact input, so callers
/// must hold a divisibility argument).
inline void exact_divide(big_int& value, const big_int& divisor) {
  mpz_divexact(value.backend().data(), value.backend().data(),
               divisor.backend().data());
}

inline void exact_divide(big_int& value, unsigned long divisor) {
  mpz_divexact_ui(value.backend().data(), value.backend().data(), divisor);
}

/// Euler-Mascheroni constant to 100 decimal digits, parsed at the current
/// working precision.
inline big_float euler_gamma() {
  return big_float(
      "0.5772156649015328606065120900824024310421593359399235988057672348848"
      "677267776646709369470632917467495");
}

inline big_float gamma_function(const big_float& x) {
  big_float r;
  mpfr_gamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

inline big_float atanh_value(const big_float& x) {
  big_float r;
  mpfr_atanh(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// Decimal rendering. Statistics print with a fixed number of decimals and
// round-half-even; when the value is known exactly as a rational the tie is
// decided on integers, otherwise through MPFR's RNDN.
// ---------------------------------------------------------------------------

inline std::string format_fixed(const big_rat& value, int places) {
  if (value < 0) return "-" + format_fixed(big_rat(-value), places);
  const big_int scale = pow(big_int(10), places);
  big_int num = numerator(value) * scale;
  const big_int den = denominator(value);
  big_int q = num / den;
  const big_int twice_rem = 2 * (num - q * den);
  if (twice_rem > den || (twice_rem == den && q % 2 != 0)) ++q;
  std::string digits = q.str();
  if (places == 0) return digits;
  if (digits.size() <= static_cast<size_t>(places))
    digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<size_t>(places), ".");
  return digits;
}

inline std::string format_fixed(const big_float& value, int places) {
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*RNf", places, value.backend().data());
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

/// Fixed-point rendering with exactly `digits` significant digits.
inline std::string format_significant(const big_float& value, int digits) {
  if (value.is_zero()) return "0";
  char* probe = nullptr;
  mpfr_asprintf(&probe, "%.0RNe", value.backend().data());
  std::string p(probe);
  mpfr_free_str(probe);
  const long exp10 = std::strtol(p.c_str() + p.find('e') + 1, nullptr, 10);
  const long places = digits - 1 - exp10;
  if (places < 0 || places > 80) {
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*RNe", digits - 1, value.backend().data());
    std::string s(out);
    mpfr_free_str(out);
    return s;
  }
  return format_fixed(value, static_cast<int>(places));
}

}  // namespace explog

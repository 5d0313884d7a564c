#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace papertorus {

// Arbitrary-precision real. Precision (decimal digits) is runtime-configurable
// per computation via PrecisionGuard; nothing in the library assumes a fixed
// global precision.
using Real =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::cpp_int;

// Scoped working precision, in decimal digits. All Reals constructed inside
// the scope default to this precision.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits)
      : previous_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionGuard() { Real::default_precision(previous_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned previous_;
};

inline unsigned current_digits() { return Real::default_precision(); }

// pi at the current working precision (mpfr acos is correctly rounded, so
// this is exact to the last digit; no cross-precision caching).
inline Real real_pi() { return acos(Real(-1)); }

inline Real two_pi() { return 2 * real_pi(); }

// 10^e at current precision (e may be negative).
inline Real pow10(long e) {
  return boost::multiprecision::pow(Real(10), static_cast<int>(e));
}

}  // namespace papertorus

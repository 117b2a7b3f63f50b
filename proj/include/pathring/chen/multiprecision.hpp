#pragma once

// High-precision real type for the numeric routines: MPFR through
// boost::multiprecision, with the working precision set in bits.

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>

namespace pathring::chen {

using HighPrecision = boost::multiprecision::mpfr_float;

/// Sets the default MPFR precision for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(HighPrecision::default_precision()) {
    HighPrecision::default_precision(digits10(bits));
  }
  ~PrecisionScope() { HighPrecision::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  static unsigned digits10(unsigned bits) { return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1; }

 private:
  unsigned saved_;
};

}  // namespace pathring::chen

#pragma once

#include <apery/precision.hpp>

#include <string>

namespace apery::testing {

// |a - b| <= 10^-digits * max(1, |a|, |b|)
inline bool close(const Real& a, const Real& b, int digits) {
  Real scale = max(Real::of(1L, a.prec()), max(abs(a), abs(b)));
  return abs(a - b) <= scale * Real::pow10(-digits, a.prec());
}

inline std::string diff_digits(const Real& a, const Real& b) {
  return (a - b).str(3);
}

}  // namespace apery::testing

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace shiftcover {

// Exact arithmetic throughout: hom counts grow like |G|^rank and transfer
// matrix powers overflow machine words long before the interesting range.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

}  // namespace shiftcover

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace orbispec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

// floor/ceil for rationals; cpp_int division truncates toward zero,
// so negative numerators need an adjustment.
inline Int floor_rat(const Rat& q) {
  Int a = numerator(q), b = denominator(q);
  Int t = a / b;
  if (a % b != 0 && a < 0) --t;
  return t;
}

inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// floor of the square root of a nonnegative integer
inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(n);
}

std::string rat_to_string(const Rat& q);

// accepts "p" or "p/q" with optional sign
Rat rat_from_string(const std::string& s);

}  // namespace orbispec

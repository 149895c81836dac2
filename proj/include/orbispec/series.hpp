#pragma once

#include <stdexcept>
#include <vector>

#include "orbispec/rational.hpp"

namespace orbispec {

// Truncated power series with coefficients in an exact ring T.  A series is a
// coefficient vector c[0..kmax]; operations truncate at the shorter length.

template <class T>
std::vector<T> series_mul(const std::vector<T>& a, const std::vector<T>& b) {
  size_t n = std::min(a.size(), b.size());
  std::vector<T> c(n, T(0));
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == T(0)) continue;
    for (size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Multiplicative inverse of a series with unit constant term 1.
template <class T>
std::vector<T> series_inverse(const std::vector<T>& a) {
  if (a.empty() || !(a[0] == T(1)))
    throw std::invalid_argument("series_inverse: constant term must be 1");
  std::vector<T> b(a.size(), T(0));
  b[0] = T(1);
  for (size_t k = 1; k < a.size(); ++k) {
    T s(0);
    for (size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * b[k - j];
    b[k] = -s;
  }
  return b;
}

/**
 * Integer power series (coefficients proven integral).  Used for the
 * symmetric-power trace series of integer-entry isometries, whose
 * coefficients are dimensions and hence integers.
 */
struct IntegerSeries {
  std::vector<Int> c;

  int k_max() const { return static_cast<int>(c.size()) - 1; }
  const Int& coeff(int k) const { return c.at(static_cast<size_t>(k)); }
};

// Checks a rational series for integrality and converts; throws otherwise.
IntegerSeries to_integer_series(const std::vector<Rat>& a);

}  // namespace orbispec

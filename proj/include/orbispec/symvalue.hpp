#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "orbispec/rational.hpp"

namespace orbispec {

/**
 * Exact symbolic real: a finite Q-linear combination of terms pi^p * sqrt(s)
 * with integer p >= 0 and squarefree s >= 1.  Closed under addition and
 * multiplication; supports exact comparison for the values arising here
 * (eigenvalues, lengths, volumes), where distinct values are well separated.
 *
 * Eigenvalues of every spectrum in this project are stored as SymValue, with
 * plain rationals embedded via the (p=0, s=1) term.
 */
class SymValue {
 public:
  SymValue() = default;
  SymValue(const Rat& q) { add_term(0, 1, q); }  // NOLINT
  SymValue(long q) { add_term(0, 1, Rat(q)); }   // NOLINT

  // coef * pi^pi_pow * sqrt(radicand); radicand is made squarefree
  static SymValue term(const Rat& coef, int pi_pow, const Int& radicand);
  static SymValue sqrt_of(const Rat& q);  // sqrt(a/b) = sqrt(ab)/b, exact

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rat rat_value() const;  // throws if not rational

  SymValue operator+(const SymValue& o) const;
  SymValue operator-(const SymValue& o) const;
  SymValue operator-() const;
  SymValue operator*(const SymValue& o) const;
  SymValue& operator+=(const SymValue& o) { return *this = *this + o; }
  SymValue& operator*=(const SymValue& o) { return *this = *this * o; }
  bool operator==(const SymValue& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymValue& o) const { return !(*this == o); }

  double approx() const;
  std::string to_string() const;

  // (coefficient, pi power, squarefree radicand) when the value consists of
  // exactly one term, otherwise empty
  std::optional<std::tuple<Rat, int, Int>> single_term() const;

  // Strict order consistent with the real values: equality is exact; for
  // distinct values a double comparison decides, and a separation of at
  // least 1e-9 between the approximations is asserted.
  bool less_than(const SymValue& o) const;

 private:
  // key (pi power, squarefree radicand) -> rational coefficient
  std::map<std::pair<int, Int>, Rat> terms_;
  void add_term(int p, const Int& s, const Rat& c);
};

// Volume of the unit round sphere S^{n-1} in R^n (n >= 1); for n = 1 this is
// the point-count 2.  Always a rational multiple of an integer power of pi.
SymValue sphere_volume(int n);

}  // namespace orbispec

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "orbispec/rational.hpp"

namespace orbispec {

long euler_phi(long n);

// n-th cyclotomic polynomial, monic, coefficient vector c[0..phi(n)] (c[k] is
// the coefficient of x^k).  Cached.
const std::vector<Int>& cyclotomic_polynomial(long n);

/**
 * Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1} reduced
 * modulo the N-th cyclotomic polynomial.  The ambient order N is fixed per
 * value; mixed-order arithmetic lifts both operands to the lcm order first.
 * Values that happen to be rational stay representable at any order, and
 * is_rational()/rat_value() detect and extract them.
 */
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1, Rat(0)) {}
  explicit Cyclotomic(const Rat& q) : n_(1), c_(1, q) {}
  Cyclotomic(long v) : n_(1), c_(1, Rat(v)) {}  // NOLINT: ring-constant ctor

  static Cyclotomic zeta_power(long n, long k);

  long order() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rat_value() const;  // throws if not rational

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // complex conjugate (z -> z^{-1})
  Cyclotomic conj() const;

  Cyclotomic lifted_to(long m) const;  // requires n_ | m

  std::string to_string() const;

 private:
  long n_;
  std::vector<Rat> c_;  // length phi(n_)

  Cyclotomic(long n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
  static Cyclotomic from_raw(long n, const std::vector<Rat>& raw);
};

/**
 * Exact scalar: a rational or a cyclotomic value.  Arithmetic collapses back
 * to the rational alternative whenever the result lies in Q, so equal values
 * compare equal across the two representations.
 */
class ExactScalar {
 public:
  ExactScalar() : v_(Rat(0)) {}
  ExactScalar(const Rat& q) : v_(q) {}                    // NOLINT
  ExactScalar(long q) : v_(Rat(q)) {}                     // NOLINT
  ExactScalar(const Cyclotomic& c) { assign(c); }         // NOLINT

  bool is_rational() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat_value() const;
  Cyclotomic cyc_value() const;

  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  bool operator==(const ExactScalar& o) const;
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::variant<Rat, Cyclotomic> v_;
  void assign(const Cyclotomic& c);
};

}  // namespace orbispec

#include "orbispec/symvalue.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "orbispec/series.hpp"

namespace orbispec {

IntegerSeries to_integer_series(const std::vector<Rat>& a) {
  IntegerSeries s;
  s.c.reserve(a.size());
  for (const Rat& q : a) {
    if (denominator(q) != 1)
      throw std::logic_error("to_integer_series: non-integral coefficient " + rat_to_string(q));
    s.c.push_back(numerator(q));
  }
  return s;
}

namespace {

// largest square divisor split: n = sq^2 * sf with sf squarefree
void split_square(const Int& n, Int& sq, Int& sf) {
  sq = 1;
  sf = 1;
  Int m = n;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) { m /= p; ++e; }
    for (int i = 0; i < e / 2; ++i) sq *= p;
    if (e % 2) sf *= p;
  }
  sf *= m;
}

}  // namespace

void SymValue::add_term(int p, const Int& s, const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(p, s);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymValue SymValue::term(const Rat& coef, int pi_pow, const Int& radicand) {
  if (radicand <= 0) throw std::domain_error("SymValue::term: radicand must be positive");
  Int sq, sf;
  split_square(radicand, sq, sf);
  SymValue v;
  v.add_term(pi_pow, sf, coef * Rat(sq));
  return v;
}

SymValue SymValue::sqrt_of(const Rat& q) {
  if (q < 0) throw std::domain_error("SymValue::sqrt_of: negative argument");
  if (q == 0) return SymValue();
  // sqrt(a/b) = sqrt(a*b)/b
  return term(Rat(1, denominator(q)), 0, numerator(q) * denominator(q));
}

bool SymValue::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == std::make_pair(0, Int(1));
}

Rat SymValue::rat_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_rational()) throw std::domain_error("SymValue::rat_value: not rational");
  return terms_.begin()->second;
}

SymValue SymValue::operator+(const SymValue& o) const {
  SymValue r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

SymValue SymValue::operator-() const {
  SymValue r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

SymValue SymValue::operator-(const SymValue& o) const { return *this + (-o); }

SymValue SymValue::operator*(const SymValue& o) const {
  SymValue r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      // sqrt(s) * sqrt(t) = g * sqrt(st / g^2) with g = gcd(s, t)
      Int g = gcd(ka.second, kb.second);
      r.add_term(ka.first + kb.first, (ka.second / g) * (kb.second / g),
                 ca * cb * Rat(g));
    }
  return r;
}

double SymValue::approx() const {
  double v = 0;
  for (const auto& [k, c] : terms_) {
    double t = static_cast<double>(c);
    for (int i = 0; i < k.first; ++i) t *= 3.14159265358979323846;
    t *= std::sqrt(static_cast<double>(k.second));
    v += t;
  }
  return v;
}

std::optional<std::tuple<Rat, int, Int>> SymValue::single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [k, c] = *terms_.begin();
  return std::make_tuple(c, k.first, k.second);
}

bool SymValue::less_than(const SymValue& o) const {
  if (*this == o) return false;
  double a = approx(), b = o.approx();
  double sep = std::abs(a - b);
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  if (sep < 1e-9 * scale)
    throw std::logic_error("SymValue::less_than: values too close to order reliably");
  return a < b;
}

std::string SymValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rat coef = c;
    if (!first) {
      os << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    first = false;
    bool unit = (coef == 1) && (k.first > 0 || k.second != 1);
    if (!unit) os << rat_to_string(coef);
    if (k.first > 0) {
      if (!unit) os << "*";
      os << "pi";
      if (k.first > 1) os << "^" << k.first;
      unit = false;
    }
    if (k.second != 1) {
      if (!unit) os << "*";
      os << "sqrt(" << k.second.str() << ")";
    }
  }
  return os.str();
}

SymValue sphere_volume(int n) {
  if (n < 1) throw std::domain_error("sphere_volume: dimension must be >= 1");
  // vol(S^{n-1}) = 2 pi^{n/2} / Gamma(n/2)
  if (n % 2 == 0) {
    int m = n / 2;  // Gamma(m) = (m-1)!
    Int f = 1;
    for (int i = 2; i < m; ++i) f *= i;
    return SymValue::term(Rat(2, f), m, 1);
  }
  // odd n = 2m+1: Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!)
  int m = (n - 1) / 2;
  Int fact2m = 1, factm = 1, pow4 = 1;
  for (int i = 2; i <= 2 * m; ++i) fact2m *= i;
  for (int i = 2; i <= m; ++i) factm *= i;
  for (int i = 0; i < m; ++i) pow4 *= 4;
  // 2 pi^{m+1/2} / Gamma(m+1/2) = 2 * 4^m * m! * pi^m / (2m)!
  return SymValue::term(Rat(2 * pow4 * factm, fact2m), m, 1);
}

}  // namespace orbispec

#include "orbispec/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbispec {

long euler_phi(long n) {
  if (n <= 0) throw std::domain_error("euler_phi: nonpositive argument");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// exact division of integer polynomials (remainder must vanish)
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<Int> q(dn - dd + 1, Int(0));
  for (int k = dn - dd; k >= 0; --k) {
    Int f = num[k + dd] / den[dd];
    q[k] = f;
    for (int j = 0; j <= dd; ++j) num[k + j] -= f * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

struct CycTable {
  long n;
  long phi;
  // reduction of x^j modulo Phi_n as a vector over the power basis, for
  // j in [phi, jmax]; rows[j - phi]
  std::vector<std::vector<Rat>> rows;
};

std::map<long, std::vector<Int>> g_phi_cache;
std::map<long, CycTable> g_table_cache;
std::mutex g_cyc_mutex;

const std::vector<Int>& phi_poly_locked(long n) {
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;
  // x^n - 1 divided by the product of Phi_d over proper divisors d of n
  std::vector<Int> num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d) continue;
    num = poly_div_exact(std::move(num), phi_poly_locked(d));
  }
  return g_phi_cache.emplace(n, std::move(num)).first->second;
}

const CycTable& table_locked(long n) {
  auto it = g_table_cache.find(n);
  if (it != g_table_cache.end()) return it->second;
  const std::vector<Int>& phi = phi_poly_locked(n);
  long deg = static_cast<long>(phi.size()) - 1;
  CycTable t;
  t.n = n;
  t.phi = deg;
  // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1}) since Phi is monic
  long jmax = std::max(n - 1, 2 * deg - 2);
  if (deg == 0) jmax = -1;  // n == 1: no rows needed
  if (jmax >= deg) {
    std::vector<Rat> row(deg);
    for (long i = 0; i < deg; ++i) row[i] = -Rat(phi[i]);
    t.rows.push_back(row);
    for (long j = deg + 1; j <= jmax; ++j) {
      // multiply previous row by x and reduce the spill-over term
      const std::vector<Rat>& prev = t.rows.back();
      std::vector<Rat> cur(deg, Rat(0));
      for (long i = 0; i + 1 < deg; ++i) cur[i + 1] = prev[i];
      if (deg >= 1 && prev[deg - 1] != 0) {
        const std::vector<Rat>& top = t.rows[0];
        for (long i = 0; i < deg; ++i) cur[i] += prev[deg - 1] * top[i];
      }
      t.rows.push_back(std::move(cur));
    }
  }
  return g_table_cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
  std::lock_guard<std::mutex> lock(g_cyc_mutex);
  return phi_poly_locked(n);
}

Cyclotomic Cyclotomic::from_raw(long n, const std::vector<Rat>& raw) {
  std::lock_guard<std::mutex> lock(g_cyc_mutex);
  const CycTable& t = table_locked(n);
  std::vector<Rat> c(static_cast<size_t>(t.phi), Rat(0));
  for (size_t j = 0; j < raw.size(); ++j) {
    if (raw[j] == 0) continue;
    if (static_cast<long>(j) < t.phi) {
      c[j] += raw[j];
    } else {
      const std::vector<Rat>& row = t.rows.at(j - t.phi);
      for (long i = 0; i < t.phi; ++i) c[i] += raw[j] * row[i];
    }
  }
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::zeta_power(long n, long k) {
  if (n <= 0) throw std::domain_error("zeta_power: order must be positive");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rat> raw(static_cast<size_t>(k) + 1, Rat(0));
  raw[k] = 1;
  return from_raw(n, raw);
}

bool Cyclotomic::is_zero() const {
  for (const Rat& q : c_)
    if (q != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rat_value() const {
  if (!is_rational()) throw std::domain_error("Cyclotomic::rat_value: not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

Cyclotomic Cyclotomic::lifted_to(long m) const {
  if (m % n_) throw std::invalid_argument("Cyclotomic::lifted_to: order must be a multiple");
  if (m == n_) return *this;
  long s = m / n_;
  // zeta_n^k = zeta_m^{k s}
  std::vector<Rat> raw;
  raw.resize(static_cast<size_t>((c_.size() ? c_.size() - 1 : 0) * s) + 1, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) raw[k * s] += c_[k];
  return from_raw(m, raw);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long m = std::lcm(n_, o.n_);
  Cyclotomic a = lifted_to(m), b = o.lifted_to(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Rat& q : r.c_) q = -q;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long m = std::lcm(n_, o.n_);
  Cyclotomic a = lifted_to(m), b = o.lifted_to(m);
  size_t la = a.c_.size(), lb = b.c_.size();
  if (la == 0 || lb == 0) return Cyclotomic(m, std::vector<Rat>(la ? la : lb, Rat(0)));
  std::vector<Rat> raw(la + lb - 1, Rat(0));
  for (size_t i = 0; i < la; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < lb; ++j) raw[i + j] += a.c_[i] * b.c_[j];
  }
  return from_raw(m, raw);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  long m = std::lcm(n_, o.n_);
  return lifted_to(m).c_ == o.lifted_to(m).c_;
}

Cyclotomic Cyclotomic::conj() const {
  // z -> z^{n-1}; push each basis power through and reduce
  if (n_ == 1) return *this;
  std::vector<Rat> raw(static_cast<size_t>(n_), Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    size_t e = (k * static_cast<size_t>(n_ - 1)) % static_cast<size_t>(n_);
    raw[e] += c_[k];
  }
  return from_raw(n_, raw);
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return rat_to_string(rat_value());
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    os << rat_to_string(c_[k]);
    if (k >= 1) os << "*z" << n_ << "^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

void ExactScalar::assign(const Cyclotomic& c) {
  if (c.is_rational())
    v_ = c.rat_value();
  else
    v_ = c;
}

const Rat& ExactScalar::rat_value() const {
  if (!is_rational()) throw std::domain_error("ExactScalar: not rational");
  return std::get<Rat>(v_);
}

Cyclotomic ExactScalar::cyc_value() const {
  if (is_rational()) return Cyclotomic(std::get<Rat>(v_));
  return std::get<Cyclotomic>(v_);
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  if (is_rational() && o.is_rational()) return ExactScalar(rat_value() + o.rat_value());
  return ExactScalar(cyc_value() + o.cyc_value());
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
  if (is_rational() && o.is_rational()) return ExactScalar(rat_value() - o.rat_value());
  return ExactScalar(cyc_value() - o.cyc_value());
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  if (is_rational() && o.is_rational()) return ExactScalar(rat_value() * o.rat_value());
  return ExactScalar(cyc_value() * o.cyc_value());
}

ExactScalar ExactScalar::operator-() const {
  if (is_rational()) return ExactScalar(-rat_value());
  return ExactScalar(-cyc_value());
}

bool ExactScalar::operator==(const ExactScalar& o) const {
  if (is_rational() != o.is_rational()) return false;  // collapse keeps forms canonical
  if (is_rational()) return rat_value() == o.rat_value();
  return std::get<Cyclotomic>(v_) == std::get<Cyclotomic>(o.v_);
}

std::string ExactScalar::to_string() const {
  if (is_rational()) return rat_to_string(rat_value());
  return std::get<Cyclotomic>(v_).to_string();
}

}  // namespace orbispec

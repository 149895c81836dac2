#include "orbispec/lattice.hpp"

#include <stdexcept>

namespace orbispec {

void Lattice::validate() const {
  if (gram.rows != rank || gram.cols != rank)
    throw std::invalid_argument("lattice: Gram shape mismatch");
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (gram.at(i, j) != gram.at(j, i))
        throw std::invalid_argument("lattice: Gram not symmetric");
  // exact positive definiteness: leading principal minors positive
  for (int k = 1; k <= rank; ++k) {
    RatMatrix sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = gram.at(i, j);
    if (!(rat_det(sub) > 0))
      throw std::invalid_argument("lattice: Gram not positive definite");
  }
}

SymValue Lattice::covolume() const { return SymValue::sqrt_of(rat_det(gram)); }

Lattice dual_lattice(const Lattice& l) {
  auto inv = rat_inverse(l.gram);
  if (!inv) throw std::invalid_argument("dual_lattice: singular Gram");
  Lattice d;
  d.rank = l.rank;
  d.gram = *inv;
  d.name = l.name.empty() ? "dual" : l.name + "*";
  return d;
}

Rat lattice_norm(const RatMatrix& gram, const std::vector<Int>& v) {
  Rat s = 0;
  int n = gram.rows;
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      s += gram.at(i, j) * Rat(v[i] * v[j]);
    }
  }
  return s;
}

namespace {

struct LdlFactors {
  std::vector<Rat> d;                  // positive diagonal
  std::vector<std::vector<Rat>> r;     // unit upper triangular rows
};

// G = R^T D R with R unit upper triangular: norm(x) = sum_i d_i (x_i + sum_{j>i} r_ij x_j)^2
LdlFactors ldl(const RatMatrix& g) {
  int n = g.rows;
  LdlFactors f;
  f.d.assign(n, Rat(0));
  f.r.assign(n, std::vector<Rat>(n, Rat(0)));
  RatMatrix a = g;
  for (int i = 0; i < n; ++i) {
    f.d[i] = a.at(i, i);
    if (!(f.d[i] > 0)) throw std::invalid_argument("ldl: not positive definite");
    for (int j = i; j < n; ++j) f.r[i][j] = a.at(i, j) / f.d[i];
    for (int k = i + 1; k < n; ++k)
      for (int l = i + 1; l < n; ++l)
        a.at(k, l) -= f.d[i] * f.r[i][k] * f.r[i][l];
  }
  return f;
}

// The sweep itself runs on a rescaled copy of the factorization so every
// bound check is a plain integer comparison: with q clearing the r_ij
// denominators and scale = q^2 * (denominators of d and of the budget),
// scale * norm(x) = sum_i w_i (q x_i + C_i)^2 stays in Int throughout.
struct ScaledForm {
  int n = 0;
  Int q = 1;                          // common denominator of the r rows
  std::vector<std::vector<Int>> rq;   // rq[i][j] = q * r_ij, j > i
  std::vector<Int> w;                 // w[i] = scale * d_i / q^2
  Int scale = 1;                      // scaled_norm = scale * norm
  Int budget = 0;                     // scale * mu_max
};

Int floor_div(const Int& a, const Int& b) {  // b > 0
  Int quo = a / b;
  if (quo * b > a) --quo;
  return quo;
}

ScaledForm scale_form(const LdlFactors& f, int n, const Rat& mu_max) {
  ScaledForm sf;
  sf.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sf.q = lcm(sf.q, denominator(f.r[i][j]));
  Int dbase = 1;
  for (int i = 0; i < n; ++i) dbase = lcm(dbase, denominator(f.d[i]));
  Rat bud = Rat(sf.q * sf.q * dbase) * mu_max;
  Int m = denominator(bud);
  sf.scale = sf.q * sf.q * dbase * m;
  sf.budget = numerator(bud);
  sf.w.reserve(n);
  for (int i = 0; i < n; ++i)
    sf.w.push_back(m * (dbase / denominator(f.d[i])) * numerator(f.d[i]));
  sf.rq.assign(n, {});
  for (int i = 0; i < n; ++i) {
    sf.rq[i].assign(n, Int(0));
    for (int j = i + 1; j < n; ++j)
      sf.rq[i][j] = (sf.q / denominator(f.r[i][j])) * numerator(f.r[i][j]);
  }
  return sf;
}

void sweep_level(const ScaledForm& sf, int i, const Int& rem, const Int& used,
                 std::vector<Int>& x,
                 const std::function<void(const std::vector<Int>&, const Int&)>& fn) {
  if (i < 0) {
    fn(x, used);
    return;
  }
  Int c = 0;
  for (int j = i + 1; j < sf.n; ++j)
    if (sf.rq[i][j] != 0 && x[j] != 0) c += sf.rq[i][j] * x[j];
  Int center = floor_div(-c, sf.q);
  Int t = sf.q * center + c;
  for (Int xi = center;; --xi, t -= sf.q) {
    Int spent = sf.w[i] * t * t;
    if (spent > rem) break;
    x[i] = xi;
    sweep_level(sf, i - 1, rem - spent, used + spent, x, fn);
  }
  t = sf.q * (center + 1) + c;
  for (Int xi = center + 1;; ++xi, t += sf.q) {
    Int spent = sf.w[i] * t * t;
    if (spent > rem) break;
    x[i] = xi;
    sweep_level(sf, i - 1, rem - spent, used + spent, x, fn);
  }
  x[i] = 0;
}

}  // namespace

void for_vectors_in_ball(const RatMatrix& gram, const Rat& mu_max, Int* scale,
                         const std::function<void(const std::vector<Int>&, const Int&)>& fn) {
  int n = gram.rows;
  if (mu_max < 0) {
    if (scale) *scale = 1;
    return;
  }
  if (n == 0) {
    if (scale) *scale = 1;
    fn({}, Int(0));
    return;
  }
  LdlFactors f = ldl(gram);
  ScaledForm sf = scale_form(f, n, mu_max);
  if (scale) *scale = sf.scale;
  std::vector<Int> x(n, Int(0));
  sweep_level(sf, n - 1, sf.budget, Int(0), x, fn);
}

std::vector<std::vector<Int>> vectors_of_norm(const RatMatrix& gram, const Rat& mu) {
  if (mu < 0) return {};
  std::vector<std::vector<Int>> out;
  Int scale = 1;
  std::vector<std::pair<std::vector<Int>, Int>> hits;
  for_vectors_in_ball(gram, mu, &scale,
                      [&](const std::vector<Int>& v, const Int& sn) { hits.emplace_back(v, sn); });
  Rat target = Rat(scale) * mu;
  if (denominator(target) != 1) return {};
  for (auto& [v, sn] : hits)
    if (sn == numerator(target)) out.push_back(std::move(v));
  return out;
}

std::vector<std::vector<Int>> vectors_in_ball(const RatMatrix& gram, const Rat& mu_max) {
  std::vector<std::vector<Int>> out;
  for_vectors_in_ball(gram, mu_max, nullptr,
                      [&](const std::vector<Int>& v, const Int&) { out.push_back(v); });
  return out;
}

std::map<Rat, long long> theta_counts(const RatMatrix& gram, const Rat& mu_max) {
  // one sweep over the ball of radius mu_max, classified by achieved norm
  std::map<Int, long long> scaled;
  Int scale = 1;
  for_vectors_in_ball(gram, mu_max, &scale,
                      [&](const std::vector<Int>&, const Int& sn) { ++scaled[sn]; });
  std::map<Rat, long long> counts;
  for (const auto& [sn, cnt] : scaled) counts[Rat(sn) / Rat(scale)] = cnt;
  return counts;
}

}  // namespace orbispec

#include "orbispec/crystal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

#include "orbispec/cyclotomic.hpp"

namespace orbispec {

namespace {

Rat frac_part(const Rat& q) { return q - Rat(floor_rat(q)); }

std::vector<Rat> mod_one(std::vector<Rat> v) {
  for (Rat& q : v) q = frac_part(q);
  return v;
}

std::vector<Rat> apply_affine(const AffineIsometry& a, const std::vector<Rat>& p) {
  int n = a.B.rows;
  std::vector<Rat> out(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i] += Rat(a.B.at(i, j)) * p[j];
    out[i] += a.b[i];
  }
  return mod_one(std::move(out));
}

std::string key_of(const AffineIsometry& a) {
  std::ostringstream os;
  for (const Int& v : a.B.a) os << v.str() << ",";
  os << "|";
  for (const Rat& q : a.b) os << rat_to_string(q) << ",";
  return os.str();
}

}  // namespace

void AffineIsometry::normalize() {
  for (Rat& q : b) q = frac_part(q);
}

CrystalGroup CrystalGroup::build(Lattice lattice, std::vector<AffineIsometry> gens,
                                 long long cap) {
  lattice.validate();
  int n = lattice.rank;
  for (AffineIsometry& g : gens) {
    if (g.B.rows != n || g.B.cols != n || static_cast<int>(g.b.size()) != n)
      throw std::invalid_argument("crystal: generator shape mismatch");
    Int det = bareiss_det(g.B);
    if (det != 1 && det != -1)
      throw std::invalid_argument("crystal: linear part not unimodular");
    RatMatrix bm = to_rat(g.B);
    if (!(mat_mul(mat_mul(mat_transpose(bm), lattice.gram), bm) == lattice.gram))
      throw std::invalid_argument("crystal: linear part does not preserve the Gram form");
    g.normalize();
  }
  CrystalGroup cg;
  cg.lattice_ = std::move(lattice);
  AffineIsometry id{IntMatrix::identity(n), std::vector<Rat>(n, Rat(0))};
  std::map<std::string, int> index;
  cg.reps_.push_back(id);
  index.emplace(key_of(id), 0);
  auto compose = [n](const AffineIsometry& x, const AffineIsometry& y) {
    AffineIsometry z{mat_mul(x.B, y.B), x.b};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) z.b[i] += Rat(x.B.at(i, j)) * y.b[j];
    z.normalize();
    return z;
  };
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const AffineIsometry& g : gens) {
      AffineIsometry next = compose(cg.reps_[cur], g);
      std::string k = key_of(next);
      if (index.count(k)) continue;
      if (static_cast<long long>(cg.reps_.size()) >= cap)
        throw BudgetExceeded("crystal group closure exceeded cap");
      index.emplace(std::move(k), static_cast<int>(cg.reps_.size()));
      cg.reps_.push_back(std::move(next));
      queue.push_back(static_cast<int>(cg.reps_.size()) - 1);
    }
  }
  int m = static_cast<int>(cg.reps_.size());
  cg.table_.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      cg.table_[i][j] = index.at(key_of(compose(cg.reps_[i], cg.reps_[j])));
  cg.inv_.assign(m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (cg.table_[i][j] == 0) cg.inv_[i] = j;
  return cg;
}

std::string CrystalGroup::describe(int i) const {
  const AffineIsometry& a = reps_[i];
  if (i == 0) return "id";
  std::ostringstream os;
  bool lin_id = a.B == IntMatrix::identity(a.B.rows);
  if (!lin_id) {
    os << "B[";
    for (int r = 0; r < a.B.rows; ++r) {
      if (r) os << ";";
      for (int c = 0; c < a.B.cols; ++c) {
        if (c) os << " ";
        os << a.B.at(r, c).str();
      }
    }
    os << "]";
  }
  bool has_shift = std::any_of(a.b.begin(), a.b.end(), [](const Rat& q) { return q != 0; });
  if (has_shift || lin_id) {
    os << "t(";
    for (size_t j = 0; j < a.b.size(); ++j) {
      if (j) os << ",";
      os << rat_to_string(a.b[j]);
    }
    os << ")";
  }
  return os.str();
}

int AffineFixedSet::component_of(const std::vector<Rat>& p) const {
  std::vector<Rat> y = mat_apply(vinv, p);
  std::vector<Rat> key;
  key.reserve(bound_coords.size());
  for (int i : bound_coords) key.push_back(frac_part(y[i]));
  for (size_t j = 0; j < component_keys.size(); ++j)
    if (component_keys[j] == key) return static_cast<int>(j);
  return -1;
}

AffineFixedSet affine_fixed_set(const CrystalGroup& cg, const std::vector<int>& elems,
                                long long component_cap) {
  int n = cg.lattice().rank;
  std::vector<int> use = elems;
  if (use.empty()) use.push_back(0);
  int m = static_cast<int>(use.size()) * n;
  IntMatrix a(m, n);
  std::vector<Rat> c(m, Rat(0));
  for (size_t e = 0; e < use.size(); ++e) {
    const AffineIsometry& g = cg.rep(use[e]);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        a.at(static_cast<int>(e) * n + i, j) = g.B.at(i, j) - (i == j ? 1 : 0);
      c[static_cast<size_t>(e) * n + i] = -g.b[i];
    }
  }
  SmithResult snf = smith_normal_form(a);
  // transformed right-hand side
  std::vector<Rat> uc(m, Rat(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (snf.u.at(i, j) != 0) uc[i] += Rat(snf.u.at(i, j)) * c[j];

  AffineFixedSet out;
  std::vector<int> free_coords;
  std::vector<std::pair<int, Int>> bound;  // (coordinate, diagonal divisor)
  for (int i = 0; i < n; ++i) {
    Int d = (i < snf.d.rows) ? snf.d.at(i, i) : Int(0);
    if (d == 0) {
      if (denominator(uc[i]) != 1) return out;  // inconsistent row: empty
      free_coords.push_back(i);
    } else {
      bound.emplace_back(i, d);
    }
  }
  for (int i = n; i < m; ++i)
    if (denominator(uc[i]) != 1) return out;

  Int comp = 1;
  for (auto& [i, d] : bound) {
    (void)i;
    comp *= d;
    if (comp > component_cap)
      throw UnsupportedSector("fixed set has too many components to enumerate");
  }
  out.empty = false;
  out.dim = static_cast<int>(free_coords.size());
  out.components = comp.convert_to<long long>();
  out.direction_basis = IntMatrix(n, out.dim);
  for (int j = 0; j < out.dim; ++j)
    for (int i = 0; i < n; ++i) out.direction_basis.at(i, j) = snf.v.at(i, free_coords[j]);
  // component volume: Gram determinant of the direction columns
  if (out.dim > 0) {
    RatMatrix p = to_rat(out.direction_basis);
    out.component_volume =
        SymValue::sqrt_of(rat_det(mat_mul(mat_mul(mat_transpose(p), cg.lattice().gram), p)));
  } else {
    out.component_volume = SymValue(1);
  }
  auto vin = rat_inverse(to_rat(snf.v));
  out.vinv = *vin;
  for (auto& [i, d] : bound) out.bound_coords.push_back(i);
  // enumerate components: all residue choices for the bound coordinates
  std::vector<std::vector<Rat>> ys{std::vector<Rat>(n, Rat(0))};
  for (auto& [i, d] : bound) {
    std::vector<std::vector<Rat>> next;
    for (const std::vector<Rat>& y : ys)
      for (Int t = 0; t < d; ++t) {
        std::vector<Rat> y2 = y;
        y2[i] = frac_part((uc[i] + Rat(t)) / Rat(d));
        next.push_back(std::move(y2));
      }
    ys = std::move(next);
  }
  for (const std::vector<Rat>& y : ys) {
    std::vector<Rat> x(n, Rat(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (snf.v.at(i, j) != 0) x[i] += Rat(snf.v.at(i, j)) * y[j];
    out.component_points.push_back(mod_one(std::move(x)));
    std::vector<Rat> key;
    for (int i : out.bound_coords) key.push_back(frac_part(y[i]));
    out.component_keys.push_back(std::move(key));
  }
  return out;
}

std::vector<FlatSectorDescriptor> flat_sector_list(const CrystalGroup& cg,
                                                   const Presentation& gamma,
                                                   long long budget) {
  HomEnumeration homs = hom_classes(cg, gamma, budget);
  std::vector<FlatSectorDescriptor> out;
  for (HomClass& cls : homs.classes) {
    AffineFixedSet fixed = affine_fixed_set(cg, cls.rep);
    if (fixed.empty) continue;
    FlatSectorDescriptor sec;
    sec.nontwisted = std::all_of(cls.rep.begin(), cls.rep.end(), [](int i) { return i == 0; });
    sec.hom = std::move(cls);
    sec.fixed = std::move(fixed);
    sec.centralizer = hom_stabilizer(cg, sec.hom.rep);
    {
      std::ostringstream os;
      os << "(";
      for (size_t i = 0; i < sec.hom.rep.size(); ++i) {
        if (i) os << ",";
        os << cg.describe(sec.hom.rep[i]);
      }
      os << ")";
      sec.label = os.str();
    }
    // orbits of the centralizer on the components
    long long nc = sec.fixed.components;
    std::vector<int> parent(static_cast<size_t>(nc));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (int cidx : sec.centralizer) {
      const AffineIsometry& g = cg.rep(cidx);
      for (long long j = 0; j < nc; ++j) {
        int j2 = sec.fixed.component_of(apply_affine(g, sec.fixed.component_points[j]));
        if (j2 < 0)
          throw std::logic_error("flat sectors: centralizer left the fixed set");
        int a = find(static_cast<int>(j)), b = find(j2);
        if (a != b) parent[b] = a;
      }
    }
    std::map<int, std::vector<int>> orbits;
    for (long long j = 0; j < nc; ++j)
      orbits[find(static_cast<int>(j))].push_back(static_cast<int>(j));
    for (auto& [root, members] : orbits) {
      (void)root;
      sec.component_orbits.push_back(members);
    }
    sec.m = static_cast<long long>(sec.component_orbits.size());
    out.push_back(std::move(sec));
  }
  return out;
}

namespace {

// evaluate a character sum given as fraction-of-turn -> count, certifying a
// rational (hence integral) total
Rat evaluate_character_sum(const std::map<Rat, Int>& acc) {
  long n = 1;
  for (const auto& [f, cnt] : acc) {
    (void)cnt;
    n = std::lcm(n, static_cast<long>(denominator(f).convert_to<long long>()));
  }
  Cyclotomic total(Rat(0));
  for (const auto& [f, cnt] : acc) {
    long num = static_cast<long>(numerator(f).convert_to<long long>());
    long den = static_cast<long>(denominator(f).convert_to<long long>());
    total += Cyclotomic(Rat(cnt)) * Cyclotomic::zeta_power(n, num * (n / den));
  }
  if (!total.is_rational())
    throw std::logic_error("flat spectrum: character sum is not rational");
  return total.rat_value();
}

}  // namespace

std::map<Rat, long long> flat_spectrum_counts(const CrystalGroup& cg, const Rat& mu_max) {
  int n = cg.lattice().rank;
  auto dual_gram = rat_inverse(cg.lattice().gram);
  std::vector<bool> linear_id(cg.order()), shift_zero(cg.order());
  for (int e = 0; e < cg.order(); ++e) {
    linear_id[e] = cg.rep(e).B == IntMatrix::identity(n);
    shift_zero[e] = std::all_of(cg.rep(e).b.begin(), cg.rep(e).b.end(),
                                [](const Rat& q) { return q == 0; });
  }
  // character-sum pool per scaled norm; phase 0 (the overwhelmingly common
  // case) is counted separately so the inner map only sees genuine twists
  std::map<Int, long long> plain;
  std::map<Int, std::map<Rat, Int>> twisted;
  Int scale = 1;
  for_vectors_in_ball(
      *dual_gram, mu_max, &scale, [&](const std::vector<Int>& mvec, const Int& sn) {
        long long* plain_slot = nullptr;
        for (int e = 0; e < cg.order(); ++e) {
          const AffineIsometry& g = cg.rep(e);
          if (!linear_id[e]) {
            // fixed dual vectors: B^T m = m
            bool fixed = true;
            for (int j = 0; j < n && fixed; ++j) {
              Int s = 0;
              for (int i = 0; i < n; ++i)
                if (mvec[i] != 0) s += g.B.at(i, j) * mvec[i];
              fixed = (s == mvec[j]);
            }
            if (!fixed) continue;
          }
          Rat phase = 0;
          if (!shift_zero[e])
            for (int i = 0; i < n; ++i)
              if (mvec[i] != 0 && g.b[i] != 0) phase += Rat(mvec[i]) * g.b[i];
          phase = frac_part(phase);
          if (phase == 0) {
            if (!plain_slot) plain_slot = &plain[sn];
            ++*plain_slot;
          } else {
            ++twisted[sn][phase];
          }
        }
      });
  std::map<Rat, long long> counts;
  for (const auto& [sn, cnt] : plain) {
    Rat total = Rat(cnt);
    auto tw = twisted.find(sn);
    if (tw != twisted.end()) total += evaluate_character_sum(tw->second);
    total /= Rat(cg.order());
    if (denominator(total) != 1 || total < 0)
      throw std::logic_error("flat spectrum: multiplicity is not a nonnegative integer");
    if (total != 0) counts[Rat(sn) / Rat(scale)] = numerator(total).convert_to<long long>();
  }
  for (const auto& [sn, sums] : twisted) {
    if (plain.count(sn)) continue;  // already handled
    Rat total = evaluate_character_sum(sums) / Rat(cg.order());
    if (denominator(total) != 1 || total < 0)
      throw std::logic_error("flat spectrum: multiplicity is not a nonnegative integer");
    if (total != 0) counts[Rat(sn) / Rat(scale)] = numerator(total).convert_to<long long>();
  }
  return counts;
}

SymValue flat_eigenvalue(const Rat& mu, bool physical) {
  if (!physical) return SymValue(mu);
  return SymValue::term(Rat(4) * mu, 2, 1);
}

SpectrumSegment flat_spectrum_segment(const CrystalGroup& cg, const Rat& mu_max,
                                      bool physical_eigenvalues) {
  // sweep one unit past the requested bound so completeness holds strictly
  // below the reported cutoff
  Rat bound = mu_max + 1;
  SpectrumSegment seg;
  for (const auto& [mu, cnt] : flat_spectrum_counts(cg, bound))
    seg.add(flat_eigenvalue(mu, physical_eigenvalues), cnt);
  seg.cutoff = flat_eigenvalue(bound, physical_eigenvalues);
  return seg;
}

FlatOrbitSpectrum flat_orbit_spectrum(const CrystalGroup& cg,
                                      const FlatSectorDescriptor& sec,
                                      const std::vector<int>& orbit, const Rat& mu_max,
                                      bool physical_eigenvalues) {
  FlatOrbitSpectrum out;
  const AffineFixedSet& fs = sec.fixed;
  int j0 = orbit[0];
  // stabilizer of the chosen component inside the centralizer
  std::vector<int> stab;
  for (int cidx : sec.centralizer)
    if (fs.component_of(apply_affine(cg.rep(cidx), fs.component_points[j0])) == j0)
      stab.push_back(cidx);
  if (fs.dim == 0) {
    out.supported = true;
    out.seg.add(SymValue(0), 1);
    out.volume_eff = SymValue(1);
    out.kernel_order = static_cast<long long>(stab.size());
    return out;
  }
  int n = cg.lattice().rank;
  if (fs.dim == n) {
    // full-dimensional fixed set means the trivial image, so this sector is
    // the crystal quotient itself: average the point group instead
    if (static_cast<int>(stab.size()) != cg.order())
      throw std::logic_error("flat sectors: full-dimensional sector with a proper stabilizer");
    out.supported = true;
    out.kernel_order = 1;
    Rat bound = mu_max + 1;
    for (const auto& [mu, cnt] : flat_spectrum_counts(cg, bound))
      out.seg.add(flat_eigenvalue(mu, physical_eigenvalues), cnt);
    out.seg.cutoff = flat_eigenvalue(bound, physical_eigenvalues);
    out.volume_eff = cg.lattice().covolume() * SymValue(Rat(1, cg.order()));
    return out;
  }
  RatMatrix p = to_rat(fs.direction_basis);
  std::vector<std::vector<Rat>> taus;
  for (int cidx : stab) {
    const AffineIsometry& g = cg.rep(cidx);
    RatMatrix bp = mat_mul(to_rat(g.B), p);
    auto rdir = solve_exact(p, bp);
    if (!rdir || !(*rdir == RatMatrix::identity(fs.dim))) {
      out.reason = "component stabilizer acts by a non-translational isometry";
      return out;
    }
    // effective translation in direction coordinates
    std::vector<Rat> w = apply_affine(g, fs.component_points[j0]);
    for (int i = 0; i < n; ++i) w[i] -= fs.component_points[j0][i];
    std::vector<Rat> y = mat_apply(fs.vinv, w);
    std::vector<Rat> tau;
    bool trivial = true;
    std::vector<int> free_coords;
    for (int i = 0; i < n; ++i)
      if (std::find(fs.bound_coords.begin(), fs.bound_coords.end(), i) ==
          fs.bound_coords.end())
        free_coords.push_back(i);
    for (int i : free_coords) {
      Rat f = frac_part(y[i]);
      tau.push_back(f);
      trivial &= (f == 0);
    }
    if (trivial) ++out.kernel_order;
    taus.push_back(std::move(tau));
  }
  // lattice generated by Z^dim and the translation vectors, in direction coords
  int dim = fs.dim;
  Int den = 1;
  for (const auto& t : taus)
    for (const Rat& q : t) den = lcm(den, denominator(q));
  IntMatrix rows(dim + static_cast<int>(taus.size()), dim);
  for (int i = 0; i < dim; ++i) rows.at(i, i) = den;
  for (size_t t = 0; t < taus.size(); ++t)
    for (int j = 0; j < dim; ++j)
      rows.at(dim + static_cast<int>(t), j) =
          numerator(taus[t][j]) * (den / denominator(taus[t][j]));
  SmithResult snf = smith_normal_form(rows);
  // row span of D * V^{-1} equals the row span; divide back by den
  auto vinv = rat_inverse(to_rat(snf.v));
  RatMatrix basis(dim, dim);  // rows are lattice basis vectors
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      basis.at(i, j) = Rat(snf.d.at(i, i)) * vinv->at(i, j) / Rat(den);
  RatMatrix gram_dir = mat_mul(mat_mul(mat_transpose(p), cg.lattice().gram), p);
  RatMatrix ext_gram = mat_mul(mat_mul(basis, gram_dir), mat_transpose(basis));
  out.volume_eff = SymValue::sqrt_of(rat_det(ext_gram));
  auto dual = rat_inverse(ext_gram);
  Rat bound = mu_max + 1;
  out.supported = true;
  for (const auto& [mu, cnt] : theta_counts(*dual, bound))
    out.seg.add(flat_eigenvalue(mu, physical_eigenvalues), cnt);
  out.seg.cutoff = flat_eigenvalue(bound, physical_eigenvalues);
  return out;
}

}  // namespace orbispec

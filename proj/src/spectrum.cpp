#include "orbispec/spectrum.hpp"

#include <algorithm>

#include "orbispec/cyclotomic.hpp"
#include "orbispec/series.hpp"

namespace orbispec {

namespace {

// entries stay sorted by eigenvalue, so lookups can bisect
std::vector<SpectrumEntry>::const_iterator find_entry(
    const std::vector<SpectrumEntry>& entries, const SymValue& lambda) {
  auto it = std::lower_bound(entries.begin(), entries.end(), lambda,
                             [](const SpectrumEntry& e, const SymValue& v) {
                               return e.lambda.less_than(v);
                             });
  if (it != entries.end() && it->lambda == lambda) return it;
  return entries.end();
}

}  // namespace

long long SpectrumSegment::multiplicity_of(const SymValue& lambda) const {
  auto it = find_entry(entries, lambda);
  return it == entries.end() ? 0 : it->mult;
}

void SpectrumSegment::add(const SymValue& lambda, long long mult) {
  if (mult == 0) return;
  auto it = std::lower_bound(entries.begin(), entries.end(), lambda,
                             [](const SpectrumEntry& e, const SymValue& v) {
                               return e.lambda.less_than(v);
                             });
  if (it != entries.end() && it->lambda == lambda) {
    it->mult += mult;
    return;
  }
  entries.insert(it, SpectrumEntry{lambda, mult});
}

SpectrumSegment merge_segments(const SpectrumSegment& a, const SpectrumSegment& b) {
  SpectrumSegment out;
  out.entries.reserve(a.entries.size() + b.entries.size());
  auto ia = a.entries.begin(), ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->lambda == ib->lambda) {
      out.entries.push_back({ia->lambda, ia->mult + ib->mult});
      ++ia, ++ib;
    } else if (ia->lambda.less_than(ib->lambda)) {
      out.entries.push_back(*ia++);
    } else {
      out.entries.push_back(*ib++);
    }
  }
  out.entries.insert(out.entries.end(), ia, a.entries.end());
  out.entries.insert(out.entries.end(), ib, b.entries.end());
  if (a.cutoff && b.cutoff)
    out.cutoff = a.cutoff->less_than(*b.cutoff) ? *a.cutoff : *b.cutoff;
  else if (b.cutoff)
    out.cutoff = b.cutoff;
  else
    out.cutoff = a.cutoff;
  // entries at or above the cutoff are not guaranteed complete; drop them
  if (out.cutoff) {
    auto ge_cutoff = [&](const SpectrumEntry& e) {
      return !e.lambda.less_than(*out.cutoff);
    };
    out.entries.erase(std::remove_if(out.entries.begin(), out.entries.end(), ge_cutoff),
                      out.entries.end());
  }
  return out;
}

std::vector<Int> harmonic_invariant_dims(const std::vector<GroupElement>& elems,
                                         int n, int kmax) {
  if (elems.empty()) throw std::invalid_argument("harmonic_invariant_dims: empty input");
  // averaged full-polynomial invariant dimensions c_k, then h_k = c_k - c_{k-2}
  std::vector<Rat> avg(static_cast<size_t>(kmax) + 1, Rat(0));
  for (const GroupElement& g : elems) {
    if (g.degree() != n)
      throw std::invalid_argument("harmonic_invariant_dims: element degree mismatch");
    std::vector<Rat> s = sym_trace_series(g, kmax);
    for (int k = 0; k <= kmax; ++k) avg[k] += s[k];
  }
  Rat inv(1, static_cast<long>(elems.size()));
  std::vector<Int> h(static_cast<size_t>(kmax) + 1, Int(0));
  for (int k = 0; k <= kmax; ++k) {
    Rat ck = avg[k] * inv;
    Rat hk = ck - (k >= 2 ? avg[k - 2] * inv : Rat(0));
    if (denominator(hk) != 1 || hk < 0)
      throw std::logic_error("harmonic_invariant_dims: non-integral or negative average");
    h[k] = numerator(hk);
  }
  return h;
}

namespace {

SymValue sphere_eigenvalue(int k, int n) { return SymValue(Rat(k) * Rat(k + n - 2)); }

}  // namespace

SpectrumSegment quotient_sphere_spectrum(const std::vector<GroupElement>& elems,
                                         int n, int kmax) {
  std::vector<Int> h = harmonic_invariant_dims(elems, n, kmax);
  SpectrumSegment seg;
  for (int k = 0; k <= kmax; ++k)
    if (h[k] > 0)
      seg.add(sphere_eigenvalue(k, n),
              static_cast<long long>(h[k].convert_to<long long>()));
  seg.cutoff = sphere_eigenvalue(kmax + 1, n);
  return seg;
}

SpectrumSegment sphere_sector_spectrum(const OrthogonalAction& act,
                                       const SectorDescriptor& sec, int kmax) {
  if (sec.fixed.space != SpaceKind::Sphere)
    throw std::invalid_argument("sphere_sector_spectrum: not a sphere sector");
  if (sec.fixed.d == 1) {
    // m isolated points: only the constant function on each
    SpectrumSegment seg;
    seg.add(SymValue(0), sec.m);
    return seg;  // complete, no cutoff
  }
  RestrictedAction ra = restrict_centralizer(act, sec);
  return quotient_sphere_spectrum(ra.distinct, sec.fixed.d, kmax);
}

Int lens_eigenvalue_multiplicity(long q, const std::vector<long>& weights, int k) {
  if (q < 1) throw std::invalid_argument("lens: order must be positive");
  // dimension of degree-k polynomials in z_1..z_m, conj(z_1)..conj(z_m)
  // invariant under the weighted rotation; monomial z^a conj(z)^b transforms
  // by the character sum(s_j (a_j - b_j)) mod q.  Count with a residue DP,
  // then subtract the degree-(k-2) count to pass to harmonics.
  auto poly_count = [&](int deg) -> Int {
    if (deg < 0) return 0;
    // dp[d][r]: number of exponent tuples so far with total degree d and
    // character residue r
    std::vector<std::vector<Int>> dp(static_cast<size_t>(deg) + 1,
                                     std::vector<Int>(static_cast<size_t>(q), Int(0)));
    dp[0][0] = 1;
    for (long s : weights) {
      std::vector<std::vector<Int>> next(static_cast<size_t>(deg) + 1,
                                         std::vector<Int>(static_cast<size_t>(q), Int(0)));
      long sp = ((s % q) + q) % q;
      for (int d = 0; d <= deg; ++d)
        for (long r = 0; r < q; ++r) {
          if (dp[d][r] == 0) continue;
          for (int a = 0; a + d <= deg; ++a)
            for (int b = 0; a + b + d <= deg; ++b) {
              long nr = (r + sp * (a - b)) % q;
              if (nr < 0) nr += q;
              next[d + a + b][nr] += dp[d][r];
            }
        }
      dp = std::move(next);
    }
    return dp[deg][0];
  };
  return poly_count(k) - poly_count(k - 2);
}

std::vector<Int> lens_harmonic_dims_molien(long q, const std::vector<long>& weights,
                                           int kmax) {
  // average over j of 1 / prod_i (1 - zeta^{j s_i} t)(1 - zeta^{-j s_i} t)
  std::vector<Cyclotomic> avg(static_cast<size_t>(kmax) + 1, Cyclotomic(Rat(0)));
  for (long j = 0; j < q; ++j) {
    std::vector<Cyclotomic> det(static_cast<size_t>(kmax) + 1, Cyclotomic(Rat(0)));
    det[0] = Cyclotomic(Rat(1));
    for (long s : weights)
      for (long e : {j * s, -j * s}) {
        std::vector<Cyclotomic> f(static_cast<size_t>(kmax) + 1, Cyclotomic(Rat(0)));
        f[0] = Cyclotomic(Rat(1));
        if (kmax >= 1) f[1] = -Cyclotomic::zeta_power(q, e);
        det = series_mul(det, f);
      }
    std::vector<Cyclotomic> inv = series_inverse(det);
    for (int k = 0; k <= kmax; ++k) avg[k] += inv[k];
  }
  std::vector<Int> h(static_cast<size_t>(kmax) + 1, Int(0));
  for (int k = 0; k <= kmax; ++k) {
    Cyclotomic ck = avg[k];
    Cyclotomic hk = ck - (k >= 2 ? avg[k - 2] : Cyclotomic(Rat(0)));
    if (!hk.is_rational())
      throw std::logic_error("lens molien: non-rational average");
    Rat v = hk.rat_value() / Rat(q);
    if (denominator(v) != 1 || v < 0)
      throw std::logic_error("lens molien: non-integral average");
    h[k] = numerator(v);
  }
  return h;
}

SpectrumSegment lens_spectrum(long q, const std::vector<long>& weights, int kmax) {
  int n = 2 * static_cast<int>(weights.size());
  SpectrumSegment seg;
  for (int k = 0; k <= kmax; ++k) {
    Int h = lens_eigenvalue_multiplicity(q, weights, k);
    if (h > 0) seg.add(sphere_eigenvalue(k, n), h.convert_to<long long>());
  }
  seg.cutoff = sphere_eigenvalue(kmax + 1, n);
  return seg;
}

}  // namespace orbispec

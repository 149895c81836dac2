#include "orbispec/charpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace orbispec {

namespace {

// multiply polynomial p by (t^len - s)
void mul_cycle_factor(std::vector<Rat>& p, int len, int s) {
  std::vector<Rat> q(p.size() + len, Rat(0));
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    q[i + len] += p[i];
    q[i] -= Rat(s) * p[i];
  }
  p = std::move(q);
}

std::vector<Rat> char_poly_cycles(const GroupElement& g) {
  int n = g.degree();
  const std::vector<int>& img = g.perm_images();
  const std::vector<int>& sgn = g.perm_signs();
  std::vector<bool> seen(n, false);
  std::vector<Rat> p{Rat(1)};
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, s = 1, j = i;
    do {
      seen[j] = true;
      if (!sgn.empty()) s *= sgn[j];
      ++len;
      j = img[j];
    } while (j != i);
    mul_cycle_factor(p, len, s);
  }
  return p;
}

std::vector<Rat> char_poly_matrix(const RatMatrix& m) {
  // Faddeev-LeVerrier: c[n] = 1, M_1 = M, c_{n-k} = -tr(M_k)/k,
  // M_{k+1} = M (M_k + c_{n-k} I)
  int n = m.rows;
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  RatMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    Rat tr = 0;
    for (int i = 0; i < n; ++i) tr += mk.at(i, i);
    c[n - k] = -tr / k;
    if (k == n) break;
    RatMatrix adj = mk;
    for (int i = 0; i < n; ++i) adj.at(i, i) += c[n - k];
    mk = mat_mul(m, adj);
  }
  return c;
}

}  // namespace

std::vector<Rat> char_poly(const GroupElement& g) {
  if (g.kind() == ElementKind::Matrix) return char_poly_matrix(g.raw_matrix());
  return char_poly_cycles(g);
}

std::vector<Rat> det_one_minus_t(const GroupElement& g) {
  // det(I - tM) = t^n * charpoly(1/t) for monic charpoly of degree n
  std::vector<Rat> c = char_poly(g);
  std::reverse(c.begin(), c.end());
  return c;
}

std::vector<Rat> sym_trace_series(const GroupElement& g, int kmax) {
  std::vector<Rat> d = det_one_minus_t(g);
  d.resize(static_cast<size_t>(kmax) + 1, Rat(0));
  return series_inverse(d);
}

IntegerSeries sym_power_trace_series(const GroupElement& g, int kmax) {
  return to_integer_series(sym_trace_series(g, kmax));
}

std::string poly_key(const std::vector<Rat>& coeffs) {
  std::ostringstream os;
  for (const Rat& c : coeffs) os << rat_to_string(c) << ";";
  return os.str();
}

CharPolyTable char_poly_table(const std::vector<GroupElement>& elems) {
  CharPolyTable t;
  for (const GroupElement& g : elems) ++t[poly_key(char_poly(g))];
  return t;
}

namespace {

std::vector<std::string> table_mismatches(const CharPolyTable& a, const CharPolyTable& b) {
  std::vector<std::string> bad;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second != v) bad.push_back(k);
  }
  for (const auto& [k, v] : b) {
    (void)v;
    if (!a.count(k)) bad.push_back(k);
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return bad;
}

}  // namespace

AlmostConjugacyWitness almost_conjugacy_witness(const std::vector<GroupElement>& a,
                                                const std::vector<GroupElement>& b) {
  AlmostConjugacyWitness w;
  w.invariant = "characteristic-polynomial count table (orthogonal ambient)";
  w.table_a = char_poly_table(a);
  w.table_b = char_poly_table(b);
  w.mismatched_keys = table_mismatches(w.table_a, w.table_b);
  w.almost_conjugate = w.mismatched_keys.empty();
  return w;
}

AlmostConjugacyWitness almost_conjugacy_witness(const FiniteGroup& ambient,
                                                const std::vector<int>& sub_a,
                                                const std::vector<int>& sub_b) {
  AlmostConjugacyWitness w;
  w.invariant = "ambient conjugacy-class count table";
  std::vector<std::vector<int>> classes = conjugacy_classes(ambient);
  std::vector<int> class_of(ambient.order(), -1);
  for (size_t c = 0; c < classes.size(); ++c)
    for (int e : classes[c]) class_of[e] = static_cast<int>(c);
  auto count = [&](const std::vector<int>& sub) {
    CharPolyTable t;
    for (int e : sub) ++t["class#" + std::to_string(class_of[e])];
    return t;
  };
  w.table_a = count(sub_a);
  w.table_b = count(sub_b);
  w.mismatched_keys = table_mismatches(w.table_a, w.table_b);
  w.almost_conjugate = w.mismatched_keys.empty();
  // conjugacy search: is some ambient g with g A g^-1 = B?
  w.conjugacy_checked = true;
  std::set<int> target(sub_b.begin(), sub_b.end());
  for (int g = 0; g < ambient.order() && !w.conjugate_in_ambient; ++g) {
    bool ok = true;
    for (int x : sub_a)
      if (!target.count(ambient.mult(ambient.mult(g, x), ambient.inv(g)))) {
        ok = false;
        break;
      }
    if (ok && sub_a.size() == sub_b.size()) w.conjugate_in_ambient = true;
  }
  return w;
}

}  // namespace orbispec

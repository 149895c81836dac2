#pragma once

#include <concepts>
#include <map>
#include <string>
#include <vector>

#include "orbispec/matrix.hpp"

namespace orbispec {

enum class ElementKind { Perm, SignedPerm, Matrix };

/**
 * Element of a finite isometry group in one of three concrete shapes:
 *  - Perm: permutation matrix, img[i] is the image position of basis vector i
 *  - SignedPerm: signed permutation, e_i -> sgn[i] * e_{img[i]}
 *  - Matrix: arbitrary invertible matrix with rational entries
 * Composition stays in the cheapest common shape.  All indices 0-based.
 */
class GroupElement {
 public:
  static GroupElement perm(std::vector<int> img);
  static GroupElement signed_perm(std::vector<int> img, std::vector<int> sgn);
  // identity permutation with the given signs (+1/-1 per coordinate)
  static GroupElement signed_diag(const std::vector<int>& sgn);
  // signs -1 exactly at the listed (0-based) coordinates
  static GroupElement sign_flips(int n, const std::vector<int>& flips);
  static GroupElement matrix(RatMatrix m);
  static GroupElement identity(ElementKind kind, int degree);

  ElementKind kind() const { return kind_; }
  int degree() const { return n_; }
  bool is_identity() const;

  // group operation: (a.compose(b))(x) = a(b(x))
  GroupElement compose(const GroupElement& o) const;
  GroupElement inverse() const;

  RatMatrix to_matrix() const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;
  Rat trace() const;

  const std::vector<int>& perm_images() const { return img_; }
  const std::vector<int>& perm_signs() const { return sgn_; }
  const RatMatrix& raw_matrix() const { return mat_; }

  bool operator==(const GroupElement& o) const;
  bool operator<(const GroupElement& o) const;

  std::string describe() const;

 private:
  ElementKind kind_ = ElementKind::Perm;
  int n_ = 0;
  std::vector<int> img_, sgn_;
  RatMatrix mat_;

  GroupElement to_signed() const;  // Perm/SignedPerm -> SignedPerm
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Finite group generated by explicit isometries.  Elements are stored in the
 * deterministic breadth-first generation order with the identity at index 0.
 * A full multiplication table is kept for orders up to 1024; larger groups
 * fall back to compose-and-lookup.
 */
class FiniteGroup {
 public:
  static FiniteGroup generate(std::vector<GroupElement> gens,
                              long long cap = 1000000);
  static FiniteGroup trivial(ElementKind kind, int degree);

  int order() const { return static_cast<int>(elems_.size()); }
  int degree() const { return degree_; }
  const GroupElement& element(int i) const { return elems_[i]; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  int index_of(const GroupElement& g) const;  // -1 if absent
  const std::vector<int>& generator_indices() const { return gen_idx_; }

  int mult(int i, int j) const;
  int inv(int i) const { return inv_[i]; }

 private:
  int degree_ = 0;
  std::vector<GroupElement> elems_;
  std::map<GroupElement, int> index_;
  std::vector<std::vector<int>> table_;  // empty if order too large
  std::vector<int> inv_;
  std::vector<int> gen_idx_;

  void finish();
};

// Minimal interface shared by FiniteGroup and other multiplication-table
// models (e.g. point groups of crystallographic groups).  Index 0 must be
// the identity.
template <class G>
concept GroupTable = requires(const G& g, int i, int j) {
  { g.order() } -> std::convertible_to<int>;
  { g.mult(i, j) } -> std::convertible_to<int>;
  { g.inv(i) } -> std::convertible_to<int>;
};

template <GroupTable G>
bool table_is_abelian(const G& g) {
  int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.mult(i, j) != g.mult(j, i)) return false;
  return true;
}

template <GroupTable G>
int element_order(const G& g, int i) {
  int k = 1, x = i;
  while (x != 0) {
    x = g.mult(x, i);
    ++k;
  }
  return k;
}

/**
 * Conjugacy classes; each class is a sorted index list, classes ordered by
 * their smallest member, so the identity class comes first.
 */
template <GroupTable G>
std::vector<std::vector<int>> conjugacy_classes(const G& g) {
  int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> classes;
  for (int r = 0; r < n; ++r) {
    if (seen[r]) continue;
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      int c = g.mult(g.mult(h, r), g.inv(h));
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Centralizer of a set of elements (indices), as a sorted index list.
template <GroupTable G>
std::vector<int> centralizer_of_set(const G& g, const std::vector<int>& s) {
  std::vector<int> c;
  for (int h = 0; h < g.order(); ++h) {
    bool ok = true;
    for (int x : s)
      if (g.mult(h, x) != g.mult(x, h)) { ok = false; break; }
    if (ok) c.push_back(h);
  }
  return c;
}

// --- small builders used by scenarios and fixtures ---

FiniteGroup cyclic_perm_group(int k);
FiniteGroup dihedral_group_6();  // symmetric group on 3 points
FiniteGroup klein_four_perm_group();
FiniteGroup heisenberg_mod_p_regular(int p);  // regular permutation action, order p^3
FiniteGroup elementary_abelian_regular(int p, int rank);  // (Z_p)^rank, regular action

}  // namespace orbispec

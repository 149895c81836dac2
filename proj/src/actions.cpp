#include "orbispec/actions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orbispec {

namespace {

// union-find with sign weights: weight[i] is the sign relating i to its root
struct SignedUnionFind {
  std::vector<int> parent, weight;
  std::vector<bool> dead;  // component carries a sign contradiction

  explicit SignedUnionFind(int n) : parent(n), weight(n, 1), dead(n, false) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  std::pair<int, int> find(int i) {
    if (parent[i] == i) return {i, 1};
    auto [r, w] = find(parent[i]);
    parent[i] = r;
    weight[i] *= w;
    return {r, weight[i]};
  }

  // impose v_j = s * v_i
  void unite(int i, int j, int s) {
    auto [ri, wi] = find(i);
    auto [rj, wj] = find(j);
    if (ri == rj) {
      if (wi * s != wj) dead[ri] = true;
      return;
    }
    parent[rj] = ri;
    // v_j = wj v_rj and v_j = s v_i = s wi v_ri force v_rj = s wi wj v_ri
    weight[rj] = s * wi * wj;
    if (dead[rj]) dead[ri] = true;
  }

  // components whose sign constraints are consistent; each contributes one
  // dimension to the common fixed space
  int live_components() {
    std::vector<bool> bad(parent.size(), false);
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (dead[i]) bad[find(i).first] = true;
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i).first == i && !bad[i]) ++c;
    return c;
  }
};

RatMatrix stack_minus_identity(const std::vector<GroupElement>& elems) {
  int n = elems.empty() ? 0 : elems[0].degree();
  RatMatrix s(static_cast<int>(elems.size()) * n, n);
  for (size_t e = 0; e < elems.size(); ++e) {
    RatMatrix m = elems[e].to_matrix();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        s.at(static_cast<int>(e) * n + i, j) = m.at(i, j) - (i == j ? Rat(1) : Rat(0));
  }
  return s;
}

}  // namespace

int fixed_subspace_dim(const std::vector<GroupElement>& elems) {
  if (elems.empty()) throw std::invalid_argument("fixed_subspace_dim: empty input");
  int n = elems[0].degree();
  bool perm_like = std::all_of(elems.begin(), elems.end(), [](const GroupElement& g) {
    return g.kind() != ElementKind::Matrix;
  });
  if (perm_like) {
    SignedUnionFind uf(n);
    for (const GroupElement& g : elems) {
      const std::vector<int>& img = g.perm_images();
      const std::vector<int>& sgn = g.perm_signs();
      for (int i = 0; i < n; ++i) uf.unite(i, img[i], sgn.empty() ? 1 : sgn[i]);
    }
    return uf.live_components();
  }
  return n - rat_rank(stack_minus_identity(elems));
}

RatMatrix fixed_subspace_basis(const std::vector<GroupElement>& elems) {
  if (elems.empty()) throw std::invalid_argument("fixed_subspace_basis: empty input");
  int n = elems[0].degree();
  std::vector<std::vector<Rat>> ker = kernel_basis(stack_minus_identity(elems));
  RatMatrix b(n, static_cast<int>(ker.size()));
  for (size_t j = 0; j < ker.size(); ++j)
    for (int i = 0; i < n; ++i) b.at(i, static_cast<int>(j)) = ker[j][i];
  return b;
}

long long OrthogonalAction::space_dimension() const {
  if (space == SpaceKind::Sphere) return n - 1;
  return static_cast<long long>(n) * k - static_cast<long long>(k) * (k + 1) / 2;
}

namespace {

FixedSetDescriptor describe_fixed(const OrthogonalAction& act, int d) {
  FixedSetDescriptor f;
  f.space = act.space;
  f.d = d;
  f.k = act.k;
  if (act.space == SpaceKind::Sphere) {
    if (d == 0) return f;  // empty
    f.empty = false;
    f.manifold_components = (d == 1) ? 2 : 1;
    f.dimension = d - 1;
  } else {
    if (d < act.k) return f;
    f.empty = false;
    f.manifold_components = (d == act.k) ? 2 : 1;
    f.dimension = static_cast<long long>(d) * act.k -
                  static_cast<long long>(act.k) * (act.k + 1) / 2;
  }
  return f;
}

// restriction of g to the column space of basis (which must be g-invariant)
GroupElement restrict_to(const RatMatrix& basis, const GroupElement& g) {
  RatMatrix gb = mat_mul(g.to_matrix(), basis);
  auto r = solve_exact(basis, gb);
  if (!r) throw std::logic_error("restrict_to: subspace not invariant");
  return GroupElement::matrix(*r);
}

}  // namespace

FixedSetDescriptor fixed_set_of_image(const OrthogonalAction& act,
                                      const std::vector<GroupElement>& image) {
  if (act.trivial_action) return describe_fixed(act, act.n);
  return describe_fixed(act, fixed_subspace_dim(image));
}

std::vector<SectorDescriptor> sector_list(const OrthogonalAction& act,
                                          const Presentation& gamma,
                                          long long budget) {
  HomEnumeration homs = hom_classes(act.group, gamma, budget);
  std::vector<SectorDescriptor> out;
  for (HomClass& cls : homs.classes) {
    std::vector<GroupElement> image;
    bool nontwisted = true;
    for (int idx : cls.rep) {
      image.push_back(act.group.element(idx));
      nontwisted &= (idx == 0);
    }
    FixedSetDescriptor fixed = fixed_set_of_image(act, image);
    if (fixed.empty) continue;
    SectorDescriptor sec;
    sec.hom = std::move(cls);
    sec.fixed = fixed;
    sec.centralizer = hom_stabilizer(act.group, sec.hom.rep);
    sec.nontwisted = nontwisted;
    {
      std::ostringstream os;
      os << "(";
      for (size_t i = 0; i < sec.hom.rep.size(); ++i) {
        if (i) os << ",";
        os << act.group.element(sec.hom.rep[i]).describe();
      }
      os << ")";
      sec.label = os.str();
    }
    // orbits of the centralizer on the components of the fixed set
    sec.m = fixed.manifold_components;
    if (fixed.manifold_components == 2 && !act.trivial_action) {
      RatMatrix basis = fixed_subspace_basis(image);
      bool fused = false;
      for (int c : sec.centralizer) {
        GroupElement r = restrict_to(basis, act.group.element(c));
        if (act.space == SpaceKind::Sphere) {
          // components are the antipodal points of S^0: fused when some
          // centralizer element restricts to -1 on the fixed line
          if (r.raw_matrix().at(0, 0) == Rat(-1)) { fused = true; break; }
        } else {
          // frame components are the two orientations: fused when some
          // centralizer element has determinant -1 on the fixed subspace
          if (rat_det(r.raw_matrix()) == Rat(-1)) { fused = true; break; }
        }
      }
      if (fused) sec.m = 1;
    }
    out.push_back(std::move(sec));
  }
  return out;
}

long long sector_component_total(const std::vector<SectorDescriptor>& sectors) {
  long long t = 0;
  for (const SectorDescriptor& s : sectors) t += s.m;
  return t;
}

RestrictedAction restrict_centralizer(const OrthogonalAction& act,
                                      const SectorDescriptor& sec) {
  RestrictedAction out;
  if (act.trivial_action) {
    out.distinct.push_back(GroupElement::identity(ElementKind::Matrix, act.n));
    out.kernel_order = act.group.order();
    return out;
  }
  std::vector<GroupElement> image;
  for (int idx : sec.hom.rep) image.push_back(act.group.element(idx));
  RatMatrix basis = fixed_subspace_basis(image);
  std::map<GroupElement, int> seen;
  for (int c : sec.centralizer) {
    GroupElement r = restrict_to(basis, act.group.element(c));
    if (r.is_identity()) ++out.kernel_order;
    seen.emplace(std::move(r), 0);
  }
  for (auto& [g, cnt] : seen) {
    (void)cnt;
    out.distinct.push_back(g);
  }
  return out;
}

}  // namespace orbispec

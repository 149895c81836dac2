#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbispec/actions.hpp"
#include "orbispec/scenarios.hpp"

using namespace orbispec;

namespace {

OrthogonalAction sphere_action(FiniteGroup g, int n) {
  OrthogonalAction a;
  a.space = SpaceKind::Sphere;
  a.n = n;
  a.group = std::move(g);
  return a;
}

OrthogonalAction stiefel_action(FiniteGroup g, int n, int k) {
  OrthogonalAction a;
  a.space = SpaceKind::Stiefel;
  a.n = n;
  a.k = k;
  a.group = std::move(g);
  return a;
}

long long count_rows_of_dim(const std::vector<SectorDescriptor>& rows, long long d) {
  long long c = 0;
  for (const auto& r : rows)
    if (r.fixed.dimension == d) ++c;
  return c;
}

}  // namespace

TEST_CASE("common fixed subspaces") {
  GroupElement a12 = GroupElement::sign_flips(6, {0, 1});
  GroupElement a13 = GroupElement::sign_flips(6, {0, 2});
  CHECK(fixed_subspace_dim({a12}) == 4);
  CHECK(fixed_subspace_dim({a12, a13}) == 3);
  CHECK(fixed_subspace_dim({GroupElement::identity(ElementKind::Perm, 5)}) == 5);
  CHECK(fixed_subspace_dim({GroupElement::perm({1, 2, 0})}) == 1);

  RatMatrix rot(2, 2);
  rot.at(0, 1) = Rat(-1);
  rot.at(1, 0) = Rat(1);
  CHECK(fixed_subspace_dim({GroupElement::matrix(rot)}) == 0);
  CHECK(fixed_subspace_dim({GroupElement::perm({1, 0})}) == 1);

  RatMatrix basis = fixed_subspace_basis({a12, a13});
  REQUIRE(basis.cols == 3);
  REQUIRE(basis.rows == 6);
  for (const GroupElement& g : {a12, a13})
    for (int j = 0; j < basis.cols; ++j) {
      std::vector<Rat> col(6);
      for (int i = 0; i < 6; ++i) col[i] = basis.at(i, j);
      CHECK(g.apply(col) == col);
    }
}

TEST_CASE("fixed sets on the sphere") {
  auto [k1, k2] = rsw_groups();
  OrthogonalAction act = sphere_action(k1, 6);

  FixedSetDescriptor f = fixed_set_of_image(act, {GroupElement::sign_flips(6, {0, 1})});
  CHECK(!f.empty);
  CHECK(f.d == 4);
  CHECK(f.dimension == 3);
  CHECK(f.manifold_components == 1);

  // a one-dimensional fixed subspace meets the sphere in two points
  f = fixed_set_of_image(act, {GroupElement::sign_flips(6, {0, 1, 2, 3, 4})});
  CHECK(f.d == 1);
  CHECK(f.dimension == 0);
  CHECK(f.manifold_components == 2);

  // the antipodal map acts freely
  f = fixed_set_of_image(act, {GroupElement::sign_flips(6, {0, 1, 2, 3, 4, 5})});
  CHECK(f.empty);
}

TEST_CASE("fixed sets on the frame manifold") {
  auto [k1, k2] = rsw_groups();
  OrthogonalAction act = stiefel_action(k1, 6, 3);
  CHECK(act.space_dimension() == 12);  // 6*3 - 3*4/2

  // frames must fit inside the fixed subspace: d >= k
  FixedSetDescriptor f = fixed_set_of_image(act, {GroupElement::sign_flips(6, {0, 1})});
  CHECK(!f.empty);
  CHECK(f.d == 4);
  CHECK(f.manifold_components == 1);
  f = fixed_set_of_image(act, {GroupElement::sign_flips(6, {0, 3, 4, 5})});
  CHECK(f.empty);  // d = 2 < 3

  // d = k gives the two-component orthogonal group of the subspace
  f = fixed_set_of_image(act, {GroupElement::sign_flips(6, {3, 4, 5})});
  CHECK(f.d == 3);
  CHECK(f.manifold_components == 2);
  CHECK(f.dimension == 3);  // dim O(3)
}

TEST_CASE("sector decomposition of the sphere pair") {
  auto [k1, k2] = rsw_groups();
  OrthogonalAction o1 = sphere_action(k1, 6), o2 = sphere_action(k2, 6);

  auto s1 = sector_list(o1, Presentation::free_abelian(1));
  REQUIRE(s1.size() == 7);
  CHECK(s1[0].label == "(id)");
  CHECK(s1[0].nontwisted);
  CHECK(s1[0].fixed.dimension == 5);
  CHECK(count_rows_of_dim(s1, 3) == 3);
  CHECK(count_rows_of_dim(s1, 1) == 3);
  for (const auto& r : s1) {
    CHECK(r.m == 1);
    CHECK(r.centralizer.size() == 8);  // abelian group
  }
  CHECK(sector_component_total(s1) == 7);

  auto s2 = sector_list(o2, Presentation::free_abelian(1));
  CHECK(sector_component_total(s2) == 7);
  CHECK(count_rows_of_dim(s2, 3) == 3);
  CHECK(count_rows_of_dim(s2, 1) == 3);

  // the kernels of the restricted sector actions distinguish the two sides
  std::vector<long long> kernels1, kernels2;
  for (const auto& r : s1)
    if (r.fixed.dimension == 1) kernels1.push_back(restrict_centralizer(o1, r).kernel_order);
  for (const auto& r : s2)
    if (r.fixed.dimension == 1) kernels2.push_back(restrict_centralizer(o2, r).kernel_order);
  CHECK(kernels1 == std::vector<long long>{2, 2, 2});
  CHECK(kernels2 == std::vector<long long>{4, 4, 4});
}

TEST_CASE("restricted centralizer factors through its kernel") {
  auto [k1, k2] = rsw_groups();
  OrthogonalAction o1 = sphere_action(k1, 6);
  for (const auto& sec : sector_list(o1, Presentation::free_abelian(1))) {
    RestrictedAction ra = restrict_centralizer(o1, sec);
    CHECK(ra.kernel_order * static_cast<long long>(ra.distinct.size()) ==
          static_cast<long long>(sec.centralizer.size()));
  }
}

TEST_CASE("sector totals of the frame-manifold pair") {
  auto [k1, k2] = rsw_groups();
  OrthogonalAction o1 = stiefel_action(k1, 6, 3), o2 = stiefel_action(k2, 6, 3);
  std::vector<long long> t1, t2;
  for (int l = 1; l <= 4; ++l) {
    t1.push_back(sector_component_total(sector_list(o1, Presentation::free_abelian(l))));
    t2.push_back(sector_component_total(sector_list(o2, Presentation::free_abelian(l))));
  }
  CHECK(t1 == std::vector<long long>{4, 16, 64, 256});
  CHECK(t2 == std::vector<long long>{4, 10, 22, 46});
}

TEST_CASE("sector counts are invariant under coordinate relabeling") {
  auto [k1, k2] = rsw_groups();
  // conjugate every generator by the rotation (1 2 3 4 5 6) of coordinates
  GroupElement c = GroupElement::perm({1, 2, 3, 4, 5, 0});
  std::vector<GroupElement> gens;
  for (int gi : k1.generator_indices())
    gens.push_back(c.compose(k1.element(gi)).compose(c.inverse()));
  FiniteGroup conj = FiniteGroup::generate(gens);
  CHECK(conj.order() == 8);

  for (int l = 1; l <= 3; ++l) {
    auto a = sector_list(sphere_action(k1, 6), Presentation::free_abelian(l));
    auto b = sector_list(sphere_action(conj, 6), Presentation::free_abelian(l));
    CHECK(sector_component_total(a) == sector_component_total(b));
    CHECK(a.size() == b.size());
  }
}

TEST_CASE("trivial actions decompose by hom classes alone") {
  OrthogonalAction act = sphere_action(dihedral_group_6(), 3);
  act.trivial_action = true;

  auto z = sector_list(act, Presentation::free_abelian(1));
  CHECK(z.size() == 3);  // one sector per conjugacy class
  for (const auto& r : z) {
    CHECK(r.fixed.dimension == 2);  // always the whole sphere
    CHECK(r.m == 1);
  }
  CHECK(sector_component_total(z) == 3);

  auto f2 = sector_list(act, Presentation::free_group(2));
  CHECK(sector_component_total(f2) == 11);

  OrthogonalAction v4 = sphere_action(klein_four_perm_group(), 3);
  v4.trivial_action = true;
  CHECK(sector_component_total(sector_list(v4, Presentation::free_abelian(2))) == 16);
}

TEST_CASE("point sectors split under the centralizer orbit count") {
  // reflection of the circle: one mirror sector per fixed point
  FiniteGroup refl = FiniteGroup::generate({GroupElement::sign_flips(2, {0})});
  OrthogonalAction act = sphere_action(refl, 2);
  auto s = sector_list(act, Presentation::free_abelian(1));
  REQUIRE(s.size() == 2);
  CHECK(s[0].m == 1);
  CHECK(s[1].fixed.manifold_components == 2);
  CHECK(s[1].m == 2);  // both points are fixed by the whole group
  CHECK(sector_component_total(s) == 3);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "orbispec/group.hpp"
#include "orbispec/scenarios.hpp"

using namespace orbispec;

namespace {

std::vector<int> order_multiset(const FiniteGroup& g) {
  std::vector<int> out;
  for (int i = 0; i < g.order(); ++i) out.push_back(element_order(g, i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<size_t> class_sizes(const FiniteGroup& g) {
  std::vector<size_t> out;
  for (const auto& c : conjugacy_classes(g)) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("dihedral group on three points") {
  FiniteGroup d6 = dihedral_group_6();
  CHECK(d6.order() == 6);
  CHECK(!table_is_abelian(d6));
  CHECK(class_sizes(d6) == std::vector<size_t>{1, 2, 3});
  CHECK(order_multiset(d6) == std::vector<int>{1, 2, 2, 2, 3, 3});

  // centralizer order depends only on the element's order here
  for (int i = 0; i < 6; ++i) {
    size_t c = centralizer_of_set(d6, {i}).size();
    int o = element_order(d6, i);
    if (o == 1) CHECK(c == 6);
    if (o == 2) CHECK(c == 2);
    if (o == 3) CHECK(c == 3);
  }
  CHECK(conjugacy_classes(d6)[0] == std::vector<int>{0});
}

TEST_CASE("cyclic and Klein four groups") {
  FiniteGroup c4 = cyclic_perm_group(4);
  CHECK(c4.order() == 4);
  CHECK(table_is_abelian(c4));
  CHECK(conjugacy_classes(c4).size() == 4);
  CHECK(order_multiset(c4) == std::vector<int>{1, 2, 4, 4});

  FiniteGroup v4 = klein_four_perm_group();
  CHECK(v4.order() == 4);
  CHECK(table_is_abelian(v4));
  CHECK(order_multiset(v4) == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("an abelian table has singleton classes only") {
  std::vector<FiniteGroup> gs = {cyclic_perm_group(5), klein_four_perm_group(),
                                 dihedral_group_6(), heisenberg_mod_p_regular(3)};
  for (const FiniteGroup& g : gs)
    CHECK(table_is_abelian(g) ==
          (static_cast<int>(conjugacy_classes(g).size()) == g.order()));
}

TEST_CASE("regular representations of p-groups") {
  FiniteGroup h = heisenberg_mod_p_regular(3);
  CHECK(h.order() == 27);
  CHECK(!table_is_abelian(h));
  auto classes = conjugacy_classes(h);
  CHECK(classes.size() == 11);
  // the center is the union of the singleton classes
  long center = 0;
  for (const auto& c : classes)
    if (c.size() == 1) ++center;
  CHECK(center == 3);
  for (int i = 0; i < h.order(); ++i) CHECK(27 % element_order(h, i) == 0);

  FiniteGroup e = elementary_abelian_regular(3, 3);
  CHECK(e.order() == 27);
  CHECK(table_is_abelian(e));
  CHECK(conjugacy_classes(e).size() == 27);
  for (int i = 1; i < e.order(); ++i) CHECK(element_order(e, i) == 3);
}

TEST_CASE("signed permutation algebra") {
  GroupElement a = GroupElement::sign_flips(6, {0, 1});
  GroupElement b = GroupElement::sign_flips(6, {1, 2});
  CHECK(a.compose(b) == GroupElement::sign_flips(6, {0, 2}));
  CHECK(a.compose(a).is_identity());
  CHECK(a.inverse() == a);
  CHECK(a.trace() == Rat(2));  // 6 - 2*2
  CHECK(a.describe() == "neg{1,2}");

  GroupElement p = GroupElement::perm({1, 2, 0});
  CHECK(p.trace() == Rat(0));
  CHECK(p.compose(p).compose(p).is_identity());
  CHECK(p.describe() == "(1 2 3)");

  // composition agrees with matrix multiplication in every shape
  GroupElement f3 = GroupElement::sign_flips(3, {0, 2});
  CHECK(f3.compose(p).to_matrix() == mat_mul(f3.to_matrix(), p.to_matrix()));
  CHECK(p.compose(f3).to_matrix() == mat_mul(p.to_matrix(), f3.to_matrix()));
  GroupElement rot = GroupElement::matrix([] {
    RatMatrix m(2, 2);
    m.at(0, 1) = Rat(-1);
    m.at(1, 0) = Rat(1);
    return m;
  }());
  CHECK(rot.compose(rot).to_matrix() == mat_mul(rot.to_matrix(), rot.to_matrix()));
  CHECK(rot.inverse().compose(rot).is_identity());
}

TEST_CASE("group generation: determinism, inverses, caps") {
  FiniteGroup d6 = dihedral_group_6();
  CHECK(d6.element(0).is_identity());
  for (int i = 0; i < d6.order(); ++i) {
    CHECK(d6.mult(i, d6.inv(i)) == 0);
    CHECK(d6.index_of(d6.element(i)) == i);
  }
  CHECK(d6.index_of(GroupElement::perm({0, 1, 2, 3})) == -1);  // wrong degree

  GroupElement rot2 = GroupElement::matrix([] {
    RatMatrix m(2, 2);
    m.at(0, 1) = Rat(-1);
    m.at(1, 0) = Rat(1);
    return m;
  }());
  CHECK(FiniteGroup::generate({rot2}).order() == 4);
  CHECK_THROWS_AS(FiniteGroup::generate({rot2}, 3), BudgetExceeded);

  // generation order is deterministic: regenerate and compare element lists
  FiniteGroup again = dihedral_group_6();
  for (int i = 0; i < 6; ++i) CHECK(again.element(i) == d6.element(i));
}

TEST_CASE("sign-flip groups of the frame-manifold pair") {
  auto [k1, k2] = rsw_groups();
  CHECK(k1.order() == 8);
  CHECK(k2.order() == 8);
  CHECK(k1.degree() == 6);
  CHECK(table_is_abelian(k1));
  CHECK(table_is_abelian(k2));
  for (int i = 0; i < 8; ++i) {
    CHECK(element_order(k1, i) <= 2);
    CHECK(element_order(k2, i) <= 2);
  }
  // equal as abstract groups but different subgroups of the diagonal group
  bool same_set = true;
  for (int i = 0; i < 8; ++i) same_set &= (k2.index_of(k1.element(i)) >= 0);
  CHECK(!same_set);
}

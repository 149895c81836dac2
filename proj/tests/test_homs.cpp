#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "orbispec/homs.hpp"
#include "orbispec/io.hpp"

using namespace orbispec;

namespace {

std::string data_path(const std::string& f) {
  const char* d = std::getenv("ORBISPEC_DATA");
  return std::string(d ? d : "data") + "/" + f;
}

// Burnside count of conjugation orbits on tuples: the average number of
// fixed tuples, which for simultaneous conjugation is the average over h of
// |C(h)|^ngens restricted to tuples satisfying the relators.  For free
// targets no relators apply and the closed form below is exact.
long long burnside_free_orbit_count(const FiniteGroup& g, int ngens) {
  long long total = 0;
  for (int h = 0; h < g.order(); ++h) {
    long long c = static_cast<long long>(centralizer_of_set(g, {h}).size());
    long long fixed = 1;
    for (int i = 0; i < ngens; ++i) fixed *= c;
    total += fixed;
  }
  REQUIRE(total % g.order() == 0);
  return total / g.order();
}

}  // namespace

TEST_CASE("hom counts into the dihedral group") {
  FiniteGroup d6 = dihedral_group_6();
  CHECK(hom_count(d6, Presentation::free_abelian(1)) == 6);
  CHECK(hom_count(d6, Presentation::free_group(2)) == 36);
  // commuting pairs: sum over g of |C(g)| = 6 + 2*3 + 3*2
  CHECK(hom_count(d6, Presentation::free_abelian(2)) == 18);
  // elements of order dividing p
  CHECK(hom_count(d6, Presentation::finite_cyclic(2)) == 4);
  CHECK(hom_count(d6, Presentation::finite_cyclic(3)) == 3);
  CHECK(hom_count(d6, Presentation::finite_cyclic(5)) == 1);
}

TEST_CASE("hom classes: free pairs into the dihedral group") {
  FiniteGroup d6 = dihedral_group_6();
  HomEnumeration e = hom_classes(d6, Presentation::free_group(2));
  CHECK(e.total == 36);
  // orbit count certified by the Burnside average:
  // (6^2 + 2*3^2 + 3*2^2) / 6 = 66 / 6 = 11
  CHECK(burnside_free_orbit_count(d6, 2) == 11);
  CHECK(e.classes.size() == 11);

  long long size_sum = 0;
  for (const HomClass& c : e.classes) {
    size_sum += c.class_size;
    // orbit-stabilizer: |orbit| * |stabilizer| = |G|
    CHECK(c.class_size * static_cast<long long>(hom_stabilizer(d6, c.rep).size()) == 6);
  }
  CHECK(size_sum == 36);

  // representatives are pairwise non-conjugate and least in their orbit
  std::set<std::vector<int>> reps;
  for (const HomClass& c : e.classes) reps.insert(c.rep);
  CHECK(reps.size() == 11);
}

TEST_CASE("hom classes: abelian targets are conjugation-trivial") {
  FiniteGroup c3 = cyclic_perm_group(3);
  HomEnumeration z2 = hom_classes(c3, Presentation::free_abelian(2));
  CHECK(z2.total == 9);
  CHECK(z2.classes.size() == 9);
  HomEnumeration f2 = hom_classes(c3, Presentation::free_group(2));
  CHECK(f2.total == 9);
  CHECK(f2.classes.size() == 9);
  for (const HomClass& c : f2.classes) CHECK(c.class_size == 1);
}

TEST_CASE("hom classes: commuting pairs into the dihedral group") {
  FiniteGroup d6 = dihedral_group_6();
  HomEnumeration e = hom_classes(d6, Presentation::free_abelian(2));
  CHECK(e.total == 18);
  CHECK(e.classes.size() == 8);
  // the general-presentation path with an explicit commutator relator agrees
  Presentation comm = Presentation::from_relators(2, {{1, 2, -1, -2}});
  HomEnumeration g = hom_classes(d6, comm);
  CHECK(g.total == e.total);
  CHECK(g.classes.size() == e.classes.size());
  for (size_t i = 0; i < g.classes.size(); ++i) CHECK(g.classes[i].rep == e.classes[i].rep);
}

TEST_CASE("hom classes: larger regular groups") {
  CHECK(hom_classes(elementary_abelian_regular(3, 3), Presentation::free_abelian(1))
            .classes.size() == 27);
  HomEnumeration h = hom_classes(heisenberg_mod_p_regular(3), Presentation::free_abelian(1));
  CHECK(h.total == 27);
  CHECK(h.classes.size() == 11);  // one class per conjugacy class
  CHECK(product_class_count(cyclic_perm_group(3), dihedral_group_6(),
                            Presentation::free_abelian(1)) == 9);
}

TEST_CASE("presentation file: two involution generators") {
  Presentation p = load_presentation_file(data_path("presentation_infinite_dihedral.json"));
  CHECK(p.ngens == 2);
  FiniteGroup d6 = dihedral_group_6();
  HomEnumeration e = hom_classes(d6, p);
  // images are pairs from {id, three reflections}
  CHECK(e.total == 16);
  // orbits: (id,id), (id,t), (t,id), (t,t), (t,t') with t,t' distinct
  CHECK(e.classes.size() == 5);
}

TEST_CASE("hom enumeration respects its budget") {
  FiniteGroup d6 = dihedral_group_6();
  CHECK_THROWS_AS(hom_count(d6, Presentation::free_group(3), 10), BudgetExceeded);
  CHECK_THROWS_AS(hom_classes(d6, Presentation::free_abelian(2), 3), BudgetExceeded);
}

TEST_CASE("gamma grammar") {
  CHECK(Presentation::parse("Z").ngens == 1);
  CHECK(Presentation::parse("Z").relators.empty());
  CHECK(Presentation::parse("Z^3").ngens == 3);
  CHECK(Presentation::parse("Z^3").kind == Presentation::Kind::FreeAbelian);
  CHECK(Presentation::parse("F2").kind == Presentation::Kind::Free);
  CHECK(Presentation::parse("Zp:5").relators.size() == 1);
  CHECK_THROWS_AS(Presentation::parse("Z2"), std::invalid_argument);
  CHECK_THROWS_AS(Presentation::parse("Z^0"), std::invalid_argument);
  CHECK_THROWS_AS(Presentation::parse(""), std::invalid_argument);
}

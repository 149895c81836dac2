#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "orbispec/scenarios.hpp"
#include "orbispec/spectrum.hpp"

using namespace orbispec;

namespace {

OrthogonalAction sphere_action(FiniteGroup g, int n) {
  OrthogonalAction a;
  a.space = SpaceKind::Sphere;
  a.n = n;
  a.group = std::move(g);
  return a;
}

bool entries_equal(const SpectrumSegment& s,
                   const std::vector<std::pair<long, long long>>& want) {
  if (s.entries.size() != want.size()) return false;
  for (size_t i = 0; i < want.size(); ++i)
    if (s.entries[i].lambda != SymValue(want[i].first) ||
        s.entries[i].mult != want[i].second)
      return false;
  return true;
}

// no eigenvalue strictly between lo and hi
bool gap_in(const SpectrumSegment& s, long lo, long hi) {
  for (const auto& e : s.entries)
    if (SymValue(lo).less_than(e.lambda) && e.lambda.less_than(SymValue(hi)))
      return false;
  return true;
}

}  // namespace

TEST_CASE("round sphere and antipodal quotient spectra") {
  GroupElement id3 = GroupElement::identity(ElementKind::Perm, 3);
  auto sphere = quotient_sphere_spectrum({id3}, 3, 2);
  CHECK(entries_equal(sphere, {{0, 1}, {2, 3}, {6, 5}}));
  REQUIRE(sphere.cutoff.has_value());
  CHECK(*sphere.cutoff == SymValue(12));  // next degree would be 3*(3+1)

  auto rp2 = quotient_sphere_spectrum({id3, GroupElement::sign_flips(3, {0, 1, 2})}, 3, 2);
  CHECK(entries_equal(rp2, {{0, 1}, {6, 5}}));
}

TEST_CASE("invariant harmonic dimensions of the trivial group") {
  auto dims = harmonic_invariant_dims({GroupElement::identity(ElementKind::Perm, 3)}, 3, 4);
  CHECK(dims == std::vector<Int>{Int(1), Int(3), Int(5), Int(7), Int(9)});
}

TEST_CASE("lens space eigenvalue counting") {
  // S^3 / {+-1} is the projective space: even degrees survive
  CHECK(entries_equal(lens_spectrum(2, {1, 1}, 2), {{0, 1}, {8, 9}}));
  CHECK(lens_eigenvalue_multiplicity(2, {1, 1}, 1) == 0);
  CHECK(lens_eigenvalue_multiplicity(2, {1, 1}, 2) == 9);
  CHECK(lens_eigenvalue_multiplicity(1, {1, 1}, 1) == 4);  // trivial quotient: full S^3

  // weights coprime to q are required
  CHECK_THROWS_AS(lens_spectrum(4, {1, 2}, 2), std::invalid_argument);
}

TEST_CASE("lens counting agrees with the Molien oracle") {
  for (long q = 2; q <= 8; ++q)
    for (long w = 1; w < q; ++w) {
      if (std::gcd(w, q) != 1) continue;
      std::vector<long> weights = {1, w};
      auto molien = lens_harmonic_dims_molien(q, weights, 8);
      for (int k = 0; k <= 8; ++k) {
        CHECK(molien[k] >= 0);
        CHECK(lens_eigenvalue_multiplicity(q, weights, k) == molien[k]);
      }
    }
  // a three-weight case
  auto m3 = lens_harmonic_dims_molien(7, {1, 2, 3}, 6);
  for (int k = 0; k <= 6; ++k)
    CHECK(lens_eigenvalue_multiplicity(7, {1, 2, 3}, k) == m3[k]);
}

TEST_CASE("a classical isospectral lens pair and a control") {
  auto a = lens_harmonic_dims_molien(11, {1, 2, 3}, 10);
  auto b = lens_harmonic_dims_molien(11, {1, 3, 9}, 10);
  CHECK(a == b);

  auto c = lens_harmonic_dims_molien(5, {1, 1}, 10);
  auto d = lens_harmonic_dims_molien(5, {1, 2}, 10);
  CHECK(c != d);
}

TEST_CASE("the sphere pair is isospectral as plain orbifolds") {
  auto [k1, k2] = rsw_groups();
  CHECK(harmonic_invariant_dims(k1.elements(), 6, 10) ==
        harmonic_invariant_dims(k2.elements(), 6, 10));
}

TEST_CASE("spectral gaps of the twisted sphere sectors") {
  auto [k1, k2] = rsw_groups();
  OrthogonalAction o1 = sphere_action(k1, 6);
  auto sectors = sector_list(o1, Presentation::free_abelian(1));

  bool saw12 = false, saw1456 = false;
  for (const auto& sec : sectors) {
    if (sec.label == "(neg{1,2})") {
      saw12 = true;
      auto seg = sphere_sector_spectrum(o1, sec, 6);
      REQUIRE(!seg.entries.empty());
      CHECK(seg.entries[0].lambda == SymValue(0));
      CHECK(gap_in(seg, 0, 8));
      CHECK(seg.multiplicity_of(SymValue(8)) > 0);
    }
    if (sec.label == "(neg{1,4,5,6})") {
      saw1456 = true;
      auto seg = sphere_sector_spectrum(o1, sec, 4);
      CHECK(gap_in(seg, 4, 9));
      CHECK(seg.multiplicity_of(SymValue(4)) > 0);
    }
  }
  CHECK(saw12);
  CHECK(saw1456);
}

TEST_CASE("point sectors have the finite zero spectrum") {
  FiniteGroup refl = FiniteGroup::generate({GroupElement::sign_flips(2, {0})});
  OrthogonalAction act = sphere_action(refl, 2);
  auto s = sector_list(act, Presentation::free_abelian(1));
  REQUIRE(s.size() == 2);
  auto seg = sphere_sector_spectrum(act, s[1], 5);
  REQUIRE(seg.entries.size() == 1);
  CHECK(seg.entries[0].lambda == SymValue(0));
  CHECK(seg.entries[0].mult == 2);
  CHECK(!seg.cutoff.has_value());  // the point spectrum is complete
}

TEST_CASE("regular representations of order 27 are isospectral on their sphere") {
  auto e = harmonic_invariant_dims(elementary_abelian_regular(3, 3).elements(), 27, 4);
  auto h = harmonic_invariant_dims(heisenberg_regular(3).elements(), 27, 4);
  CHECK(e == h);
  for (const Int& d : e) CHECK(d >= 0);
  CHECK(e[0] == 1);
}

TEST_CASE("Molien averages are nonnegative integers for random subgroups") {
  std::mt19937 rng(7321);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);  // 2..6
    std::vector<GroupElement> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<int> img(n), sgn(n);
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      for (int i = 0; i < n; ++i) sgn[i] = (rng() & 1) ? 1 : -1;
      gens.push_back(GroupElement::signed_perm(img, sgn));
    }
    FiniteGroup grp = FiniteGroup::generate(gens, 5000);
    auto dims = harmonic_invariant_dims(grp.elements(), n, 8);
    REQUIRE(dims.size() == 9);
    CHECK(dims[0] == 1);
    for (const Int& d : dims) CHECK(d >= 0);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "orbispec/cyclotomic.hpp"
#include "orbispec/lattice.hpp"
#include "orbispec/matrix.hpp"
#include "orbispec/symvalue.hpp"

using namespace orbispec;

namespace {

IntMatrix im(int r, int c, std::initializer_list<long> vals) {
  IntMatrix m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Int(*it++);
  return m;
}

RatMatrix rm(int r, int c, std::initializer_list<long> vals) {
  return to_rat(im(r, c, vals));
}

bool unimodular(const IntMatrix& m) {
  Int d = bareiss_det(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("rational parsing and integer rounding") {
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("-12") == Rat(-12));
  CHECK(rat_to_string(Rat(-5, 3)) == "-5/3");
  CHECK(rat_to_string(Rat(7)) == "7");
  CHECK(floor_rat(Rat(-5, 3)) == -2);
  CHECK(ceil_rat(Rat(-5, 3)) == -1);
  CHECK(floor_rat(Rat(5, 3)) == 1);
  CHECK(ceil_rat(Rat(5, 3)) == 2);
  CHECK(floor_rat(Rat(4)) == 4);
  CHECK(isqrt_floor(Int(99)) == 9);
  CHECK(isqrt_floor(Int(100)) == 10);
}

TEST_CASE("fraction-free determinant and rank") {
  CHECK(bareiss_det(im(2, 2, {2, 4, 6, 8})) == -8);
  CHECK(bareiss_det(IntMatrix::identity(4)) == 1);
  CHECK(bareiss_det(im(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 10})) == -3);
  CHECK(bareiss_det(IntMatrix(0, 0)) == 1);
  CHECK(bareiss_rank(im(2, 2, {1, 2, 2, 4})) == 1);
  CHECK(bareiss_rank(im(3, 2, {1, 0, 0, 1, 1, 1})) == 2);
  CHECK(rat_rank(rm(2, 3, {1, 2, 3, 2, 4, 6})) == 1);
  CHECK(rat_det(rm(2, 2, {0, 1, 1, 0})) == Rat(-1));
}

TEST_CASE("kernel, inverse and exact solve") {
  auto ker = kernel_basis(rm(2, 3, {1, 2, 3, 2, 4, 6}));
  REQUIRE(ker.size() == 2);
  RatMatrix a = rm(2, 3, {1, 2, 3, 2, 4, 6});
  for (const auto& v : ker) {
    std::vector<Rat> w = mat_apply(a, v);
    for (const Rat& x : w) CHECK(x == Rat(0));
  }

  RatMatrix m = rm(2, 2, {2, 1, 1, 1});
  auto inv = rat_inverse(m);
  REQUIRE(inv.has_value());
  CHECK(mat_mul(m, *inv) == RatMatrix::identity(2));
  CHECK(!rat_inverse(rm(2, 2, {1, 2, 2, 4})).has_value());

  // overdetermined but consistent
  RatMatrix tall = rm(3, 2, {1, 0, 0, 1, 1, 1});
  RatMatrix rhs = rm(3, 1, {2, 3, 5});
  auto sol = solve_exact(tall, rhs);
  REQUIRE(sol.has_value());
  CHECK(mat_mul(tall, *sol) == rhs);
  CHECK(!solve_exact(tall, rm(3, 1, {2, 3, 6})).has_value());
}

TEST_CASE("smith normal form on pinned inputs") {
  auto s = smith_normal_form(im(2, 2, {2, 4, 6, 8}));
  CHECK(s.d.at(0, 0) == 2);
  CHECK(s.d.at(1, 1) == 4);
  CHECK(mat_mul(mat_mul(s.u, im(2, 2, {2, 4, 6, 8})), s.v) == s.d);

  s = smith_normal_form(im(2, 2, {2, 0, 0, 3}));
  CHECK(s.d.at(0, 0) == 1);
  CHECK(s.d.at(1, 1) == 6);

  s = smith_normal_form(IntMatrix(2, 3));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(s.d.at(i, j) == 0);

  s = smith_normal_form(IntMatrix(0, 0));
  CHECK(s.d.rows == 0);
  CHECK(unimodular(s.u));
}

TEST_CASE("smith normal form reconstruction on random matrices") {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int trial = 0; trial < 80; ++trial) {
    int r = dim(rng), c = dim(rng);
    IntMatrix a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a.at(i, j) = Int(entry(rng));
    SmithResult s = smith_normal_form(a);
    CHECK(unimodular(s.u));
    CHECK(unimodular(s.v));
    CHECK(mat_mul(mat_mul(s.u, a), s.v) == s.d);
    int k = std::min(r, c);
    for (int i = 0; i < k; ++i) {
      CHECK(s.d.at(i, i) >= 0);
      if (i + 1 < k && s.d.at(i, i) != 0)
        CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
      if (s.d.at(i, i) == 0 && i + 1 < k) CHECK(s.d.at(i + 1, i + 1) == 0);
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(s.d.at(i, j) == 0);
  }
}

TEST_CASE("symbolic reals: radical canonicalization") {
  CHECK(SymValue::sqrt_of(Rat(4)) == SymValue(2));
  CHECK(SymValue::sqrt_of(Rat(8)) == SymValue::term(Rat(2), 0, Int(2)));
  // sqrt(1/2) = sqrt(2)/2
  CHECK(SymValue::sqrt_of(Rat(1, 2)) == SymValue::term(Rat(1, 2), 0, Int(2)));
  CHECK(SymValue::sqrt_of(Rat(0)) == SymValue(0));

  SymValue pi = SymValue::term(Rat(1), 1, Int(1));
  CHECK(pi * pi == SymValue::term(Rat(1), 2, Int(1)));
  SymValue r2 = SymValue::sqrt_of(Rat(2));
  CHECK(r2 * r2 == SymValue(2));
  CHECK((SymValue(1) + r2) * (SymValue(1) - r2) == SymValue(-1));
  CHECK((pi * r2) * (pi * r2) == SymValue::term(Rat(2), 2, Int(1)));

  auto st = (r2 * SymValue(3)).single_term();
  REQUIRE(st.has_value());
  CHECK(std::get<0>(*st) == Rat(3));
  CHECK(std::get<1>(*st) == 0);
  CHECK(std::get<2>(*st) == 2);
  CHECK(!(SymValue(1) + pi).single_term().has_value());
}

TEST_CASE("symbolic reals: exact order") {
  SymValue pi = SymValue::term(Rat(1), 1, Int(1));
  SymValue r2 = SymValue::sqrt_of(Rat(2));
  std::vector<SymValue> chain = {SymValue(0), SymValue(1), r2, SymValue(2), pi,
                                 SymValue(2) * pi, pi * pi};
  for (size_t i = 0; i < chain.size(); ++i)
    for (size_t j = 0; j < chain.size(); ++j) {
      CHECK(chain[i].less_than(chain[j]) == (i < j));
      CHECK((chain[i] == chain[j]) == (i == j));
    }
  CHECK(SymValue(-1).less_than(SymValue(0)));
}

TEST_CASE("round sphere volumes") {
  SymValue pi = SymValue::term(Rat(1), 1, Int(1));
  CHECK(sphere_volume(1) == SymValue(2));
  CHECK(sphere_volume(2) == SymValue(2) * pi);
  CHECK(sphere_volume(3) == SymValue(4) * pi);
  CHECK(sphere_volume(4) == SymValue(2) * pi * pi);
  CHECK(sphere_volume(5) == SymValue(Rat(8, 3)) * pi * pi);
  CHECK(sphere_volume(6) == pi * pi * pi);
}

TEST_CASE("cyclotomic arithmetic") {
  // vanishing sums of all N-th roots of unity
  for (long n = 2; n <= 24; ++n) {
    Cyclotomic s(0);
    for (long k = 0; k < n; ++k) s += Cyclotomic::zeta_power(n, k);
    CHECK(s.is_zero());
  }
  CHECK(Cyclotomic::zeta_power(6, 2) == Cyclotomic::zeta_power(3, 1));
  CHECK(Cyclotomic::zeta_power(2, 1) == Cyclotomic(-1));
  Cyclotomic i = Cyclotomic::zeta_power(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  CHECK((i * i).is_rational());
  Cyclotomic z = Cyclotomic::zeta_power(7, 3);
  CHECK(z * z.conj() == Cyclotomic(1));
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic_polynomial(12).size() == 5);
}

TEST_CASE("lattice sweep: pinned theta coefficients") {
  RatMatrix a2 = rm(2, 2, {2, 1, 1, 2});
  auto theta = theta_counts(a2, Rat(14));
  std::map<Rat, long long> want = {{Rat(0), 1}, {Rat(2), 6}, {Rat(6), 6},
                                   {Rat(8), 6}, {Rat(14), 12}};
  CHECK(theta == want);

  auto z2 = theta_counts(to_rat(IntMatrix::identity(2)), Rat(5));
  std::map<Rat, long long> wz = {{Rat(0), 1}, {Rat(1), 4}, {Rat(2), 4},
                                 {Rat(4), 4}, {Rat(5), 8}};
  CHECK(z2 == wz);
}

TEST_CASE("lattice sweep: rational gram and exact norm filter") {
  RatMatrix g(2, 2);
  g.at(0, 0) = Rat(1, 2);
  g.at(1, 1) = Rat(1, 3);
  CHECK(vectors_in_ball(g, Rat(1)).size() == 9);

  RatMatrix a2 = rm(2, 2, {2, 1, 1, 2});
  auto vs = vectors_of_norm(a2, Rat(2));
  CHECK(vs.size() == 6);
  for (const auto& v : vs) CHECK(lattice_norm(a2, v) == Rat(2));
  CHECK(vectors_of_norm(a2, Rat(1)).empty());   // odd norms are not represented
  CHECK(vectors_of_norm(a2, Rat(1, 3)).empty());  // non-lattice denominator
  auto zero = vectors_of_norm(a2, Rat(0));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == std::vector<Int>{Int(0), Int(0)});
}

TEST_CASE("lattice sweep: streaming form reports scaled norms exactly") {
  RatMatrix g(2, 2);
  g.at(0, 0) = Rat(3, 2);
  g.at(0, 1) = g.at(1, 0) = Rat(1, 2);
  g.at(1, 1) = Rat(5, 3);
  Int scale = 0;
  long long seen = 0;
  for_vectors_in_ball(g, Rat(7), &scale, [&](const std::vector<Int>& v, const Int& sn) {
    CHECK(Rat(sn) == lattice_norm(g, v) * Rat(scale));
    ++seen;
  });
  CHECK(scale > 0);
  CHECK(seen == static_cast<long long>(vectors_in_ball(g, Rat(7)).size()));
  CHECK(seen % 2 == 1);  // nonzero vectors come in +/- pairs
}

TEST_CASE("lattice sweep matches brute force on random forms") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    // B^T B + I is positive definite with integer entries
    IntMatrix b(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b.at(i, j) = Int(entry(rng));
    RatMatrix g = to_rat(mat_mul(mat_transpose(b), b));
    for (int i = 0; i < 3; ++i) g.at(i, i) += Rat(1);

    Rat mu(6);
    long long brute = 0;
    std::vector<Int> v(3);
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y)
        for (long z = -6; z <= 6; ++z) {
          v[0] = x; v[1] = y; v[2] = z;
          if (lattice_norm(g, v) <= mu) ++brute;
        }
    // diagonal >= 1 so |x_i| <= sqrt(6) < 6 and the box covers the ball
    auto got = vectors_in_ball(g, mu);
    CHECK(static_cast<long long>(got.size()) == brute);
    for (const auto& w : got) CHECK(lattice_norm(g, w) <= mu);
  }
}

TEST_CASE("lattice structures: dual and covolume") {
  Lattice a2;
  a2.rank = 2;
  a2.gram = rm(2, 2, {2, 1, 1, 2});
  a2.validate();
  CHECK(a2.covolume() == SymValue::sqrt_of(Rat(3)));
  Lattice dual = dual_lattice(a2);
  CHECK(dual.gram.at(0, 0) == Rat(2, 3));
  CHECK(dual.gram.at(0, 1) == Rat(-1, 3));
  Lattice dd = dual_lattice(dual);
  CHECK(dd.gram == a2.gram);

  Lattice bad;
  bad.rank = 2;
  bad.gram = rm(2, 2, {1, 2, 2, 1});  // indefinite
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

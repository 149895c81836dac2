#include "orbispec/scenarios.hpp"

#include <cstdlib>
#include <filesystem>

#include "orbispec/io.hpp"

namespace orbispec {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t nxt = s.find(sep, pos);
    out.push_back(s.substr(pos, nxt == std::string::npos ? nxt : nxt - pos));
    if (nxt == std::string::npos) break;
    pos = nxt + 1;
  }
  return out;
}

long parse_long(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789-") != std::string::npos ||
      (s[0] == '-' && s.size() == 1))
    throw std::invalid_argument(std::string("bad ") + what + ": " + s);
  return std::atol(s.c_str());
}

std::string resolve(const std::string& file, const std::string& data_dir) {
  namespace fs = std::filesystem;
  if (fs::exists(file) || data_dir.empty()) return file;
  std::string alt = data_dir + "/" + file;
  if (fs::exists(alt)) return alt;
  return file;  // loader will report cannot-open with the literal name
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// regular representation of the m-th direct power of a regular permutation
// group: digits in base `degree`, factor generators act one digit at a time
FiniteGroup power_regular(const FiniteGroup& factor, int m) {
  if (m == 1) return factor;
  long d = factor.degree();
  long n = 1;
  for (int i = 0; i < m; ++i) {
    n *= d;
    if (n > 1024) throw std::invalid_argument("regular power too large");
  }
  std::vector<GroupElement> gens;
  for (int slot = 0; slot < m; ++slot) {
    long stride = 1;
    for (int i = slot + 1; i < m; ++i) stride *= d;
    for (int gi : factor.generator_indices()) {
      const std::vector<int>& g = factor.element(gi).perm_images();
      std::vector<int> img(n);
      for (long x = 0; x < n; ++x) {
        long digit = (x / stride) % d;
        img[x] = static_cast<int>(x + (static_cast<long>(g[digit]) - digit) * stride);
      }
      gens.push_back(GroupElement::perm(std::move(img)));
    }
  }
  return FiniteGroup::generate(std::move(gens));
}

Orbifold orthogonal_orbifold(SpaceKind space, int n, int k, bool trivial,
                             FiniteGroup group, std::string name) {
  Orbifold o;
  o.kind = OrbifoldKind::Orthogonal;
  o.name = name;
  o.action = OrthogonalAction{space, n, k, trivial, std::move(group), std::move(name)};
  return o;
}

Scenario rsw(const std::string& sp, bool stiefel) {
  auto [k1, k2] = rsw_groups();
  Scenario sc;
  sc.name = sp;
  if (stiefel) {
    sc.orbifolds.push_back(
        orthogonal_orbifold(SpaceKind::Stiefel, 6, 3, false, std::move(k1), "O1"));
    sc.orbifolds.push_back(
        orthogonal_orbifold(SpaceKind::Stiefel, 6, 3, false, std::move(k2), "O2"));
  } else {
    sc.orbifolds.push_back(
        orthogonal_orbifold(SpaceKind::Sphere, 6, 0, false, std::move(k1), "O1"));
    sc.orbifolds.push_back(
        orthogonal_orbifold(SpaceKind::Sphere, 6, 0, false, std::move(k2), "O2"));
  }
  return sc;
}

Scenario ssw(const std::string& sp, const std::string& rest) {
  auto parts = split(rest, ',');
  if (parts.size() > 2)
    throw std::invalid_argument("ssw scenario: want ssw:p[,m]");
  long p = parse_long(parts[0], "ssw prime");
  long m = parts.size() > 1 ? parse_long(parts[1], "ssw power") : 1;
  if (!is_prime(p) || p == 2 || m < 1)
    throw std::invalid_argument("ssw scenario: p must be an odd prime and m >= 1");
  long n = 1;
  for (long i = 0; i < 3 * m; ++i) {
    n *= p;
    if (n > 1024)
      throw std::invalid_argument("ssw scenario: p^(3m) beyond 1024 is not supported");
  }
  Scenario sc;
  sc.name = sp;
  sc.orbifolds.push_back(orthogonal_orbifold(
      SpaceKind::Sphere, static_cast<int>(n), 0, false,
      elementary_abelian_regular(p, static_cast<int>(3 * m)), "O0"));
  sc.orbifolds.push_back(orthogonal_orbifold(
      SpaceKind::Sphere, static_cast<int>(n), 0, false,
      power_regular(heisenberg_regular(p), static_cast<int>(m)), "O1"));
  return sc;
}

FiniteGroup mtriv_group(const std::string& name) {
  if (name == "D6")
    return FiniteGroup::generate(
        {GroupElement::perm({1, 0, 2}), GroupElement::perm({1, 2, 0})});
  if (name == "V4")
    return FiniteGroup::generate(
        {GroupElement::perm({1, 0, 3, 2}), GroupElement::perm({2, 3, 0, 1})});
  if (name.size() > 1 && name[0] == 'Z') {
    long k = parse_long(name.substr(1), "cyclic order");
    if (k < 1 || k > 100000)
      throw std::invalid_argument("bad cyclic order in mtriv group: " + name);
    std::vector<int> img(k);
    for (long i = 0; i < k; ++i) img[i] = static_cast<int>((i + 1) % k);
    return FiniteGroup::generate({GroupElement::perm(std::move(img))});
  }
  throw std::invalid_argument("unknown mtriv group: " + name +
                              " (want Z<k>, D6 or V4)");
}

Scenario mtriv(const std::string& sp, const std::string& name) {
  Scenario sc;
  sc.name = sp;
  sc.orbifolds.push_back(
      orthogonal_orbifold(SpaceKind::Sphere, 3, 0, true, mtriv_group(name), sp));
  return sc;
}

Scenario lens_scenario(const std::string& sp, const std::string& rest) {
  auto parts = split(rest, ':');
  if (parts.size() != 2)
    throw std::invalid_argument("lens scenario: want lens:q:w1,w2[,..]");
  long q = parse_long(parts[0], "lens order");
  if (q < 1) throw std::invalid_argument("lens scenario: q must be positive");
  std::vector<long> ws;
  for (const auto& t : split(parts[1], ',')) ws.push_back(parse_long(t, "lens weight"));
  Orbifold o;
  o.kind = OrbifoldKind::Lens;
  o.lens = LensData{q, ws};
  std::string nm = "L(" + std::to_string(q) + ";";
  for (size_t i = 0; i < ws.size(); ++i)
    nm += (i ? "," : "") + std::to_string(ws[i]);
  o.name = nm + ")";
  Scenario sc;
  sc.name = sp;
  sc.orbifolds.push_back(std::move(o));
  return sc;
}

Scenario fixture_scenario(const std::string& sp, const std::string& file,
                          const std::string& data_dir) {
  SingularFixture fx = load_fixture_file(resolve(file, data_dir));
  Orbifold o;
  o.kind = OrbifoldKind::Fixture;
  o.name = fx.name;
  o.strata = fx.strata;
  o.fixture = std::move(fx);
  Scenario sc;
  sc.name = sp;
  sc.orbifolds.push_back(std::move(o));
  return sc;
}

Scenario torus5(const std::string& sp, const std::string& file,
                const std::string& data_dir) {
  LatticePair pair = load_lattice_pair_file(resolve(file, data_dir));
  Scenario sc;
  sc.name = sp;
  for (int i = 0; i < 2; ++i) {
    const Lattice& base = i == 0 ? pair.a : pair.b;
    Lattice ext;
    ext.rank = base.rank + 1;
    ext.name = base.name;
    ext.gram = RatMatrix(ext.rank, ext.rank);
    for (int r = 0; r < base.rank; ++r)
      for (int c = 0; c < base.rank; ++c) ext.gram.at(r, c) = base.gram.at(r, c);
    ext.gram.at(base.rank, base.rank) = 1;
    AffineIsometry g;
    g.B = IntMatrix::identity(ext.rank);
    g.B.at(base.rank, base.rank) = -1;
    g.b.assign(ext.rank, Rat(0));
    Orbifold o;
    o.kind = OrbifoldKind::FlatCrystal;
    o.name = base.name.empty() ? (i == 0 ? "O1" : "O2") : base.name;
    o.crystal = CrystalGroup::build(std::move(ext), {std::move(g)});
    sc.orbifolds.push_back(std::move(o));
  }
  return sc;
}

Scenario sunada15(const std::string& sp) {
  // the two order-8 groups doubled onto coordinates 4..15, then extended by
  // the order-4 flip group on coordinates 1..3
  auto flips = [](std::vector<int> pos) { return GroupElement::sign_flips(15, pos); };
  FiniteGroup g1 = FiniteGroup::generate(
      {flips({0, 1}), flips({1, 2}), flips({3, 4, 9, 10}), flips({3, 5, 9, 11}),
       flips({3, 6, 7, 8, 9, 12, 13, 14})});
  FiniteGroup g2 = FiniteGroup::generate(
      {flips({0, 1}), flips({1, 2}), flips({3, 4, 9, 10}), flips({5, 6, 11, 12}),
       flips({7, 8, 13, 14})});
  Scenario sc;
  sc.name = sp;
  Orbifold o1 =
      orthogonal_orbifold(SpaceKind::Stiefel, 15, 12, false, std::move(g1), "O1");
  Orbifold o2 =
      orthogonal_orbifold(SpaceKind::Stiefel, 15, 12, false, std::move(g2), "O2");
  // stratum data of the associated 66-dimensional quotient pair; the first
  // orbifold's singular set reaches dimension 18, the second stops at 34
  o1.strata = {StratumRecord{18, 1, SymValue(1), "(Z2)^3", "trivial"},
               StratumRecord{34, 3, SymValue(1), "Z2", "trivial"}};
  o2.strata = {StratumRecord{34, 3, SymValue(1), "Z2", "trivial"}};
  sc.orbifolds = {std::move(o1), std::move(o2)};
  return sc;
}

}  // namespace

std::pair<FiniteGroup, FiniteGroup> rsw_groups() {
  FiniteGroup k1 = FiniteGroup::generate({GroupElement::sign_flips(6, {0, 1}),
                                          GroupElement::sign_flips(6, {0, 2}),
                                          GroupElement::sign_flips(6, {0, 3, 4, 5})});
  FiniteGroup k2 = FiniteGroup::generate({GroupElement::sign_flips(6, {0, 1}),
                                          GroupElement::sign_flips(6, {2, 3}),
                                          GroupElement::sign_flips(6, {4, 5})});
  return {std::move(k1), std::move(k2)};
}

FiniteGroup elementary_abelian_regular(long p, int rank) {
  if (p < 2 || rank < 1)
    throw std::invalid_argument("elementary_abelian_regular: bad parameters");
  long n = 1;
  for (int i = 0; i < rank; ++i) {
    n *= p;
    if (n > 1024)
      throw std::invalid_argument("elementary_abelian_regular: degree beyond 1024");
  }
  std::vector<GroupElement> gens;
  for (int slot = 0; slot < rank; ++slot) {
    long stride = 1;
    for (int i = slot + 1; i < rank; ++i) stride *= p;
    std::vector<int> img(n);
    for (long x = 0; x < n; ++x) {
      long digit = (x / stride) % p;
      img[x] = static_cast<int>(x + ((digit + 1) % p - digit) * stride);
    }
    gens.push_back(GroupElement::perm(std::move(img)));
  }
  return FiniteGroup::generate(std::move(gens));
}

FiniteGroup heisenberg_regular(long p) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("heisenberg_regular: p must be an odd prime");
  if (p * p * p > 1024)
    throw std::invalid_argument("heisenberg_regular: degree beyond 1024");
  long n = p * p * p;
  auto enc = [p](long a, long b, long c) { return (a * p + b) * p + c; };
  std::vector<int> gx(n), gy(n);
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c) {
        // left translation by (1,0,0) resp. (0,1,0) under
        // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b')
        gx[enc(a, b, c)] = static_cast<int>(enc((a + 1) % p, b, (c + b) % p));
        gy[enc(a, b, c)] = static_cast<int>(enc(a, (b + 1) % p, c));
      }
  return FiniteGroup::generate(
      {GroupElement::perm(std::move(gx)), GroupElement::perm(std::move(gy))});
}

Scenario load_scenario(const std::string& sp, const std::string& data_dir) {
  if (sp == "rsw27") return rsw(sp, true);
  if (sp == "rsw29") return rsw(sp, false);
  if (sp == "sunada15") return sunada15(sp);
  if (sp.rfind("ssw:", 0) == 0) return ssw(sp, sp.substr(4));
  if (sp.rfind("mtriv:", 0) == 0) return mtriv(sp, sp.substr(6));
  if (sp.rfind("lens:", 0) == 0) return lens_scenario(sp, sp.substr(5));
  if (sp.rfind("flat-fixture:", 0) == 0)
    return fixture_scenario(sp, sp.substr(13), data_dir);
  if (sp.rfind("torus5:", 0) == 0) return torus5(sp, sp.substr(7), data_dir);
  throw std::invalid_argument(
      "unknown scenario: " + sp +
      " (want rsw27, rsw29, ssw:p[,m], mtriv:<G>, lens:q:w1,w2[,..], "
      "flat-fixture:<file>, torus5:<file> or sunada15)");
}

}  // namespace orbispec

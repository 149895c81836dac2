#include "orbispec/io.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"

namespace orbispec {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return j;
}

const json& field(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(path + ": missing field \"" + key + "\"");
  return *it;
}

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// gram entries etc. may be JSON integers or rational strings
Rat json_rat(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument(path + ": expected an integer or a rational string");
}

Lattice lattice_from_json(const json& j, const std::string& path) {
  Lattice l;
  l.rank = field(j, "rank", path).get<int>();
  l.name = j.value("name", std::string{});
  if (l.rank < 1) throw std::invalid_argument(path + ": rank must be positive");
  const json& g = field(j, "gram", path);
  if (static_cast<int>(g.size()) != l.rank)
    throw std::invalid_argument(path + ": gram must have `rank` rows");
  l.gram = RatMatrix(l.rank, l.rank);
  for (int i = 0; i < l.rank; ++i) {
    if (static_cast<int>(g[i].size()) != l.rank)
      throw std::invalid_argument(path + ": gram row of wrong length");
    for (int k = 0; k < l.rank; ++k) l.gram.at(i, k) = json_rat(g[i][k], path);
  }
  try {
    l.validate();
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return l;
}

}  // namespace

Rat parse_rational(const std::string& s) {
  std::string t = trimmed(s);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  return rat_from_string(t);
}

SymValue parse_size(const std::string& s) {
  auto parse_int = [&s](const std::string& t) {
    try {
      return Int(t);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad size literal: " + s);
    }
  };
  Rat coef = 1;
  int pi_pow = 0;
  Int rad = 1;
  std::string rest = s;
  size_t pos = 0;
  while (pos <= rest.size()) {
    size_t star = rest.find('*', pos);
    std::string tok =
        trimmed(rest.substr(pos, star == std::string::npos ? star : star - pos));
    pos = star == std::string::npos ? rest.size() + 1 : star + 1;
    if (tok.empty()) throw std::invalid_argument("bad size literal: " + s);
    if (tok == "pi") {
      pi_pow += 1;
    } else if (tok.rfind("pi^", 0) == 0) {
      std::string p = tok.substr(3);
      if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad size literal: " + s);
      pi_pow += std::atoi(p.c_str());
    } else if (tok.rfind("sqrt(", 0) == 0 && tok.back() == ')') {
      rad *= parse_int(tok.substr(5, tok.size() - 6));
    } else if (tok.find("/sqrt(") != std::string::npos && tok.back() == ')') {
      size_t cut = tok.find("/sqrt(");
      Rat r = parse_rational(tok.substr(0, cut));
      Int k = parse_int(tok.substr(cut + 6, tok.size() - cut - 7));
      if (k <= 0) throw std::invalid_argument("bad size literal: " + s);
      coef *= r / Rat(k);  // r/sqrt(k) = r sqrt(k) / k
      rad *= k;
    } else {
      coef *= parse_rational(tok);
    }
  }
  if (rad <= 0) throw std::invalid_argument("bad size literal: " + s);
  SymValue v = SymValue::term(coef, pi_pow, rad);
  if (!(SymValue(0).less_than(v)))
    throw std::invalid_argument("size must be positive: " + s);
  return v;
}

LoadedGroup load_group_file(const std::string& path) {
  json j = read_json(path);
  LoadedGroup out;
  out.name = j.value("name", std::string{});
  int n = field(j, "dimension", path).get<int>();
  if (n < 1) throw std::invalid_argument(path + ": dimension must be positive");
  std::string rep = field(j, "representation", path).get<std::string>();
  if (rep != "signed_permutation" && rep != "permutation" && rep != "matrix")
    throw std::invalid_argument(path + ": unknown representation \"" + rep + "\"");
  std::vector<GroupElement> gens;
  for (const json& g : field(j, "generators", path)) {
    out.generator_names.push_back(
        g.value("name", "g" + std::to_string(gens.size() + 1)));
    if (rep == "matrix") {
      const json& rows = field(g, "rows", path);
      if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument(path + ": matrix generator of wrong size");
      RatMatrix m(n, n);
      for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
          throw std::invalid_argument(path + ": matrix generator of wrong size");
        for (int k = 0; k < n; ++k) m.at(i, k) = json_rat(rows[i][k], path);
      }
      gens.push_back(GroupElement::matrix(std::move(m)));
      continue;
    }
    const json& imgs = field(g, "images", path);
    if (static_cast<int>(imgs.size()) != n)
      throw std::invalid_argument(path + ": generator needs exactly `dimension` images");
    std::vector<int> img(n), sgn(n, 1);
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      long v = imgs[i].get<long>();
      if (v == 0 || v > n || v < -n)
        throw std::invalid_argument(path + ": image entry out of range");
      if (v < 0 && rep == "permutation")
        throw std::invalid_argument(path + ": sign on a plain permutation image");
      img[i] = static_cast<int>(std::labs(v)) - 1;
      sgn[i] = v < 0 ? -1 : 1;
      if (seen[img[i]]++)
        throw std::invalid_argument(path + ": images are not a permutation");
    }
    gens.push_back(rep == "permutation" ? GroupElement::perm(std::move(img))
                                        : GroupElement::signed_perm(std::move(img),
                                                                    std::move(sgn)));
  }
  if (gens.empty())
    throw std::invalid_argument(path + ": needs at least one generator");
  out.group = FiniteGroup::generate(std::move(gens));
  if (out.name.empty()) out.name = path;
  return out;
}

Presentation load_presentation_file(const std::string& path) {
  json j = read_json(path);
  int ngens = field(j, "generators", path).get<int>();
  std::vector<std::vector<int>> rel;
  for (const json& r : field(j, "relators", path)) {
    std::vector<int> w;
    for (const json& x : r) w.push_back(x.get<int>());
    rel.push_back(std::move(w));
  }
  Presentation p =
      Presentation::from_relators(ngens, std::move(rel), j.value("name", std::string{}));
  try {
    p.validate();
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return p;
}

Lattice load_lattice_file(const std::string& path) {
  return lattice_from_json(read_json(path), path);
}

LatticePair load_lattice_pair_file(const std::string& path) {
  json j = read_json(path);
  LatticePair out;
  out.description = j.value("description", std::string{});
  const json& ls = field(j, "lattices", path);
  if (ls.size() != 2)
    throw std::invalid_argument(path + ": expected exactly two lattices");
  out.a = lattice_from_json(ls[0], path);
  out.b = lattice_from_json(ls[1], path);
  if (out.a.rank != out.b.rank)
    throw std::invalid_argument(path + ": lattices of different rank");
  // re-certify the claimed isospectrality up to norm 20 before accepting
  auto ta = theta_counts(out.a.gram, Rat(20));
  auto tb = theta_counts(out.b.gram, Rat(20));
  if (ta != tb) {
    for (const auto& [mu, c] : ta) {
      auto it = tb.find(mu);
      long long other = it == tb.end() ? 0 : it->second;
      if (c != other)
        throw std::invalid_argument(path + ": theta series disagree at norm " +
                                    rat_to_string(mu));
    }
    for (const auto& [mu, c] : tb)
      if (!ta.count(mu))
        throw std::invalid_argument(path + ": theta series disagree at norm " +
                                    rat_to_string(mu));
  }
  return out;
}

LoadedCrystal load_crystal_file(const std::string& path) {
  json j = read_json(path);
  Lattice l = lattice_from_json(field(j, "lattice", path), path);
  int n = l.rank;
  std::vector<AffineIsometry> gens;
  for (const json& e : field(j, "generators", path)) {
    AffineIsometry a;
    const json& B = field(e, "B", path);
    if (static_cast<int>(B.size()) != n)
      throw std::invalid_argument(path + ": B must be rank x rank");
    a.B = IntMatrix(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(B[i].size()) != n)
        throw std::invalid_argument(path + ": B must be rank x rank");
      for (int k = 0; k < n; ++k) {
        if (!B[i][k].is_number_integer())
          throw std::invalid_argument(path + ": B entries must be integers");
        a.B.at(i, k) = Int(B[i][k].get<long long>());
      }
    }
    const json& b = field(e, "b", path);
    if (static_cast<int>(b.size()) != n)
      throw std::invalid_argument(path + ": b must have rank entries");
    for (int i = 0; i < n; ++i) a.b.push_back(json_rat(b[i], path));
    gens.push_back(std::move(a));
  }
  LoadedCrystal out{j.value("name", path), CrystalGroup::build(std::move(l), std::move(gens))};
  return out;
}

SingularFixture load_fixture_file(const std::string& path) {
  json j = read_json(path);
  SingularFixture fx;
  fx.name = j.value("name", path);
  fx.ambient_dimension = field(j, "ambient_dimension", path).get<int>();
  if (fx.ambient_dimension < 1)
    throw std::invalid_argument(path + ": ambient_dimension must be positive");
  for (const json& s : field(j, "strata", path)) {
    StratumRecord r;
    r.dimension = field(s, "dimension", path).get<int>();
    r.count = field(s, "count", path).get<long long>();
    r.isotropy = field(s, "isotropy", path).get<std::string>();
    r.effective_action = s.value("effective_action", std::string("trivial"));
    if (s.contains("length")) r.size = parse_size(s["length"].get<std::string>());
    if (r.dimension < 0 || r.dimension >= fx.ambient_dimension)
      throw std::invalid_argument(path + ": stratum dimension out of range");
    if (r.count < 1)
      throw std::invalid_argument(path + ": stratum count must be positive");
    if (r.effective_action != "trivial" && r.effective_action != "reflection")
      throw std::invalid_argument(path + ": unknown effective_action \"" +
                                  r.effective_action + "\"");
    isotropy_group(r.isotropy);  // reject unknown tags here, not at use time
    fx.strata.push_back(std::move(r));
  }
  return fx;
}

}  // namespace orbispec

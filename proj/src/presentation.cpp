#include "orbispec/presentation.hpp"

#include <cstdlib>
#include <stdexcept>

#include "orbispec/io.hpp"

namespace orbispec {

Presentation Presentation::free_group(int l) {
  if (l < 1) throw std::invalid_argument("free_group: need at least one generator");
  Presentation p;
  p.ngens = l;
  p.kind = Kind::Free;
  p.name = (l == 1) ? "Z" : "F" + std::to_string(l);
  return p;
}

Presentation Presentation::free_abelian(int l) {
  if (l < 1) throw std::invalid_argument("free_abelian: need at least one generator");
  Presentation p;
  p.ngens = l;
  p.kind = (l == 1) ? Kind::Free : Kind::FreeAbelian;
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) p.relators.push_back({i, j, -i, -j});
  p.name = (l == 1) ? "Z" : "Z^" + std::to_string(l);
  return p;
}

Presentation Presentation::finite_cyclic(long p) {
  if (p < 1) throw std::invalid_argument("finite_cyclic: order must be >= 1");
  Presentation pr;
  pr.ngens = 1;
  pr.relators.push_back(std::vector<int>(static_cast<size_t>(p), 1));
  pr.kind = Kind::General;
  pr.name = "Zp:" + std::to_string(p);
  return pr;
}

Presentation Presentation::from_relators(int ngens, std::vector<std::vector<int>> relators,
                                         std::string name) {
  Presentation p;
  p.ngens = ngens;
  p.relators = std::move(relators);
  p.kind = p.relators.empty() ? Kind::Free : Kind::General;
  p.name = std::move(name);
  p.validate();
  return p;
}

Presentation Presentation::parse(const std::string& sp) {
  if (sp == "Z") return free_abelian(1);
  if (sp.rfind("Z^", 0) == 0) {
    int l = std::atoi(sp.c_str() + 2);
    if (l < 1) throw std::invalid_argument("bad gamma spec: " + sp);
    return free_abelian(l);
  }
  if (sp.size() >= 2 && sp[0] == 'F') {
    int l = std::atoi(sp.c_str() + 1);
    if (l < 1) throw std::invalid_argument("bad gamma spec: " + sp);
    return free_group(l);
  }
  if (sp.rfind("Zp:", 0) == 0) {
    long p = std::atol(sp.c_str() + 3);
    if (p < 1) throw std::invalid_argument("bad gamma spec: " + sp);
    return finite_cyclic(p);
  }
  if (sp.rfind("file:", 0) == 0) return load_presentation_file(sp.substr(5));
  throw std::invalid_argument("bad gamma spec: " + sp);
}

void Presentation::validate() const {
  if (ngens < 1) throw std::invalid_argument("presentation: need at least one generator");
  for (const auto& r : relators) {
    if (r.empty()) throw std::invalid_argument("presentation: empty relator");
    for (int s : r)
      if (s == 0 || s > ngens || s < -ngens)
        throw std::invalid_argument("presentation: relator index out of range");
  }
}

int Presentation::max_gen_of_relator(size_t r) const {
  int m = 0;
  for (int s : relators[r]) m = std::max(m, std::abs(s));
  return m;
}

}  // namespace orbispec

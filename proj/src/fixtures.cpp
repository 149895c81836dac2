#include "orbispec/fixtures.hpp"

#include <sstream>
#include <stdexcept>

#include "orbispec/cyclotomic.hpp"

namespace orbispec {

FiniteGroup isotropy_group(const std::string& tag) {
  if (tag == "Z2") return FiniteGroup::generate({GroupElement::sign_flips(2, {0, 1})});
  if (tag == "Z4")
    return FiniteGroup::generate({GroupElement::signed_perm({1, 0}, {1, -1})});
  if (tag == "V4")
    return FiniteGroup::generate({GroupElement::sign_flips(3, {1, 2}),
                                  GroupElement::sign_flips(3, {0, 2})});
  if (tag.rfind("Zk:", 0) == 0) {
    long k = std::stol(tag.substr(3));
    if (k < 2) throw std::invalid_argument("isotropy tag: order must be >= 2");
    if (k == 2) return isotropy_group("Z2");
    // companion matrix of the k-th cyclotomic polynomial: order k, no
    // eigenvalue 1 on any nontrivial power
    const std::vector<Int>& phi = cyclotomic_polynomial(k);
    int d = static_cast<int>(phi.size()) - 1;
    RatMatrix c(d, d);
    for (int i = 1; i < d; ++i) c.at(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) c.at(i, d - 1) = -Rat(phi[i]);
    return FiniteGroup::generate({GroupElement::matrix(std::move(c))});
  }
  throw std::invalid_argument("unknown isotropy tag: " + tag);
}

std::vector<FixtureSectorRow> fixture_sectors(const SingularFixture& fx,
                                              const Presentation& gamma,
                                              long long budget) {
  std::vector<FixtureSectorRow> out;
  for (size_t ri = 0; ri < fx.strata.size(); ++ri) {
    const StratumRecord& rec = fx.strata[ri];
    FiniteGroup gs = isotropy_group(rec.isotropy);
    HomEnumeration homs = hom_classes(gs, gamma, budget);
    for (const HomClass& cls : homs.classes) {
      std::vector<GroupElement> image;
      for (int idx : cls.rep) image.push_back(gs.element(idx));
      if (fixed_subspace_dim(image) != 0) continue;
      FixtureSectorRow row;
      row.record = static_cast<int>(ri);
      {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < cls.rep.size(); ++i) {
          if (i) os << ",";
          os << gs.element(cls.rep[i]).describe();
        }
        os << ")";
        row.label = os.str();
      }
      row.m = rec.count;
      // the centralizer fixes the stratum pointwise and, for the induced
      // actions modeled here, acts trivially along it
      row.kernel_order = static_cast<long long>(hom_stabilizer(gs, cls.rep).size());
      out.push_back(std::move(row));
    }
  }
  return out;
}

long long fixture_component_total(const std::vector<FixtureSectorRow>& rows) {
  long long total = 1;  // nontwisted sector
  for (const FixtureSectorRow& r : rows) total += r.m;
  return total;
}

SymValue circle_eigenvalue(const SymValue& length, long k) {
  auto term = length.single_term();
  if (!term) throw std::invalid_argument("circle_eigenvalue: length is not a single term");
  auto [r, p, s] = *term;
  if (!(r > 0) || p > 1)
    throw std::invalid_argument("circle_eigenvalue: unsupported length " +
                                length.to_string());
  // (2 pi k / L)^2 with L^2 = r^2 pi^{2p} s rational times a power of pi
  Rat coef = Rat(4 * k * k) / (r * r * Rat(s));
  return SymValue::term(coef, 2 - 2 * p, 1);
}

SpectrumSegment fixture_row_spectrum(const StratumRecord& rec, long long copies,
                                     int kmax) {
  SpectrumSegment seg;
  if (rec.dimension == 0) {
    seg.add(SymValue(0), copies);
    return seg;  // finite point spectrum, no cutoff
  }
  if (rec.dimension != 1)
    throw std::invalid_argument("fixture_row_spectrum: only curve and point strata");
  if (rec.effective_action == "trivial") {
    seg.add(SymValue(0), copies);
    for (long k = 1; k <= kmax; ++k)
      seg.add(circle_eigenvalue(rec.size, k), 2 * copies);
    seg.cutoff = circle_eigenvalue(rec.size, kmax + 1);
    return seg;
  }
  if (rec.effective_action == "reflection") {
    // mirrored interval of length L: even modes of the circle of length 2L,
    // each simple
    SymValue doubled = rec.size * SymValue(2);
    seg.add(SymValue(0), copies);
    for (long k = 1; k <= kmax; ++k) seg.add(circle_eigenvalue(doubled, k), copies);
    seg.cutoff = circle_eigenvalue(doubled, kmax + 1);
    return seg;
  }
  throw std::invalid_argument("fixture_row_spectrum: unknown action tag " +
                              rec.effective_action);
}

}  // namespace orbispec

#pragma once

#include "orbispec/gamma_spectrum.hpp"

namespace orbispec {

struct SectorMatchRecord {
  std::string bucket;  // shared fixed-set invariants (kind, dim, components, m)
  std::string label_a, label_b;
  bool passed = false;
  std::string detail;
};

/**
 * Isospectrality certificate in the style of the Sunada construction: a
 * bijection between hom classes matching fixed-set invariants, where each
 * matched pair has almost-conjugate centralizer actions on the common
 * fixed-set model.  A certified result implies equality of the sector
 * spectra pair by pair; a failed one implies nothing.
 */
struct GammaCertificate {
  bool certified = false;
  AlmostConjugacyWitness groups;  // ambient comparison of the acting groups
  std::vector<SectorMatchRecord> pairing;
  std::vector<std::string> failures;
  std::string verdict;
  std::string proxy_note;
};

GammaCertificate certify_gamma_isospectral(const Orbifold& a, const Orbifold& b,
                                           const Presentation& gamma,
                                           long long budget = 100000000);

}  // namespace orbispec

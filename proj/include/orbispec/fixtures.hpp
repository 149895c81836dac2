#pragma once

#include <string>
#include <vector>

#include "orbispec/homs.hpp"
#include "orbispec/spectrum.hpp"

namespace orbispec {

/**
 * One stated stratum of the singular set of a closed flat orbifold: `count`
 * isometric pieces of the given dimension and size (a length for curves, 1
 * for points), all carrying the same isotropy group and the same induced
 * action along the piece.
 */
struct StratumRecord {
  int dimension = 0;
  long long count = 0;
  SymValue size = SymValue(1);
  std::string isotropy;          // Z2 | Z4 | V4 | Zk:<k>
  std::string effective_action;  // trivial | reflection
};

struct SingularFixture {
  std::string name;
  int ambient_dimension = 0;
  std::vector<StratumRecord> strata;
};

// The isotropy tag realized as a concrete matrix group whose nontrivial
// elements fix only the origin of the normal slice, so homomorphism and
// centralizer machinery runs on it unchanged.
FiniteGroup isotropy_group(const std::string& tag);

/**
 * One twisted row of the decomposition read off the singular data: a stratum
 * record together with a class of homomorphisms into its isotropy group
 * whose image fixes only the origin of the slice.  Such a class contributes
 * one sector per piece, so m = count.  Homomorphisms fixing a larger slice
 * subspace belong to incident higher-dimensional strata and are skipped.
 */
struct FixtureSectorRow {
  int record = 0;  // index into strata
  std::string label;
  long long m = 0;
  long long kernel_order = 0;  // centralizer elements acting trivially along the piece
};

std::vector<FixtureSectorRow> fixture_sectors(const SingularFixture& fx,
                                              const Presentation& gamma,
                                              long long budget = 100000000);

// sum of m over the rows plus 1 for the nontwisted sector
long long fixture_component_total(const std::vector<FixtureSectorRow>& rows);

// eigenvalue (2 pi k / L)^2 of a circle of circumference L; L must be a
// single positive term r * pi^p * sqrt(s) with p <= 1
SymValue circle_eigenvalue(const SymValue& length, long k);

// Spectrum of `copies` disjoint pieces of the record's geometry, listing
// modes k <= kmax: a circle for a 1-dimensional stratum with trivial induced
// action, a mirrored interval (even modes of the doubled circle) under a
// reflection, a point set in dimension 0.
SpectrumSegment fixture_row_spectrum(const StratumRecord& rec, long long copies,
                                     int kmax);

}  // namespace orbispec

#pragma once

#include <optional>

#include "orbispec/homs.hpp"
#include "orbispec/lattice.hpp"
#include "orbispec/spectrum.hpp"

namespace orbispec {

class UnsupportedSector : public std::runtime_error {
 public:
  explicit UnsupportedSector(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Affine isometry x -> Bx + b of a torus R^n/Z^n written in lattice
 * coordinates: B is an integer unimodular matrix preserving the Gram form,
 * b a rational translation taken modulo Z^n.
 */
struct AffineIsometry {
  IntMatrix B;
  std::vector<Rat> b;

  void normalize();  // reduce b into [0,1)
};

/**
 * Crystallographic quotient in the torus picture: the finite group F of
 * affine isometries of the torus R^n/Z^n (lattice coordinates, rational Gram
 * geometry).  Models the group-table interface, identity at index 0, so the
 * homomorphism machinery applies directly.
 */
class CrystalGroup {
 public:
  static CrystalGroup build(Lattice lattice, std::vector<AffineIsometry> gens,
                            long long cap = 100000);

  const Lattice& lattice() const { return lattice_; }
  const AffineIsometry& rep(int i) const { return reps_[i]; }
  std::string describe(int i) const;

  int order() const { return static_cast<int>(reps_.size()); }
  int mult(int i, int j) const { return table_[i][j]; }
  int inv(int i) const { return inv_[i]; }

 private:
  Lattice lattice_;
  std::vector<AffineIsometry> reps_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

/**
 * Solution set of the simultaneous fixed-point congruences (B_i - I)x = -b_i
 * (mod Z^n) on the torus: a disjoint union of parallel subtorus cosets.
 * Solved exactly through the Smith normal form of the stacked system.
 */
struct AffineFixedSet {
  bool empty = true;
  int dim = 0;
  long long components = 0;
  IntMatrix direction_basis;  // n x dim, saturated (columns extend to a Z^n basis)
  SymValue component_volume;
  std::vector<std::vector<Rat>> component_points;  // one representative per component
  // bound-coordinate residues identifying each component (internal keys)
  RatMatrix vinv;
  std::vector<int> bound_coords;
  std::vector<std::vector<Rat>> component_keys;

  // index of the component containing the (exact) torus point p, -1 if the
  // point is not on the fixed set
  int component_of(const std::vector<Rat>& p) const;
};

AffineFixedSet affine_fixed_set(const CrystalGroup& cg, const std::vector<int>& elems,
                                long long component_cap = 4096);

struct FlatSectorDescriptor {
  HomClass hom;
  AffineFixedSet fixed;
  long long m = 0;
  std::vector<int> centralizer;
  std::vector<std::vector<int>> component_orbits;
  std::string label;
  bool nontwisted = false;
};

std::vector<FlatSectorDescriptor> flat_sector_list(const CrystalGroup& cg,
                                                   const Presentation& gamma,
                                                   long long budget = 100000000);

/**
 * Exact eigenvalue-count table of the flat orbifold: mu -> multiplicity
 * where mu is the squared dual norm (the Laplace eigenvalue is 4 pi^2 mu).
 * Computed by a twisted dual-lattice count: each group element contributes
 * character sums over its fixed dual vectors, accumulated as exact root-of-
 * unity combinations and certified to average to nonnegative integers.
 */
std::map<Rat, long long> flat_spectrum_counts(const CrystalGroup& cg, const Rat& mu_max);

SpectrumSegment flat_spectrum_segment(const CrystalGroup& cg, const Rat& mu_max,
                                      bool physical_eigenvalues);

struct FlatOrbitSpectrum {
  bool supported = false;
  std::string reason;
  SpectrumSegment seg;
  SymValue volume_eff;
  long long kernel_order = 0;
};

// Spectrum of one centralizer orbit of fixed-set components: supported when
// the orbit stabilizer acts on the component by translations (the quotient
// is again a flat torus; its spectrum is a dual theta count)
FlatOrbitSpectrum flat_orbit_spectrum(const CrystalGroup& cg,
                                      const FlatSectorDescriptor& sec,
                                      const std::vector<int>& orbit, const Rat& mu_max,
                                      bool physical_eigenvalues);

// eigenvalue conversion used by the flat side
SymValue flat_eigenvalue(const Rat& mu, bool physical);

}  // namespace orbispec

#pragma once

#include <optional>
#include <vector>

#include "orbispec/actions.hpp"
#include "orbispec/symvalue.hpp"

namespace orbispec {

struct SpectrumEntry {
  SymValue lambda;
  long long mult = 0;
};

/**
 * Finite portion of a Laplace spectrum, sorted by eigenvalue.  If cutoff is
 * set, the listing is complete for all eigenvalues strictly below it; an
 * empty cutoff means the listed entries are the entire spectrum region the
 * producer promises (used for finite spectra such as points).
 */
struct SpectrumSegment {
  std::vector<SpectrumEntry> entries;
  std::optional<SymValue> cutoff;

  long long multiplicity_of(const SymValue& lambda) const;
  void add(const SymValue& lambda, long long mult);  // keeps order, merges
};

// multiset union; the cutoff becomes the smaller of the two
SpectrumSegment merge_segments(const SpectrumSegment& a, const SpectrumSegment& b);

/**
 * Dimensions of the degree-k invariant harmonics of a set of isometries of
 * R^n (averaged Molien counts; the element list is treated as the full group
 * or a system of distinct coset representatives).  All averages are checked
 * to be integers.
 */
std::vector<Int> harmonic_invariant_dims(const std::vector<GroupElement>& elems,
                                         int n, int kmax);

// Laplace spectrum of the quotient of the round sphere S^{n-1} by the group
// spanned by the listed isometries: eigenvalue k(k+n-2) with the invariant
// harmonic dimension as multiplicity, complete below (kmax+1)(kmax+n-1)
SpectrumSegment quotient_sphere_spectrum(const std::vector<GroupElement>& elems,
                                         int n, int kmax);

// Spectrum of the sector: the centralizer restricted to the fixed sphere.
// d = 1 yields the finite point spectrum {0 with multiplicity m}.
SpectrumSegment sphere_sector_spectrum(const OrthogonalAction& act,
                                       const SectorDescriptor& sec, int kmax);

// --- lens spaces: cyclic quotients of odd spheres ---

/**
 * Multiplicity of the eigenvalue k(k + 2m - 2) on the lens space
 * S^{2m-1}/Z_q with rotation weights s_1..s_m, computed by exact counting of
 * weighted lattice points (a residue dynamic program), no character theory.
 */
Int lens_eigenvalue_multiplicity(long q, const std::vector<long>& weights, int k);

// same multiplicities via the Molien series with cyclotomic arithmetic;
// used as an independent oracle for the counting path
std::vector<Int> lens_harmonic_dims_molien(long q, const std::vector<long>& weights,
                                           int kmax);

SpectrumSegment lens_spectrum(long q, const std::vector<long>& weights, int kmax);

}  // namespace orbispec

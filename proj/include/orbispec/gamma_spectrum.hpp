#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbispec/crystal.hpp"
#include "orbispec/fixtures.hpp"
#include "orbispec/spectrum.hpp"

namespace orbispec {

enum class OrbifoldKind { Orthogonal, Lens, FlatCrystal, Fixture };

// cyclic quotient of the unit sphere S^{2m-1} with rotation weights
struct LensData {
  long q = 1;
  std::vector<long> weights;
};

/**
 * A quotient orbifold in one of the supported input forms: a finite group of
 * orthogonal isometries of a sphere or frame manifold, a lens space, a
 * crystallographic quotient of a torus, or a singular-set fixture.  Stratum
 * records, when present, feed the lowest-stratum comparator.
 */
struct Orbifold {
  OrbifoldKind kind = OrbifoldKind::Orthogonal;
  std::string name;
  std::optional<OrthogonalAction> action;
  std::optional<LensData> lens;
  std::optional<CrystalGroup> crystal;
  std::optional<SingularFixture> fixture;
  std::vector<StratumRecord> strata;
};

/**
 * One row of the decomposition: a sector (or orbit of sector components)
 * with its spectrum segment when the sector type is spectrally supported.
 * volume_eff is the effective volume driving the heat-trace expansion; the
 * plain orbifold volume is volume_eff / kernel_order.
 */
struct SectorSpectrumRow {
  std::string label;
  bool nontwisted = false;
  long long m = 1;
  long long dimension = 0;
  bool supported = false;
  std::string reason;
  SpectrumSegment seg;
  SymValue volume_eff;
  bool volume_known = false;
  long long kernel_order = 1;
};

struct GammaSpectrum {
  std::string orbifold;
  std::string gamma;
  bool physical = false;  // flat eigenvalue convention in use
  std::vector<SectorSpectrumRow> rows;
  SpectrumSegment merged;  // multiset union over the supported rows
  bool all_supported = true;
  long long zero_multiplicity = 0;  // sum of m over all rows
};

struct SpectrumOptions {
  int cutoff_degree = 6;  // harmonic degree bound (spheres, circles)
  Rat cutoff_mu = 10;     // dual-norm bound (flat)
  bool physical = false;  // flat eigenvalues as 4 pi^2 mu instead of mu
  long long budget = 100000000;
};

GammaSpectrum gamma_spectrum(const Orbifold& o, const Presentation& gamma,
                             const SpectrumOptions& opt);

struct CompareResult {
  bool decided = false;
  bool isospectral_below_cutoff = false;
  bool inconclusive_unsupported = false;
  std::optional<SymValue> disagreement;
  long long mult_a = 0, mult_b = 0;
  bool twisted_annotation = false;
  std::optional<SymValue> cutoff;  // compared region bound; empty = complete
  std::string verdict;
};

CompareResult compare_gamma_spectra(const GammaSpectrum& a, const GammaSpectrum& b);

struct HeatValue {
  double value = 0;
  long long terms_used = 0;
  bool truncated = false;
};

// partial sum of exp(-lambda t) over the merged segment
HeatValue heat_trace(const GammaSpectrum& s, double t);

struct HeatTerm {
  long long dimension = 0;
  SymValue volume_sum;        // orbifold volumes vol_eff / kernel
  SymValue heat_coefficient;  // effective volumes, the (4 pi t)^{-d/2} weights
};

struct HeatExpansion {
  std::vector<HeatTerm> terms;  // descending dimension
  std::vector<std::string> unknown_volume_rows;
};

HeatExpansion leading_asymptotics(const GammaSpectrum& s);

// minimum dimension over singular strata; -1 = empty singular set (manifold)
int lowest_stratum_dimension(const std::vector<StratumRecord>& strata);

}  // namespace orbispec

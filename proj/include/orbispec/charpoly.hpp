#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbispec/group.hpp"
#include "orbispec/series.hpp"

namespace orbispec {

// Characteristic polynomial det(t*I - M), coefficient vector c[0..n] with
// c[n] = 1.  Permutation shapes use the cycle-product closed form; matrix
// shapes use the Faddeev-LeVerrier recursion over Q.
std::vector<Rat> char_poly(const GroupElement& g);

// det(I - t*M) as a polynomial in t (the reversal of char_poly).
std::vector<Rat> det_one_minus_t(const GroupElement& g);

/**
 * Trace series of the symmetric powers: sum_k tr(Sym^k g) t^k
 * = 1 / det(I - t g), truncated at degree kmax.  For isometries the
 * coefficients are dimensions of fixed spaces after averaging.
 */
std::vector<Rat> sym_trace_series(const GroupElement& g, int kmax);

// integer-certified version (coefficients of a single element's series are
// integers whenever the matrix has integer entries)
IntegerSeries sym_power_trace_series(const GroupElement& g, int kmax);

std::string poly_key(const std::vector<Rat>& coeffs);

/**
 * Count table of characteristic polynomials over a set of isometries.  For
 * subgroups of an orthogonal group this is a complete conjugation invariant
 * of the element multiset: two orthogonal matrices are conjugate in O(n)
 * exactly when their characteristic polynomials agree.
 */
using CharPolyTable = std::map<std::string, long long>;

CharPolyTable char_poly_table(const std::vector<GroupElement>& elems);

struct AlmostConjugacyWitness {
  bool almost_conjugate = false;
  // populated only when a common finite ambient group is supplied
  bool conjugacy_checked = false;
  bool conjugate_in_ambient = false;
  CharPolyTable table_a, table_b;
  std::vector<std::string> mismatched_keys;
  std::string invariant;  // which count table was used
};

// Almost conjugacy of two element multisets inside the orthogonal group of
// their common degree, decided by characteristic-polynomial count tables.
AlmostConjugacyWitness almost_conjugacy_witness(const std::vector<GroupElement>& a,
                                                const std::vector<GroupElement>& b);

// Exact version inside an explicit finite ambient group: count tables over
// the ambient conjugacy classes, plus a search for an ambient element
// conjugating one subgroup onto the other.
AlmostConjugacyWitness almost_conjugacy_witness(const FiniteGroup& ambient,
                                                const std::vector<int>& sub_a,
                                                const std::vector<int>& sub_b);

}  // namespace orbispec

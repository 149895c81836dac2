#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "orbispec/matrix.hpp"
#include "orbispec/symvalue.hpp"

namespace orbispec {

/**
 * Full-rank lattice described in its own coordinates: vectors are integer
 * coefficient tuples and the geometry lives entirely in the rational Gram
 * matrix.  No irrational basis entries ever appear.
 */
struct Lattice {
  int rank = 0;
  RatMatrix gram;  // symmetric positive definite, rational entries
  std::string name;

  void validate() const;  // symmetry + positive definiteness (exact)
  SymValue covolume() const;  // sqrt(det gram)
};

// dual lattice in the same coordinate frame: Gram of the dual basis is the
// inverse Gram
Lattice dual_lattice(const Lattice& l);

// norm v^T G v of an integer coefficient vector
Rat lattice_norm(const RatMatrix& gram, const std::vector<Int>& v);

/**
 * All lattice vectors of norm exactly mu, by exact nested bounds over an
 * LDL^T factorization of the Gram matrix (integer intervals per coordinate,
 * no floating point).  Includes the zero vector when mu = 0.
 */
std::vector<std::vector<Int>> vectors_of_norm(const RatMatrix& gram, const Rat& mu);

// all lattice vectors of norm <= mu_max (same exact sweep)
std::vector<std::vector<Int>> vectors_in_ball(const RatMatrix& gram, const Rat& mu_max);

/**
 * Streaming form of the ball sweep: calls fn(v, scaled_norm) for every vector
 * with norm <= mu_max, where norm = scaled_norm / scale for the single
 * integer scale written to *scale.  The recursion itself runs in scaled
 * integer arithmetic, which is what makes large sweeps affordable.
 */
void for_vectors_in_ball(const RatMatrix& gram, const Rat& mu_max, Int* scale,
                         const std::function<void(const std::vector<Int>&, const Int&)>& fn);

// norm -> vector count for all norms <= mu_max (theta coefficients)
std::map<Rat, long long> theta_counts(const RatMatrix& gram, const Rat& mu_max);

}  // namespace orbispec

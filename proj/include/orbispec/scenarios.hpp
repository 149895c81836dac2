#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbispec/gamma_spectrum.hpp"

namespace orbispec {

struct Scenario {
  std::string name;
  std::vector<Orbifold> orbifolds;  // one, or two for the built-in pairs
};

/**
 * Built-in scenario library.  Grammar:
 *   rsw27              frame-manifold pair V_{6,3} under the two sign-flip groups
 *   rsw29              the same groups acting on S^5
 *   ssw:p[,m]          S^{p^{3m}-1} under Z_p^{3m} vs the mod-p Heisenberg power
 *   mtriv:<Zk|D6|V4>   trivial action of the named group on S^2
 *   lens:q:w1,w2[,..]  cyclic sphere quotient with the given rotation weights
 *   flat-fixture:<f>   singular-set fixture file (resolved against data_dir)
 *   torus5:<f>         5-torus pair over a 4-dim isospectral lattice pair file
 *   sunada15           the 15-dim frame-manifold pair with matched sector data
 */
Scenario load_scenario(const std::string& sp, const std::string& data_dir);

// order-8 sign-flip groups acting on R^6 (shared by rsw27/rsw29)
std::pair<FiniteGroup, FiniteGroup> rsw_groups();

// regular permutation representations used by the ssw scenarios
FiniteGroup elementary_abelian_regular(long p, int rank);
FiniteGroup heisenberg_regular(long p);

}  // namespace orbispec

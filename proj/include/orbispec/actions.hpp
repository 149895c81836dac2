#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbispec/charpoly.hpp"
#include "orbispec/homs.hpp"

namespace orbispec {

// Common fixed subspace {v : g v = v for all g} of a set of isometries.
// Permutation and signed-permutation shapes use orbit counting (with sign
// consistency along cycles); matrix shapes fall back to an exact kernel
// computation.
int fixed_subspace_dim(const std::vector<GroupElement>& elems);

// columns of the returned matrix form a rational basis of the common fixed
// subspace (n x d)
RatMatrix fixed_subspace_basis(const std::vector<GroupElement>& elems);

enum class SpaceKind { Sphere, Stiefel };

/**
 * A finite group acting orthogonally on the unit sphere S^{n-1} of R^n or on
 * the manifold of orthonormal k-frames in R^n.  trivial_action marks the
 * degenerate action where every element acts as the identity on the space
 * (the group itself can still be any finite group).
 */
struct OrthogonalAction {
  SpaceKind space = SpaceKind::Sphere;
  int n = 0;
  int k = 0;  // frame size, Stiefel only
  bool trivial_action = false;
  FiniteGroup group;
  std::string name;

  long long space_dimension() const;
};

struct FixedSetDescriptor {
  bool empty = true;
  SpaceKind space = SpaceKind::Sphere;
  int d = 0;  // dimension of the fixed subspace of R^n
  int k = 0;
  long long manifold_components = 0;
  long long dimension = 0;  // dimension of each component
};

/**
 * One twisted (or nontwisted) piece of the decomposition: a conjugation
 * class of homomorphisms with nonempty fixed set, together with the number m
 * of connected components of the associated quotient (the orbits of the
 * centralizer on the components of the fixed set).
 */
struct SectorDescriptor {
  HomClass hom;
  FixedSetDescriptor fixed;
  long long m = 0;
  std::vector<int> centralizer;  // element indices in the acting group
  std::string label;
  bool nontwisted = false;
};

FixedSetDescriptor fixed_set_of_image(const OrthogonalAction& act,
                                      const std::vector<GroupElement>& image);

std::vector<SectorDescriptor> sector_list(const OrthogonalAction& act,
                                          const Presentation& gamma,
                                          long long budget = 100000000);

// total number of connected components of the full decomposition (sum of m)
long long sector_component_total(const std::vector<SectorDescriptor>& sectors);

// Distinct restrictions of the centralizer to the fixed subspace, as matrix
// elements of size d.  The kernel order counts centralizer elements that
// restrict to the identity.
struct RestrictedAction {
  std::vector<GroupElement> distinct;
  long long kernel_order = 0;
};

RestrictedAction restrict_centralizer(const OrthogonalAction& act,
                                      const SectorDescriptor& sec);

}  // namespace orbispec

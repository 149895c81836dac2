#pragma once

#include <string>
#include <vector>

#include "orbispec/crystal.hpp"
#include "orbispec/fixtures.hpp"
#include "orbispec/group.hpp"
#include "orbispec/lattice.hpp"
#include "orbispec/presentation.hpp"

namespace orbispec {

// JSON loaders for the on-disk formats (see README for the schemas).  All
// loaders throw std::invalid_argument with the offending path in the message.

struct LoadedGroup {
  std::string name;
  FiniteGroup group;
  std::vector<std::string> generator_names;
};

// { name, dimension, representation: signed_permutation | permutation |
//   matrix, generators: [ { name?, images: [signed 1-based] } | { name?,
//   rows: [["0","-1"],...] } ] }
LoadedGroup load_group_file(const std::string& path);

// { name?, generators: <count>, relators: [[signed 1-based indices], ...] }
Presentation load_presentation_file(const std::string& path);

// { name?, rank, gram: [[rationals]] }; entries may be integers or strings
Lattice load_lattice_file(const std::string& path);

struct LatticePair {
  std::string description;
  Lattice a, b;
};

// { description?, validation?, lattices: [<lattice>, <lattice>] }.  The two
// theta series are recomputed and compared for all norms <= 20 at load time;
// a mismatch rejects the file.
LatticePair load_lattice_pair_file(const std::string& path);

struct LoadedCrystal {
  std::string name;
  CrystalGroup group;
};

// { name?, lattice: <lattice>, generators: [ { B: [[ints]], b: [rationals] } ] }
LoadedCrystal load_crystal_file(const std::string& path);

// { name?, ambient_dimension, strata: [ { dimension, count, length?,
//   isotropy, effective_action? } ] }
SingularFixture load_fixture_file(const std::string& path);

// rational literal "a/b" or "a"
Rat parse_rational(const std::string& s);

// '*'-separated product of factors: a rational, "pi", "pi^<p>", "sqrt(<s>)"
// or "<r>/sqrt(<s>)"; must come out positive
SymValue parse_size(const std::string& s);

}  // namespace orbispec

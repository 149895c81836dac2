#pragma once

#include <string>
#include <vector>

namespace orbispec {

/**
 * Finitely presented group: generator count plus relator words.  A relator
 * is a list of nonzero signed 1-based generator indices (e.g. {1,2,-1,-2}
 * for the commutator [x1,x2]).  Free and free-abelian presentations carry a
 * structure flag so enumeration can use the matching fast path.
 */
struct Presentation {
  enum class Kind { Free, FreeAbelian, General };

  int ngens = 0;
  std::vector<std::vector<int>> relators;
  Kind kind = Kind::General;
  std::string name;

  static Presentation free_group(int l);
  static Presentation free_abelian(int l);
  static Presentation finite_cyclic(long p);  // one relator x1^p
  static Presentation from_relators(int ngens, std::vector<std::vector<int>> relators,
                                    std::string name = "");

  // "Z", "Z^3", "F2", "Zp:5" or "file:<path>" (JSON presentation file)
  static Presentation parse(const std::string& sp);

  void validate() const;  // throws std::invalid_argument on malformed relators

  // highest generator index referenced by a relator (1-based), 0 if none
  int max_gen_of_relator(size_t r) const;
};

}  // namespace orbispec

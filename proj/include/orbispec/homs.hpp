#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "orbispec/group.hpp"
#include "orbispec/presentation.hpp"

namespace orbispec {

/**
 * Conjugation class of homomorphisms Gamma -> G: the orbit of an image tuple
 * (one entry per generator) under simultaneous conjugation.  rep is the
 * lexicographically least tuple of the orbit.
 */
struct HomClass {
  std::vector<int> rep;
  long long class_size = 1;
};

struct HomEnumeration {
  long long total = 0;  // |HOM(Gamma, G)|
  std::vector<HomClass> classes;
};

namespace detail {

template <GroupTable G>
bool relator_holds(const G& g, const std::vector<int>& word, const std::vector<int>& img) {
  int acc = 0;  // identity
  for (int s : word) {
    int x = img[static_cast<size_t>(std::abs(s)) - 1];
    if (s < 0) x = g.inv(x);
    acc = g.mult(acc, x);
  }
  return acc == 0;
}

// enumerate all image tuples satisfying the relators, in lexicographic
// order, calling fn on each; relators are checked as soon as every
// generator they reference has been assigned
template <GroupTable G, class Fn>
void for_each_hom(const G& g, const Presentation& pres, long long budget, Fn&& fn) {
  int n = g.order(), l = pres.ngens;
  // relators grouped by the depth at which they become checkable
  std::vector<std::vector<size_t>> check_at(static_cast<size_t>(l) + 1);
  for (size_t r = 0; r < pres.relators.size(); ++r)
    check_at[static_cast<size_t>(pres.max_gen_of_relator(r))].push_back(r);
  std::vector<int> img(static_cast<size_t>(l), 0);
  long long examined = 0;
  // iterative backtracking over assignments img[0..l-1]
  int depth = 0;
  std::vector<int> choice(static_cast<size_t>(l), 0);
  while (depth >= 0) {
    if (depth == l) {
      fn(img);
      --depth;
      continue;
    }
    bool advanced = false;
    while (choice[depth] < n) {
      if (++examined > budget)
        throw BudgetExceeded("hom enumeration budget exhausted");
      img[depth] = choice[depth]++;
      bool ok = true;
      for (size_t r : check_at[static_cast<size_t>(depth) + 1])
        if (!relator_holds(g, pres.relators[r], img)) { ok = false; break; }
      if (ok) {
        ++depth;
        if (depth < l) choice[depth] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) --depth;
  }
}

// commuting-tuple fast path for free abelian Gamma: entry k ranges over the
// intersection of the centralizers of the earlier entries
template <GroupTable G, class Fn>
void for_each_abelian_hom(const G& g, int l, long long budget, Fn&& fn) {
  int n = g.order();
  std::vector<std::vector<int>> cent(static_cast<size_t>(l) + 1);
  cent[0].resize(n);
  for (int i = 0; i < n; ++i) cent[0][i] = i;
  std::vector<int> img(static_cast<size_t>(l), 0);
  long long examined = 0;
  std::vector<size_t> pos(static_cast<size_t>(l), 0);
  int depth = 0;
  while (depth >= 0) {
    if (depth == l) {
      fn(img);
      --depth;
      continue;
    }
    const std::vector<int>& avail = cent[depth];
    if (pos[depth] < avail.size()) {
      if (++examined > budget) throw BudgetExceeded("hom enumeration budget exhausted");
      int x = avail[pos[depth]++];
      img[depth] = x;
      // refine the running centralizer
      std::vector<int> next;
      next.reserve(avail.size());
      for (int h : avail)
        if (g.mult(h, x) == g.mult(x, h)) next.push_back(h);
      cent[depth + 1] = std::move(next);
      ++depth;
      if (depth < l) pos[depth] = 0;
    } else {
      --depth;
    }
  }
}

inline bool can_encode(int l, int order) {
  return l <= 4 && order < (1 << 16);
}

inline uint64_t encode_tuple(const std::vector<int>& img) {
  uint64_t k = 0;
  for (size_t i = 0; i < img.size(); ++i) k |= static_cast<uint64_t>(img[i]) << (16 * i);
  return k;
}

}  // namespace detail

template <GroupTable G>
long long hom_count(const G& g, const Presentation& pres, long long budget = 100000000) {
  long long total = 0;
  auto count = [&](const std::vector<int>&) { ++total; };
  if (pres.kind == Presentation::Kind::FreeAbelian)
    detail::for_each_abelian_hom(g, pres.ngens, budget, count);
  else
    detail::for_each_hom(g, pres, budget, count);
  return total;
}

/**
 * All homomorphism classes Gamma -> G up to simultaneous conjugation.  For
 * abelian G every class is a singleton; otherwise orbits are expanded
 * explicitly and each class reports its lexicographically least tuple and
 * orbit size (which always divides the group order).
 */
template <GroupTable G>
HomEnumeration hom_classes(const G& g, const Presentation& pres,
                           long long budget = 100000000) {
  HomEnumeration out;
  bool abelian = table_is_abelian(g);
  int n = g.order();
  bool small = detail::can_encode(pres.ngens, n);
  std::set<uint64_t> seen_small;
  std::set<std::vector<int>> seen_big;
  auto visit = [&](const std::vector<int>& img) {
    ++out.total;
    if (abelian) {
      out.classes.push_back({img, 1});
      return;
    }
    if (small ? seen_small.count(detail::encode_tuple(img)) > 0
              : seen_big.count(img) > 0)
      return;
    // expand the conjugation orbit
    std::set<std::vector<int>> orbit;
    std::vector<int> conj(img.size());
    for (int h = 0; h < n; ++h) {
      for (size_t i = 0; i < img.size(); ++i)
        conj[i] = g.mult(g.mult(h, img[i]), g.inv(h));
      orbit.insert(conj);
    }
    for (const std::vector<int>& t : orbit) {
      if (small)
        seen_small.insert(detail::encode_tuple(t));
      else
        seen_big.insert(t);
    }
    HomClass cls;
    cls.rep = *orbit.begin();  // lexicographically least
    cls.class_size = static_cast<long long>(orbit.size());
    if (n % cls.class_size != 0)
      throw std::logic_error("hom_classes: orbit size does not divide group order");
    out.classes.push_back(std::move(cls));
  };
  if (pres.kind == Presentation::Kind::FreeAbelian)
    detail::for_each_abelian_hom(g, pres.ngens, budget, visit);
  else
    detail::for_each_hom(g, pres, budget, visit);
  return out;
}

// stabilizer of an image tuple under simultaneous conjugation
template <GroupTable G>
std::vector<int> hom_stabilizer(const G& g, const std::vector<int>& img) {
  return centralizer_of_set(g, img);
}

/**
 * Class count for a direct product G x H: classes correspond to pairs, so
 * the count is the product of the two class counts.
 */
template <GroupTable A, GroupTable B>
long long product_class_count(const A& a, const B& b, const Presentation& pres,
                              long long budget = 100000000) {
  return static_cast<long long>(hom_classes(a, pres, budget).classes.size()) *
         static_cast<long long>(hom_classes(b, pres, budget).classes.size());
}

}  // namespace orbispec

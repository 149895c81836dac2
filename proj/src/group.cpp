#include "orbispec/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbispec {

GroupElement GroupElement::perm(std::vector<int> img) {
  GroupElement g;
  g.kind_ = ElementKind::Perm;
  g.n_ = static_cast<int>(img.size());
  std::vector<bool> hit(img.size(), false);
  for (int v : img) {
    if (v < 0 || v >= g.n_ || hit[v]) throw std::invalid_argument("perm: not a permutation");
    hit[v] = true;
  }
  g.img_ = std::move(img);
  return g;
}

GroupElement GroupElement::signed_perm(std::vector<int> img, std::vector<int> sgn) {
  GroupElement g = perm(std::move(img));
  g.kind_ = ElementKind::SignedPerm;
  if (sgn.size() != g.img_.size()) throw std::invalid_argument("signed_perm: size mismatch");
  for (int s : sgn)
    if (s != 1 && s != -1) throw std::invalid_argument("signed_perm: signs must be +-1");
  g.sgn_ = std::move(sgn);
  return g;
}

GroupElement GroupElement::signed_diag(const std::vector<int>& sgn) {
  std::vector<int> img(sgn.size());
  std::iota(img.begin(), img.end(), 0);
  return signed_perm(std::move(img), sgn);
}

GroupElement GroupElement::sign_flips(int n, const std::vector<int>& flips) {
  std::vector<int> sgn(n, 1);
  for (int i : flips) {
    if (i < 0 || i >= n) throw std::invalid_argument("sign_flips: index out of range");
    sgn[i] = -1;
  }
  return signed_diag(sgn);
}

GroupElement GroupElement::matrix(RatMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("matrix element: not square");
  GroupElement g;
  g.kind_ = ElementKind::Matrix;
  g.n_ = m.rows;
  g.mat_ = std::move(m);
  return g;
}

GroupElement GroupElement::identity(ElementKind kind, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  switch (kind) {
    case ElementKind::Perm:
      return perm(std::move(img));
    case ElementKind::SignedPerm:
      return signed_perm(std::move(img), std::vector<int>(degree, 1));
    case ElementKind::Matrix:
      return matrix(RatMatrix::identity(degree));
  }
  throw std::logic_error("identity: bad kind");
}

bool GroupElement::is_identity() const {
  switch (kind_) {
    case ElementKind::Perm:
    case ElementKind::SignedPerm:
      for (int i = 0; i < n_; ++i)
        if (img_[i] != i) return false;
      for (int s : sgn_)
        if (s != 1) return false;
      return true;
    case ElementKind::Matrix:
      return mat_ == RatMatrix::identity(n_);
  }
  return false;
}

GroupElement GroupElement::to_signed() const {
  if (kind_ == ElementKind::SignedPerm) return *this;
  if (kind_ != ElementKind::Perm) throw std::logic_error("to_signed: matrix element");
  GroupElement g = *this;
  g.kind_ = ElementKind::SignedPerm;
  g.sgn_.assign(n_, 1);
  return g;
}

GroupElement GroupElement::compose(const GroupElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("compose: degree mismatch");
  if (kind_ == ElementKind::Matrix || o.kind_ == ElementKind::Matrix)
    return matrix(mat_mul(to_matrix(), o.to_matrix()));
  if (kind_ == ElementKind::Perm && o.kind_ == ElementKind::Perm) {
    std::vector<int> img(n_);
    for (int i = 0; i < n_; ++i) img[i] = img_[o.img_[i]];
    return perm(std::move(img));
  }
  GroupElement a = to_signed(), b = o.to_signed();
  std::vector<int> img(n_), sgn(n_);
  for (int i = 0; i < n_; ++i) {
    img[i] = a.img_[b.img_[i]];
    sgn[i] = b.sgn_[i] * a.sgn_[b.img_[i]];
  }
  return signed_perm(std::move(img), std::move(sgn));
}

GroupElement GroupElement::inverse() const {
  switch (kind_) {
    case ElementKind::Perm: {
      std::vector<int> img(n_);
      for (int i = 0; i < n_; ++i) img[img_[i]] = i;
      return perm(std::move(img));
    }
    case ElementKind::SignedPerm: {
      std::vector<int> img(n_), sgn(n_);
      for (int i = 0; i < n_; ++i) {
        img[img_[i]] = i;
        sgn[img_[i]] = sgn_[i];
      }
      return signed_perm(std::move(img), std::move(sgn));
    }
    case ElementKind::Matrix: {
      auto inv = rat_inverse(mat_);
      if (!inv) throw std::invalid_argument("inverse: singular matrix");
      return matrix(*inv);
    }
  }
  throw std::logic_error("inverse: bad kind");
}

RatMatrix GroupElement::to_matrix() const {
  if (kind_ == ElementKind::Matrix) return mat_;
  RatMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    m.at(img_[i], i) = (kind_ == ElementKind::SignedPerm) ? Rat(sgn_[i]) : Rat(1);
  return m;
}

std::vector<Rat> GroupElement::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("apply: size mismatch");
  if (kind_ == ElementKind::Matrix) return mat_apply(mat_, v);
  std::vector<Rat> w(n_, Rat(0));
  for (int i = 0; i < n_; ++i)
    w[img_[i]] = (kind_ == ElementKind::SignedPerm && sgn_[i] == -1) ? -v[i] : v[i];
  return w;
}

Rat GroupElement::trace() const {
  Rat t = 0;
  switch (kind_) {
    case ElementKind::Perm:
      for (int i = 0; i < n_; ++i)
        if (img_[i] == i) t += 1;
      return t;
    case ElementKind::SignedPerm:
      for (int i = 0; i < n_; ++i)
        if (img_[i] == i) t += sgn_[i];
      return t;
    case ElementKind::Matrix:
      for (int i = 0; i < n_; ++i) t += mat_.at(i, i);
      return t;
  }
  return t;
}

bool GroupElement::operator==(const GroupElement& o) const {
  if (kind_ != o.kind_ || n_ != o.n_) return false;
  return img_ == o.img_ && sgn_ == o.sgn_ && mat_ == o.mat_;
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  if (n_ != o.n_) return n_ < o.n_;
  if (img_ != o.img_) return img_ < o.img_;
  if (sgn_ != o.sgn_) return sgn_ < o.sgn_;
  return std::lexicographical_compare(mat_.a.begin(), mat_.a.end(), o.mat_.a.begin(),
                                      o.mat_.a.end());
}

std::string GroupElement::describe() const {
  if (is_identity()) return "id";
  std::ostringstream os;
  if (kind_ == ElementKind::SignedPerm) {
    bool pure_diag = true;
    for (int i = 0; i < n_; ++i)
      if (img_[i] != i) { pure_diag = false; break; }
    if (pure_diag) {
      os << "neg{";
      bool first = true;
      for (int i = 0; i < n_; ++i)
        if (sgn_[i] == -1) {
          if (!first) os << ",";
          os << (i + 1);
          first = false;
        }
      os << "}";
      return os.str();
    }
  }
  if (kind_ != ElementKind::Matrix) {
    // cycle notation, 1-based; signed entries marked with '
    std::vector<bool> seen(n_, false);
    bool printed = false;
    for (int i = 0; i < n_; ++i) {
      if (seen[i] || (img_[i] == i && (sgn_.empty() || sgn_[i] == 1))) continue;
      if (img_[i] == i) {
        os << "(" << (i + 1) << "')";
        seen[i] = true;
        printed = true;
        continue;
      }
      os << "(";
      int j = i;
      bool first = true;
      do {
        seen[j] = true;
        if (!first) os << " ";
        os << (j + 1);
        if (!sgn_.empty() && sgn_[j] == -1) os << "'";
        first = false;
        j = img_[j];
      } while (j != i);
      os << ")";
      printed = true;
    }
    if (!printed) os << "id";
    return os.str();
  }
  os << "mat" << n_ << "[";
  for (int i = 0; i < n_ && i < 2; ++i)
    for (int j = 0; j < n_ && j < 2; ++j) os << rat_to_string(mat_.at(i, j)) << (i == 1 && j == 1 ? "" : ",");
  os << (n_ > 2 ? "...]" : "]");
  return os.str();
}

FiniteGroup FiniteGroup::generate(std::vector<GroupElement> gens, long long cap) {
  if (gens.empty()) throw std::invalid_argument("generate: no generators");
  int degree = gens[0].degree();
  bool any_matrix = false, any_signed = false;
  for (const GroupElement& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generate: degree mismatch");
    any_matrix |= g.kind() == ElementKind::Matrix;
    any_signed |= g.kind() == ElementKind::SignedPerm;
  }
  // normalize all generators to a common kind
  ElementKind kind = any_matrix   ? ElementKind::Matrix
                     : any_signed ? ElementKind::SignedPerm
                                  : ElementKind::Perm;
  for (GroupElement& g : gens)
    if (g.kind() != kind)
      g = (kind == ElementKind::Matrix)
              ? GroupElement::matrix(g.to_matrix())
              : GroupElement::signed_perm(g.perm_images(),
                                          std::vector<int>(degree, 1));

  FiniteGroup grp;
  grp.degree_ = degree;
  GroupElement id = GroupElement::identity(kind, degree);
  grp.elems_.push_back(id);
  grp.index_.emplace(id, 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const GroupElement& g : gens) {
      GroupElement next = grp.elems_[cur].compose(g);
      if (grp.index_.count(next)) continue;
      if (static_cast<long long>(grp.elems_.size()) >= cap)
        throw BudgetExceeded("group generation exceeded element cap");
      int idx = static_cast<int>(grp.elems_.size());
      grp.index_.emplace(next, idx);
      grp.elems_.push_back(std::move(next));
      queue.push_back(idx);
    }
  }
  for (const GroupElement& g : gens) grp.gen_idx_.push_back(grp.index_.at(g));
  grp.finish();
  return grp;
}

FiniteGroup FiniteGroup::trivial(ElementKind kind, int degree) {
  return generate({GroupElement::identity(kind, degree)});
}

void FiniteGroup::finish() {
  int n = order();
  inv_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (inv_[i] >= 0) continue;
    int j = index_.at(elems_[i].inverse());
    inv_[i] = j;
    inv_[j] = i;
  }
  if (n <= 1024) {
    table_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table_[i][j] = index_.at(elems_[i].compose(elems_[j]));
  }
}

int FiniteGroup::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

int FiniteGroup::mult(int i, int j) const {
  if (!table_.empty()) return table_[i][j];
  return index_.at(elems_[i].compose(elems_[j]));
}

FiniteGroup cyclic_perm_group(int k) {
  if (k < 1) throw std::invalid_argument("cyclic_perm_group: k must be >= 1");
  if (k == 1) return FiniteGroup::trivial(ElementKind::Perm, 1);
  std::vector<int> img(k);
  for (int i = 0; i < k; ++i) img[i] = (i + 1) % k;
  return FiniteGroup::generate({GroupElement::perm(img)});
}

FiniteGroup dihedral_group_6() {
  return FiniteGroup::generate(
      {GroupElement::perm({1, 2, 0}), GroupElement::perm({1, 0, 2})});
}

FiniteGroup klein_four_perm_group() {
  return FiniteGroup::generate(
      {GroupElement::perm({1, 0, 3, 2}), GroupElement::perm({2, 3, 0, 1})});
}

namespace {

// regular permutation action of an abstract group given by its elements and
// multiplication closure
FiniteGroup regular_from_table(const std::vector<std::vector<int>>& mult_of,
                               const std::vector<int>& gens) {
  int n = static_cast<int>(mult_of.size());
  std::vector<GroupElement> perm_gens;
  for (int g : gens) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = mult_of[g][x];
    perm_gens.push_back(GroupElement::perm(img));
  }
  return FiniteGroup::generate(perm_gens);
}

}  // namespace

FiniteGroup heisenberg_mod_p_regular(int p) {
  // upper unitriangular 3x3 over Z_p; element = (a, b, c) with
  // (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b')
  int n = p * p * p;
  auto code = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<std::vector<int>> mult_of(n, std::vector<int>(n));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              mult_of[code(a, b, c)][code(a2, b2, c2)] =
                  code((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
  return regular_from_table(mult_of, {code(1, 0, 0), code(0, 1, 0)});
}

FiniteGroup elementary_abelian_regular(int p, int rank) {
  int n = 1;
  for (int i = 0; i < rank; ++i) n *= p;
  std::vector<std::vector<int>> mult_of(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int z = 0, base = 1, xr = x, yr = y;
      for (int i = 0; i < rank; ++i) {
        z += ((xr % p + yr % p) % p) * base;
        base *= p;
        xr /= p;
        yr /= p;
      }
      mult_of[x][y] = z;
    }
  std::vector<int> gens;
  int base = 1;
  for (int i = 0; i < rank; ++i) {
    gens.push_back(base);
    base *= p;
  }
  return regular_from_table(mult_of, gens);
}

}  // namespace orbispec

#include "core/algebra.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace symcone {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2 = 0.7071067811865476;
}  // namespace

int block_dim(const Block& b) {
  return b.kind == BlockKind::Sym ? b.size * (b.size + 1) / 2 : b.size;
}

int block_rank(const Block& b) { return b.kind == BlockKind::Sym ? b.size : 2; }

Algebra Algebra::sym(int n) {
  if (n < 1) throw StructuralError("Algebra::sym: n must be >= 1");
  Algebra a;
  a.blocks_ = {Block{BlockKind::Sym, n}};
  a.offsets_ = {0};
  a.dim_ = block_dim(a.blocks_[0]);
  a.rank_ = n;
  return a;
}

Algebra Algebra::spin(int d) {
  if (d < 2) throw StructuralError("Algebra::spin: d must be >= 2");
  Algebra a;
  a.blocks_ = {Block{BlockKind::Spin, d}};
  a.offsets_ = {0};
  a.dim_ = d;
  a.rank_ = 2;
  return a;
}

Algebra Algebra::direct_sum(const std::vector<Algebra>& parts) {
  if (parts.empty())
    throw StructuralError("Algebra::direct_sum: needs at least one part");
  Algebra a;
  for (const Algebra& p : parts)
    for (const Block& b : p.blocks_) {
      a.offsets_.push_back(a.dim_);
      a.blocks_.push_back(b);
      a.dim_ += block_dim(b);
      a.rank_ += block_rank(b);
    }
  return a;
}

Element Algebra::identity() const {
  Vec e = Vec::Zero(dim_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const Block& b = blocks_[k];
    const int off = offsets_[k];
    if (b.kind == BlockKind::Sym) {
      e.segment(off, b.size).setOnes();
    } else {
      e[off] = kSqrt2;
    }
  }
  return Element(*this, std::move(e));
}

std::string Algebra::describe() const {
  std::ostringstream os;
  if (blocks_.size() > 1) os << "sum:";
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k > 0) os << "+";
    const Block& b = blocks_[k];
    os << (b.kind == BlockKind::Sym ? "sym:" : "spin:") << b.size;
  }
  return os.str();
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.blocks_.size() != b.blocks_.size()) return false;
  for (std::size_t k = 0; k < a.blocks_.size(); ++k)
    if (a.blocks_[k].kind != b.blocks_[k].kind ||
        a.blocks_[k].size != b.blocks_[k].size)
      return false;
  return true;
}

Element::Element(Algebra algebra, Vec coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim())
    throw StructuralError("Element: coordinate length does not match algebra");
}

void require_same_algebra(const Element& x, const Element& y,
                          const char* where) {
  if (x.algebra() != y.algebra())
    throw StructuralError(std::string(where) +
                          ": elements belong to different algebras");
}

Element operator+(const Element& x, const Element& y) {
  require_same_algebra(x, y, "operator+");
  return Element(x.algebra(), x.coords() + y.coords());
}

Element operator-(const Element& x, const Element& y) {
  require_same_algebra(x, y, "operator-");
  return Element(x.algebra(), x.coords() - y.coords());
}

Element operator-(const Element& x) {
  return Element(x.algebra(), -x.coords());
}

Element operator*(double t, const Element& x) {
  return Element(x.algebra(), t * x.coords());
}

double inner(const Element& x, const Element& y) {
  require_same_algebra(x, y, "inner");
  return x.coords().dot(y.coords());
}

double norm(const Element& x) { return x.coords().norm(); }

LinMap identity_map(const Algebra& a) {
  return LinMap{a, Mat::Identity(a.dim(), a.dim())};
}

Element apply(const LinMap& m, const Element& x) {
  if (m.algebra != x.algebra())
    throw StructuralError("apply: operator and element algebras differ");
  return Element(x.algebra(), m.matrix * x.coords());
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (f.algebra != g.algebra)
    throw StructuralError("compose: operator algebras differ");
  return LinMap{f.algebra, f.matrix * g.matrix};
}

Mat sym_block_to_matrix(int n, Eigen::Ref<const Vec> v) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = v[i];
  int k = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) m(i, j) = m(j, i) = v[k] * kInvSqrt2;
  return m;
}

void sym_block_from_matrix(int n, const Mat& m, Eigen::Ref<Vec> v) {
  for (int i = 0; i < n; ++i) v[i] = m(i, i);
  int k = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      v[k] = (m(i, j) + m(j, i)) * kInvSqrt2;
}

}  // namespace symcone

#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "core/errors.hpp"

namespace symcone {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class BlockKind { Sym, Spin };

// One irreducible factor: Sym(n) is the algebra of real symmetric n x n
// matrices (rank n), Spin(d) the d-dimensional spin factor (rank 2).
struct Block {
  BlockKind kind;
  int size;  // n for Sym (>= 1), d for Spin (>= 2)
};

int block_dim(const Block& b);
int block_rank(const Block& b);

class Element;

// Descriptor of a Euclidean Jordan algebra: a flattened list of irreducible
// blocks. Element coordinates live in an orthonormal basis of the trace
// inner product <x,y> = trace(x o y), so the coordinate dot product is the
// inner product and operator adjoints are plain matrix transposes.
//
// Basis layout per block:
//   Sym(n):  diagonal entries first, then sqrt(2)-scaled off-diagonals
//            (i < j) in row-major order;
//   Spin(d): sqrt(2) * (x0, xbar).
class Algebra {
 public:
  // Empty descriptor (dim 0); useful only as a placeholder before assignment.
  Algebra() = default;

  static Algebra sym(int n);
  static Algebra spin(int d);
  // Direct sums are flattened on construction; the block list is canonical.
  static Algebra direct_sum(const std::vector<Algebra>& parts);

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  int block_offset(std::size_t i) const { return offsets_[i]; }
  bool irreducible() const { return blocks_.size() == 1; }

  Element identity() const;

  // Compact form: "sym:3", "spin:4", "sum:sym:3+spin:4".
  std::string describe() const;

  friend bool operator==(const Algebra& a, const Algebra& b);
  friend bool operator!=(const Algebra& a, const Algebra& b) {
    return !(a == b);
  }

 private:
  std::vector<Block> blocks_;
  std::vector<int> offsets_;
  int dim_ = 0;
  int rank_ = 0;
};

// A point of the algebra's coordinate space V. Immutable by convention:
// every operation returns a fresh value.
class Element {
 public:
  Element() = default;
  Element(Algebra algebra, Vec coords);

  const Algebra& algebra() const { return algebra_; }
  const Vec& coords() const { return coords_; }

 private:
  Algebra algebra_;
  Vec coords_;
};

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator-(const Element& x);
Element operator*(double t, const Element& x);

// Trace inner product; equals the coordinate dot product in this basis.
double inner(const Element& x, const Element& y);
double norm(const Element& x);

// Dense linear operator on V in the orthonormal coordinate basis.
struct LinMap {
  Algebra algebra;
  Mat matrix;
};

LinMap identity_map(const Algebra& a);
Element apply(const LinMap& m, const Element& x);
// compose(f, g) applies g first.
LinMap compose(const LinMap& f, const LinMap& g);

void require_same_algebra(const Element& x, const Element& y,
                          const char* where);

// Dense symmetric-matrix view of one Sym(n) coordinate block.
Mat sym_block_to_matrix(int n, Eigen::Ref<const Vec> v);
void sym_block_from_matrix(int n, const Mat& m, Eigen::Ref<Vec> v);

}  // namespace symcone

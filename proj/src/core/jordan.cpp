#include "core/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "core/rng.hpp"

namespace symcone {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2 = 0.7071067811865476;

void spin_product(Eigen::Ref<const Vec> u, Eigen::Ref<const Vec> v,
                  Eigen::Ref<Vec> out) {
  const int d = static_cast<int>(u.size());
  const double u0 = u[0], v0 = v[0];
  out[0] = (u0 * v0 + u.tail(d - 1).dot(v.tail(d - 1))) * kInvSqrt2;
  out.tail(d - 1) = (u0 * v.tail(d - 1) + v0 * u.tail(d - 1)) * kInvSqrt2;
}

// Eigenvalues of a spin block element, larger one first.
std::pair<double, double> spin_eigenvalues(Eigen::Ref<const Vec> u) {
  const double s = u.tail(u.size() - 1).norm();
  return {(u[0] + s) * kInvSqrt2, (u[0] - s) * kInvSqrt2};
}

std::string describe_guard_violation(double lambda,
                                     const std::string& requirement) {
  std::ostringstream os;
  os << "spectral_map: eigenvalue " << lambda << " violates requirement '"
     << requirement << "'";
  return os.str();
}

}  // namespace

Element jordan_product(const Element& x, const Element& y) {
  require_same_algebra(x, y, "jordan_product");
  const Algebra& a = x.algebra();
  Vec out(a.dim());
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const Block& b = a.blocks()[k];
    const int off = a.block_offset(k);
    const int d = block_dim(b);
    if (b.kind == BlockKind::Sym) {
      const Mat mx = sym_block_to_matrix(b.size, x.coords().segment(off, d));
      const Mat my = sym_block_to_matrix(b.size, y.coords().segment(off, d));
      sym_block_from_matrix(b.size, 0.5 * (mx * my + my * mx),
                            out.segment(off, d));
    } else {
      spin_product(x.coords().segment(off, d), y.coords().segment(off, d),
                   out.segment(off, d));
    }
  }
  return Element(a, std::move(out));
}

LinMap mult_op(const Element& x) {
  const Algebra& a = x.algebra();
  Mat m = Mat::Zero(a.dim(), a.dim());
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const Block& b = a.blocks()[k];
    const int off = a.block_offset(k);
    const int d = block_dim(b);
    if (b.kind == BlockKind::Sym) {
      const int n = b.size;
      const Mat mx = sym_block_to_matrix(n, x.coords().segment(off, d));
      Vec basis = Vec::Zero(d);
      for (int j = 0; j < d; ++j) {
        basis[j] = 1.0;
        const Mat e = sym_block_to_matrix(n, basis);
        sym_block_from_matrix(n, 0.5 * (mx * e + e * mx),
                              m.block(off, off, d, d).col(j));
        basis[j] = 0.0;
      }
    } else {
      const auto u = x.coords().segment(off, d);
      auto blk = m.block(off, off, d, d);
      blk = u[0] * kInvSqrt2 * Mat::Identity(d, d);
      blk.col(0).tail(d - 1) = u.tail(d - 1) * kInvSqrt2;
      blk.row(0).tail(d - 1) = u.tail(d - 1).transpose() * kInvSqrt2;
    }
  }
  return LinMap{a, std::move(m)};
}

LinMap quadratic_rep(const Element& x) {
  const LinMap l = mult_op(x);
  const LinMap lsq = mult_op(jordan_product(x, x));
  return LinMap{x.algebra(), 2.0 * (l.matrix * l.matrix) - lsq.matrix};
}

Element quadratic_apply(const Element& x, const Element& y) {
  require_same_algebra(x, y, "quadratic_apply");
  const Element xy = jordan_product(x, y);
  return 2.0 * jordan_product(x, xy) -
         jordan_product(jordan_product(x, x), y);
}

Spectral spectral(const Element& x) {
  const Algebra& a = x.algebra();
  std::vector<std::pair<double, Vec>> pairs;
  pairs.reserve(a.rank());
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const Block& b = a.blocks()[k];
    const int off = a.block_offset(k);
    const int d = block_dim(b);
    if (b.kind == BlockKind::Sym) {
      const int n = b.size;
      Eigen::SelfAdjointEigenSolver<Mat> es(
          sym_block_to_matrix(n, x.coords().segment(off, d)));
      for (int i = 0; i < n; ++i) {
        const Vec q = es.eigenvectors().col(i);
        Vec c = Vec::Zero(a.dim());
        sym_block_from_matrix(n, q * q.transpose(), c.segment(off, d));
        pairs.emplace_back(es.eigenvalues()[i], std::move(c));
      }
    } else {
      const auto u = x.coords().segment(off, d);
      const double s = u.tail(d - 1).norm();
      Vec dir = Vec::Zero(d - 1);
      if (s > 0.0)
        dir = u.tail(d - 1) / s;
      else
        dir[0] = 1.0;  // degenerate spectrum: fixed first bar direction
      const auto [lp, lm] = spin_eigenvalues(u);
      Vec cp = Vec::Zero(a.dim()), cm = Vec::Zero(a.dim());
      cp[off] = kInvSqrt2;
      cp.segment(off + 1, d - 1) = dir * kInvSqrt2;
      cm[off] = kInvSqrt2;
      cm.segment(off + 1, d - 1) = -dir * kInvSqrt2;
      pairs.emplace_back(lp, std::move(cp));
      pairs.emplace_back(lm, std::move(cm));
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& p, const auto& q) { return p.first > q.first; });
  Spectral out;
  out.eigenvalues.resize(static_cast<int>(pairs.size()));
  out.frame.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.eigenvalues[static_cast<int>(i)] = pairs[i].first;
    out.frame.emplace_back(a, std::move(pairs[i].second));
  }
  return out;
}

Vec eigenvalues_of(const Element& x) {
  const Algebra& a = x.algebra();
  Vec all(a.rank());
  int pos = 0;
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const Block& b = a.blocks()[k];
    const int off = a.block_offset(k);
    const int d = block_dim(b);
    if (b.kind == BlockKind::Sym) {
      Eigen::SelfAdjointEigenSolver<Mat> es(
          sym_block_to_matrix(b.size, x.coords().segment(off, d)),
          Eigen::EigenvaluesOnly);
      all.segment(pos, b.size) = es.eigenvalues();
      pos += b.size;
    } else {
      const auto [lp, lm] = spin_eigenvalues(x.coords().segment(off, d));
      all[pos++] = lp;
      all[pos++] = lm;
    }
  }
  std::sort(all.data(), all.data() + all.size(), std::greater<double>());
  return all;
}

double min_eigenvalue(const Element& x) {
  const Vec ev = eigenvalues_of(x);
  return ev[ev.size() - 1];
}

Element spectral_map(const Element& x, const std::function<double(double)>& f,
                     const EigenGuard& guard) {
  const Algebra& a = x.algebra();
  Vec out(a.dim());
  const auto check = [&](double lambda) {
    if (!guard.ok(lambda))
      throw DomainError(describe_guard_violation(lambda, guard.requirement));
  };
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const Block& b = a.blocks()[k];
    const int off = a.block_offset(k);
    const int d = block_dim(b);
    if (b.kind == BlockKind::Sym) {
      const int n = b.size;
      Eigen::SelfAdjointEigenSolver<Mat> es(
          sym_block_to_matrix(n, x.coords().segment(off, d)));
      Vec fl(n);
      for (int i = 0; i < n; ++i) {
        check(es.eigenvalues()[i]);
        fl[i] = f(es.eigenvalues()[i]);
      }
      sym_block_from_matrix(n,
                            es.eigenvectors() * fl.asDiagonal() *
                                es.eigenvectors().transpose(),
                            out.segment(off, d));
    } else {
      const auto u = x.coords().segment(off, d);
      const double s = u.tail(d - 1).norm();
      const auto [lp, lm] = spin_eigenvalues(u);
      check(lp);
      check(lm);
      const double fp = f(lp), fm = f(lm);
      out[off] = (fp + fm) * kInvSqrt2;
      if (s > 0.0)
        out.segment(off + 1, d - 1) =
            (fp - fm) * kInvSqrt2 / s * u.tail(d - 1);
      else
        out.segment(off + 1, d - 1).setZero();
    }
  }
  return Element(a, std::move(out));
}

Element inverse(const Element& x) {
  return spectral_map(
      x, [](double l) { return 1.0 / l; },
      EigenGuard{[](double l) { return l != 0.0; }, "nonzero"});
}

Element sqrt(const Element& x) {
  return spectral_map(x, [](double l) { return std::sqrt(l); },
                      EigenGuard{[](double l) { return l >= 0.0; }, ">= 0"});
}

Element power(const Element& x, double t) {
  return spectral_map(x, [t](double l) { return std::pow(l, t); },
                      EigenGuard{[](double l) { return l > 0.0; }, "> 0"});
}

Element exp(const Element& x) {
  return spectral_map(x, [](double l) { return std::exp(l); },
                      EigenGuard{[](double) { return true; }, "none"});
}

Element log(const Element& x) {
  return spectral_map(x, [](double l) { return std::log(l); },
                      EigenGuard{[](double l) { return l > 0.0; }, "> 0"});
}

DetTrace det_trace(const Element& x) {
  const Vec ev = eigenvalues_of(x);
  double det = 1.0;
  for (int i = 0; i < ev.size(); ++i) det *= ev[i];
  const Algebra& a = x.algebra();
  double trace = 0.0;
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const Block& b = a.blocks()[k];
    const int off = a.block_offset(k);
    if (b.kind == BlockKind::Sym)
      trace += x.coords().segment(off, b.size).sum();
    else
      trace += kSqrt2 * x.coords()[off];
  }
  return DetTrace{det, trace};
}

bool in_cone(const Element& x, double margin) {
  return min_eigenvalue(x) > margin;
}

Element sample_element(const Algebra& a, std::mt19937_64& rng, double spread) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec z(a.dim());
  for (int i = 0; i < z.size(); ++i) z[i] = spread * gauss(rng);
  return Element(a, std::move(z));
}

Element sample_cone(const Algebra& a, std::mt19937_64& rng, double spread) {
  return exp(sample_element(a, rng, spread));
}

Element sample_cone(const Algebra& a, std::uint64_t seed, double spread) {
  auto rng = substream(seed, "sample_cone");
  return sample_cone(a, rng, spread);
}

Element block_element(const Element& x, std::size_t k) {
  const Algebra& a = x.algebra();
  if (k >= a.block_count())
    throw StructuralError("block_element: component index out of range");
  const Block& b = a.blocks()[k];
  const Algebra single = b.kind == BlockKind::Sym ? Algebra::sym(b.size)
                                                  : Algebra::spin(b.size);
  return Element(single,
                 x.coords().segment(a.block_offset(k), block_dim(b)));
}

}  // namespace symcone

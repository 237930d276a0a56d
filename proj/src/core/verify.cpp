#include "core/verify.hpp"

#include <algorithm>
#include <cmath>

#include "core/geometry.hpp"
#include "core/rng.hpp"

namespace symcone {

namespace {

// Eigendecomposition with rejection of complex or non-positive spectra and
// of near-defective eigenvector bases. Columns of p are unit length.
void real_positive_eigen(const Mat& n, Mat& p, Vec& d) {
  if (n.rows() != n.cols())
    throw StructuralError("factor_nondefective: matrix must be square");
  Eigen::EigenSolver<Mat> es(n);
  if (es.info() != Eigen::Success)
    throw StructuralError("factor_nondefective: eigensolver failed");
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  for (int i = 0; i < n.rows(); ++i)
    if (std::abs(es.eigenvalues()[i].imag()) > 1e-9 * std::max(scale, 1.0))
      throw DomainError("not in K: complex eigenvalue pair detected");
  d = es.eigenvalues().real();
  for (int i = 0; i < d.size(); ++i)
    if (!(d[i] > 0.0))
      throw DomainError("not in K: non-positive eigenvalue " +
                        std::to_string(d[i]));
  p = es.eigenvectors().real();
  for (int i = 0; i < p.cols(); ++i) p.col(i).normalize();
  Eigen::JacobiSVD<Mat> svd(p);
  const double cond = svd.singularValues()(0) /
                      svd.singularValues()(svd.singularValues().size() - 1);
  if (!(cond <= 1e8))
    throw DomainError("factor_nondefective: input is numerically defective "
                      "(eigenvector condition number above 1e8)");
}

Mat transposition(int n, int a, int b) {
  Mat p = Mat::Identity(n, n);
  if (a != b) {
    p(a, a) = p(b, b) = 0.0;
    p(a, b) = p(b, a) = 1.0;
  }
  return p;
}

}  // namespace

Mat psd_sqrt(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  Vec d = es.eigenvalues();
  for (int i = 0; i < d.size(); ++i) d[i] = std::sqrt(std::max(d[i], 0.0));
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

Mat sample_spd(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
  return g * g.transpose() + 0.5 * Mat::Identity(n, n);
}

namespace {

Mat sample_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
  return Eigen::HouseholderQR<Mat>(g).householderQ();
}

}  // namespace

LinMap sample_orthogonal_automorphism(const Algebra& a, std::mt19937_64& rng) {
  Mat m = Mat::Zero(a.dim(), a.dim());
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const Block& b = a.blocks()[k];
    const int off = a.block_offset(k);
    const int d = block_dim(b);
    if (b.kind == BlockKind::Sym) {
      const int n = b.size;
      const Mat q = sample_orthogonal(n, rng);
      Vec basis = Vec::Zero(d);
      for (int j = 0; j < d; ++j) {
        basis[j] = 1.0;
        const Mat e = sym_block_to_matrix(n, basis);
        sym_block_from_matrix(n, q * e * q.transpose(),
                              m.block(off, off, d, d).col(j));
        basis[j] = 0.0;
      }
    } else {
      auto blk = m.block(off, off, d, d);
      blk(0, 0) = 1.0;
      blk.bottomRightCorner(d - 1, d - 1) = sample_orthogonal(d - 1, rng);
    }
  }
  return LinMap{a, std::move(m)};
}

PolarResult polar_decompose(const LinMap& theta) {
  const Algebra& a = theta.algebra;
  if (theta.matrix.rows() != a.dim() || theta.matrix.cols() != a.dim())
    throw StructuralError("polar_decompose: operator size mismatch");
  Eigen::SelfAdjointEigenSolver<Mat> es(theta.matrix.transpose() *
                                        theta.matrix);
  const double top = es.eigenvalues().maxCoeff();
  if (!(es.eigenvalues().minCoeff() > 1e-14 * std::max(top, 1.0)))
    throw StructuralError("polar_decompose: operator is singular");
  // spot check of the automorphism precondition
  if (!in_cone(apply(theta, a.identity()), 0.0) ||
      !in_cone(apply(theta, sample_cone(a, 2654435769u, 0.5)), 0.0))
    throw DomainError(
        "polar_decompose: operator is not a cone automorphism "
        "(a sampled interior point left the cone)");
  Vec root = es.eigenvalues().cwiseSqrt();
  const Mat s =
      es.eigenvectors() * root.asDiagonal() * es.eigenvectors().transpose();
  const Mat s_inv = es.eigenvectors() * root.cwiseInverse().asDiagonal() *
                    es.eigenvectors().transpose();

  const Element se = apply(LinMap{a, s}, a.identity());
  if (!in_cone(se, 0.0))
    throw DomainError(
        "polar_decompose: operator is not a cone automorphism "
        "(S(e) left the cone)");
  const Element w = power(se, -0.5);
  LinMap omega{a, theta.matrix * s_inv};

  const double ortho =
      (omega.matrix.transpose() * omega.matrix - Mat::Identity(a.dim(), a.dim()))
          .norm() /
      std::sqrt(double(a.dim()));
  const Mat reconstruction = omega.matrix * quadratic_rep(inverse(w)).matrix;
  const double recon = (theta.matrix - reconstruction).norm() /
                       theta.matrix.norm();
  return PolarResult{std::move(omega), w, std::max(ortho, recon)};
}

NondefectiveFactors factor_nondefective(const Mat& n) {
  Mat p;
  Vec d;
  real_positive_eigen(n, p, d);
  const Mat p_inv = p.partialPivLu().solve(Mat::Identity(n.rows(), n.cols()));
  NondefectiveFactors f;
  f.x = p * p.transpose();
  f.s = p_inv.transpose() * d.asDiagonal() * p_inv;
  return f;
}

Mat rotation_from(const Mat& n) {
  Mat p;
  Vec d;
  real_positive_eigen(n, p, d);  // validates membership in K
  // N^{-1}(N N^T)^{1/2} is the transpose of the orthogonal polar factor of
  // N; forming it from the SVD keeps the result orthogonal to machine
  // precision even for ill-conditioned N.
  Eigen::JacobiSVD<Mat> svd(n, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixV() * svd.matrixU().transpose();
}

LieSpanReport lie_span_from(int n, const std::vector<Mat>& deltas) {
  if (n < 2) throw StructuralError("lie_span: n must be >= 2");
  const int target = n * (n - 1) / 2;
  Mat stacked(target, static_cast<int>(deltas.size()));
  for (std::size_t s = 0; s < deltas.size(); ++s) {
    const Mat skew = deltas[s].transpose() - deltas[s];
    int row = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        stacked(row++, static_cast<int>(s)) = skew(i, j);
  }
  int rank = 0;
  if (!deltas.empty()) {
    Eigen::JacobiSVD<Mat> svd(stacked);
    const Vec sv = svd.singularValues();
    const double cutoff = 1e-10 * (sv.size() > 0 ? sv[0] : 0.0);
    for (int i = 0; i < sv.size(); ++i)
      if (sv[i] > cutoff && sv[i] > 0.0) ++rank;
  }
  return LieSpanReport{n, static_cast<int>(deltas.size()), rank, target};
}

LieSpanReport lie_span_probe(int n, int samples, std::uint64_t seed) {
  if (samples < 1) throw StructuralError("lie_span_probe: samples must be >= 1");
  std::vector<Mat> deltas;
  deltas.reserve(samples);
  for (int s = 0; s < samples; ++s) {
    auto rng = substream(seed, "lie_span", static_cast<std::uint64_t>(s));
    deltas.push_back(sample_spd(n, rng) * sample_spd(n, rng));
  }
  return lie_span_from(n, deltas);
}

SkewGenerator basis_skew_generator(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw StructuralError("basis_skew_generator: needs 1 <= i < j <= n");
  Mat m = Mat::Identity(n, n);
  // P^{-1} D P for P = [[1,0],[2,1]], D = diag(1/2, 1): exact in doubles.
  m(0, 0) = 0.5;
  m(1, 0) = 1.0;
  m(1, 1) = 1.0;
  const Mat pi = transposition(n, 0, i - 1) * transposition(n, 1, j - 1);
  SkewGenerator g;
  g.delta = pi * m * pi.transpose();
  g.skew = g.delta.transpose() - g.delta;
  Mat p;
  Vec d;
  real_positive_eigen(g.delta, p, d);  // validates membership in K
  return g;
}

double isotropy_certificate(const Mat& m, const std::vector<Mat>& generators,
                            std::uint64_t seed) {
  if (generators.empty())
    throw StructuralError("isotropy_certificate: no generators given");
  const double scale = m.norm();
  double worst = 0.0;
  const auto defect = [&](const Mat& r) {
    return (r * m * r.transpose() - m).norm() / scale;
  };
  for (const Mat& r : generators) worst = std::max(worst, defect(r));
  auto rng = substream(seed, "isotropy_words");
  std::uniform_int_distribution<int> pick_len(2, 4);
  std::uniform_int_distribution<std::size_t> pick_gen(0, generators.size() - 1);
  std::uniform_int_distribution<int> pick_side(0, 1);
  for (int wtrial = 0; wtrial < 50; ++wtrial) {
    Mat word = Mat::Identity(m.rows(), m.cols());
    const int len = pick_len(rng);
    for (int t = 0; t < len; ++t) {
      const Mat& g = generators[pick_gen(rng)];
      word = pick_side(rng) ? Mat(word * g) : Mat(word * g.transpose());
    }
    worst = std::max(worst, defect(word));
  }
  return worst;
}

AlphaReport alpha_mechanism_check(double lambda, const Algebra& algebra,
                                  long trials, double tol,
                                  std::uint64_t seed) {
  if (!(lambda > 0.0))
    throw StructuralError("alpha_mechanism_check: lambda must be > 0");
  if (!algebra.irreducible())
    throw StructuralError("alpha_mechanism_check: needs an irreducible algebra");
  if (trials < 1)
    throw StructuralError("alpha_mechanism_check: trials must be >= 1");
  const double spread = 0.7;
  AlphaReport rep{trials, 0.0, false, false, 0.0, tol};

  const auto violation = [](const Element& x, const Element& y,
                            const Element& ax, const Element& ay) {
    const Element lhs = geometric_mean(inverse(x), y);
    const Element rhs = geometric_mean(inverse(ax), ay);
    return norm(lhs - rhs) / norm(lhs);
  };

  for (long i = 0; i < trials; ++i) {
    auto rng = substream(seed, "alpha", static_cast<std::uint64_t>(i));
    const Element x = sample_cone(algebra, rng, spread);
    const Element y = sample_cone(algebra, rng, spread);
    rep.max_violation = std::max(
        rep.max_violation, violation(x, y, lambda * x, lambda * y));
  }
  rep.scalar_pass = rep.max_violation <= tol;

  // Non-scalar a0 = e + idempotent/2: alpha(x) = P(x^{1/2}) a0 must break the
  // identity on some sampled pair.
  {
    auto rng = substream(seed, "alpha_witness");
    const Element probe = sample_cone(algebra, rng, spread);
    const Element a0 =
        algebra.identity() + 0.5 * spectral(probe).frame.front();
    const auto alpha = [&](const Element& z) {
      return quadratic_apply(sqrt(z), a0);
    };
    for (int i = 0; i < 64 && !rep.witness_found; ++i) {
      const Element x = sample_cone(algebra, rng, spread);
      const Element y = sample_cone(algebra, rng, spread);
      const double v = violation(x, y, alpha(x), alpha(y));
      if (v > 1e-3) {
        rep.witness_found = true;
        rep.witness_violation = v;
      }
    }
  }
  return rep;
}

}  // namespace symcone

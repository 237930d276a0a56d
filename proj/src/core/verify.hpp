#pragma once

#include <cstdint>
#include <vector>

#include "core/barrier.hpp"

namespace symcone {

struct PolarResult {
  LinMap omega;     // orthogonal cone automorphism
  Element w;        // interior point with theta = omega o P(w^{-1})
  double residual;  // max of orthogonality defect and reconstruction error
};

// Factors a cone automorphism theta as omega o F''(w): forms the operator
// square root S = (theta^T theta)^{1/2}, reads w off S(e) = w^{-2}, and sets
// omega = theta o S^{-1}.
PolarResult polar_decompose(const LinMap& theta);

struct NondefectiveFactors {
  Mat x;  // SPD
  Mat s;  // SPD, x * s = input
};

// Splits a diagonalizable matrix with positive real spectrum into a product
// of two SPD factors: X = P P^T, S = P^{-T} D P^{-1} from N = P D P^{-1}
// with unit-length eigenvector columns. Rejects complex or non-positive
// eigenvalues ("not in K") and near-defective inputs.
NondefectiveFactors factor_nondefective(const Mat& n);

// N^{-1} (N N^T)^{1/2}; special-orthogonal for every N in K.
Mat rotation_from(const Mat& n);

struct LieSpanReport {
  int n;
  int samples_used;
  int span_dimension;
  int target;  // n(n-1)/2
};

// Rank of the span of the skew parts Delta^T - Delta inside so(n).
LieSpanReport lie_span_from(int n, const std::vector<Mat>& deltas);

// Same, with Delta sampled as products of random SPD pairs.
LieSpanReport lie_span_probe(int n, int samples, std::uint64_t seed);

struct SkewGenerator {
  Mat delta;  // in K, eigenvalues {1/2, 1, ..., 1}
  Mat skew;   // delta^T - delta; equals E_ij^- up to sign, exactly
};

// Embeds the 2x2 seed P^{-1} D P (P = [[1,0],[2,1]], D = diag(1/2,1)) at
// positions (i, j) via transposition matrices; 1-based, i < j <= n.
SkewGenerator basis_skew_generator(int i, int j, int n);

// Max relative invariance defect |R M R^T - M| / |M| over the generators and
// random words of length <= 4 in them; ~0 certifies invariance, which for a
// full-Lie-span generator set forces M to be scalar.
double isotropy_certificate(const Mat& m, const std::vector<Mat>& generators,
                            std::uint64_t seed = 17);

struct AlphaReport {
  long trials;
  double max_violation;  // scalar map alpha = lambda * id against the
                         // mean-preservation identity
  bool scalar_pass;
  bool witness_found;        // a non-scalar alpha(x) = P(x^{1/2}) a0 breaks it
  double witness_violation;  // violation at the witness pair
  double tol;
};

// Checks the mechanism that pins alpha down to a positive multiple of the
// identity: alpha = lambda*id preserves x^{-1} # y -> alpha(x)^{-1} # alpha(y),
// while alpha(x) = P(x^{1/2}) a0 with non-scalar a0 is caught on a sampled
// witness pair.
AlphaReport alpha_mechanism_check(double lambda, const Algebra& algebra,
                                  long trials, double tol, std::uint64_t seed);

// Random SPD matrix G G^T + 0.5 I with Gaussian G; used by the matrix-land
// probes.
Mat sample_spd(int n, std::mt19937_64& rng);

// Operator square root of a symmetric PSD matrix.
Mat psd_sqrt(const Mat& m);

// Random element of the cone's orthogonal group: per Sym block a conjugation
// X -> Q X Q^T with Haar-ish orthogonal Q, per Spin block a rotation of the
// bar part.
LinMap sample_orthogonal_automorphism(const Algebra& a, std::mt19937_64& rng);

}  // namespace symcone

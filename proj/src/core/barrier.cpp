#include "core/barrier.hpp"

#include <cmath>
#include <cstdio>

#include "core/geometry.hpp"
#include "core/rng.hpp"

namespace symcone {

namespace {

void require_cone(const Element& x, const char* where) {
  if (!in_cone(x, 0.0))
    throw DomainError(std::string(where) + ": argument is not in the cone");
}

void require_spec_algebra(const BarrierSpec& spec, const Element& x,
                          const char* where) {
  if (spec.algebra() != x.algebra())
    throw StructuralError(std::string(where) +
                          ": element does not match the barrier's algebra");
}

// -ln det of one component, summed over its eigenvalues for stability.
double minus_log_det(const Element& xk) {
  const Vec ev = eigenvalues_of(xk);
  double sum = 0.0;
  for (int i = 0; i < ev.size(); ++i) sum -= std::log(ev[i]);
  return sum;
}

}  // namespace

BarrierSpec BarrierSpec::make(Algebra algebra, double c0, Vec weights) {
  if (static_cast<std::size_t>(weights.size()) != algebra.block_count())
    throw StructuralError(
        "BarrierSpec: needs one weight per irreducible component");
  for (int i = 0; i < weights.size(); ++i)
    if (!(weights[i] > 0.0))
      throw StructuralError("BarrierSpec: weights must be positive");
  BarrierSpec s;
  s.nu_ = 0.0;
  for (std::size_t k = 0; k < algebra.block_count(); ++k)
    s.nu_ += weights[static_cast<int>(k)] * block_rank(algebra.blocks()[k]);
  s.algebra_ = std::move(algebra);
  s.c0_ = c0;
  s.weights_ = std::move(weights);
  return s;
}

BarrierSpec BarrierSpec::standard(const Algebra& algebra) {
  return make(algebra, 0.0,
              Vec::Ones(static_cast<int>(algebra.block_count())));
}

double barrier_value(const BarrierSpec& spec, const Element& x) {
  require_spec_algebra(spec, x, "barrier_value");
  require_cone(x, "barrier_value");
  double v = spec.c0();
  for (std::size_t k = 0; k < spec.algebra().block_count(); ++k)
    v += spec.weight(k) * minus_log_det(block_element(x, k));
  return v;
}

Element barrier_gradient(const BarrierSpec& spec, const Element& x) {
  require_spec_algebra(spec, x, "barrier_gradient");
  require_cone(x, "barrier_gradient");
  const Algebra& a = spec.algebra();
  Vec g(a.dim());
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const int off = a.block_offset(k);
    const int d = block_dim(a.blocks()[k]);
    g.segment(off, d) = -spec.weight(k) * inverse(block_element(x, k)).coords();
  }
  return Element(a, std::move(g));
}

LinMap barrier_hessian(const BarrierSpec& spec, const Element& x) {
  require_spec_algebra(spec, x, "barrier_hessian");
  require_cone(x, "barrier_hessian");
  const Algebra& a = spec.algebra();
  Mat h = Mat::Zero(a.dim(), a.dim());
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const int off = a.block_offset(k);
    const int d = block_dim(a.blocks()[k]);
    h.block(off, off, d, d) =
        spec.weight(k) * quadratic_rep(inverse(block_element(x, k))).matrix;
  }
  return LinMap{a, std::move(h)};
}

Element barrier_hessian_apply(const BarrierSpec& spec, const Element& x,
                              const Element& v) {
  require_spec_algebra(spec, x, "barrier_hessian_apply");
  require_same_algebra(x, v, "barrier_hessian_apply");
  require_cone(x, "barrier_hessian_apply");
  const Algebra& a = spec.algebra();
  Vec out(a.dim());
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const int off = a.block_offset(k);
    const int d = block_dim(a.blocks()[k]);
    out.segment(off, d) =
        spec.weight(k) *
        quadratic_apply(inverse(block_element(x, k)), block_element(v, k))
            .coords();
  }
  return Element(a, std::move(out));
}

ScalingReport scaling_point_h(const BarrierSpec& spec, const Element& x,
                              const Element& s) {
  require_spec_algebra(spec, x, "scaling_point_h");
  require_same_algebra(x, s, "scaling_point_h");
  require_cone(x, "scaling_point_h");
  require_cone(s, "scaling_point_h");
  const Algebra& a = spec.algebra();
  Vec w(a.dim());
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const int off = a.block_offset(k);
    const int d = block_dim(a.blocks()[k]);
    const Element xk = block_element(x, k);
    const Element sk = block_element(s, k);
    const Element root = sqrt(xk);
    const Element mean =
        quadratic_apply(root, power(quadratic_apply(inverse(root),
                                                    inverse(sk)),
                                    0.5));
    w.segment(off, d) = std::sqrt(spec.weight(k)) * mean.coords();
  }
  Element wp(a, std::move(w));
  const Element image = barrier_hessian_apply(spec, wp, x);
  const double residual = norm(image - s) / norm(s);
  const bool flagged = near_boundary(x) || near_boundary(s);
  return ScalingReport{std::move(wp), residual, flagged};
}

Element upsilon(const BarrierSpec& spec, const Element& x) {
  require_spec_algebra(spec, x, "upsilon");
  require_cone(x, "upsilon");
  const Algebra& a = spec.algebra();
  Vec u(a.dim());
  for (std::size_t k = 0; k < a.block_count(); ++k) {
    const int off = a.block_offset(k);
    const int d = block_dim(a.blocks()[k]);
    u.segment(off, d) =
        x.coords().segment(off, d) / std::sqrt(spec.weight(k));
  }
  Element up(a, std::move(u));
  const Mat h = barrier_hessian(spec, x).matrix;
  const Mat p = quadratic_rep(inverse(up)).matrix;
  const double residual = (h - p).norm() / h.norm();
  if (residual > 1e-9) {
    char buf[64];
    std::snprintf(buf, sizeof(buf),
                  "upsilon: defining equation residual %.3e exceeds 1e-9",
                  residual);
    throw NumericalError(buf);
  }
  return up;
}

double conjugate_value(const BarrierSpec& spec, const Element& s) {
  require_spec_algebra(spec, s, "conjugate_value");
  require_cone(s, "conjugate_value");
  double v = -spec.c0();
  for (std::size_t k = 0; k < spec.algebra().block_count(); ++k) {
    const double c = spec.weight(k);
    const double r = block_rank(spec.algebra().blocks()[k]);
    v += c * minus_log_det(block_element(s, k)) + c * r * (std::log(c) - 1.0);
  }
  return v;
}

double newton_decrement_sq(const BarrierSpec& spec, const Element& x) {
  const Element g = barrier_gradient(spec, x);
  const Mat h = barrier_hessian(spec, x).matrix;
  const Vec d = Eigen::LLT<Mat>(h).solve(g.coords());
  return g.coords().dot(d);
}

double perturbed_decrement_bound(const Element& x, const Element& y,
                                 double lambda) {
  if (!(lambda > 0.0))
    throw StructuralError("perturbed_decrement_bound: lambda must be > 0");
  require_same_algebra(x, y, "perturbed_decrement_bound");
  const Algebra& a = x.algebra();
  if (!a.irreducible() || a.blocks()[0].kind != BlockKind::Sym)
    throw StructuralError(
        "perturbed_decrement_bound: needs a single Sym(n) block");
  require_cone(x, "perturbed_decrement_bound");
  const int n = a.blocks()[0].size;
  const Mat mx = sym_block_to_matrix(n, x.coords());
  const Mat my = sym_block_to_matrix(n, y.coords());
  const Mat prod = mx * my;
  const double t = (prod * prod).trace();
  const double root = std::sqrt(t) - lambda * std::sqrt(double(n));
  return root * root / lambda;
}

SelfScaledReport check_self_scaled(const BarrierSpec& spec, long trials,
                                   double tol, std::uint64_t seed) {
  if (trials < 1)
    throw StructuralError("check_self_scaled: trials must be >= 1");
  for (int i = 0; i < spec.weights().size(); ++i)
    if (spec.weights()[i] < 1.0)
      throw StructuralError(
          "check_self_scaled: certification requires weights >= 1");
  const double spread = 0.75;
  SelfScaledReport rep{trials, 0.0, 0.0, 0.0, tol, false};
  for (long i = 0; i < trials; ++i) {
    auto rng = substream(seed, "self_scaled", static_cast<std::uint64_t>(i));
    const Element x = sample_cone(spec.algebra(), rng, spread);
    const Element w = sample_cone(spec.algebra(), rng, spread);
    const Element s = barrier_hessian_apply(spec, w, x);
    // axiom (a): the Hessian maps the cone into the cone
    const double viol_a = std::max(0.0, -min_eigenvalue(s) / norm(s));
    // axiom (b): conjugate identity
    const double rhs =
        barrier_value(spec, x) - 2.0 * barrier_value(spec, w) - spec.nu();
    const double lhs = conjugate_value(spec, s);
    const double viol_b = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    rep.max_violation_cone = std::max(rep.max_violation_cone, viol_a);
    rep.max_violation_conj = std::max(rep.max_violation_conj, viol_b);
  }
  rep.max_violation = std::max(rep.max_violation_cone, rep.max_violation_conj);
  rep.pass = rep.max_violation <= tol;
  return rep;
}

}  // namespace symcone

#pragma once

#include <cstdint>

#include "core/jordan.hpp"

namespace symcone {

// H = c0 + sum_i c_i F_i over the irreducible components, where F_i is the
// log-det barrier of component i. nu = sum_i c_i rank_i.
class BarrierSpec {
 public:
  // Validates: one weight per irreducible component, all weights > 0.
  static BarrierSpec make(Algebra algebra, double c0, Vec weights);
  // c0 = 0, unit weights: the standard log-det barrier.
  static BarrierSpec standard(const Algebra& algebra);

  const Algebra& algebra() const { return algebra_; }
  double c0() const { return c0_; }
  const Vec& weights() const { return weights_; }
  double weight(std::size_t block) const {
    return weights_[static_cast<int>(block)];
  }
  double nu() const { return nu_; }

 private:
  BarrierSpec() = default;
  Algebra algebra_;
  double c0_ = 0.0;
  Vec weights_;
  double nu_ = 0.0;
};

double barrier_value(const BarrierSpec& spec, const Element& x);

// Per component -c_i x_i^{-1}.
Element barrier_gradient(const BarrierSpec& spec, const Element& x);

// Block-diagonal operator with blocks c_i P(x_i^{-1}); positive definite,
// maps the cone onto itself.
LinMap barrier_hessian(const BarrierSpec& spec, const Element& x);
Element barrier_hessian_apply(const BarrierSpec& spec, const Element& x,
                              const Element& v);

struct ScalingReport {
  Element w;
  double residual;          // |H''(w) x - s| / |s|
  bool near_boundary_input;
};

// Scaling point of H: per component sqrt(c_i) * (x_i # s_i^{-1}); the
// defining residual H''(w) x = s is always evaluated and reported.
ScalingReport scaling_point_h(const BarrierSpec& spec, const Element& x,
                              const Element& s);

// The unique interior point with H''(x) = P(upsilon(x)^{-1}); for this
// family it is c_i^{-1/2} x_i per component. The defining equation is
// re-verified to 1e-9 before returning.
Element upsilon(const BarrierSpec& spec, const Element& x);

// Exact convex conjugate max_x { -<x,s> - H(x) }, evaluated analytically:
// per component c_i F_i(s_i) + c_i r_i (ln c_i - 1), minus c0.
double conjugate_value(const BarrierSpec& spec, const Element& s);

// <H'(x), H''(x)^{-1} H'(x)>; identically nu on the cone.
double newton_decrement_sq(const BarrierSpec& spec, const Element& x);

// Lower bound on the squared Newton decrement of lambda*F + <Y,.> at X for
// a single Sym(n) block: ((tr[(XY)^2])^{1/2} - lambda*sqrt(n))^2 / lambda.
// Unbounded along rays X = t*X0 whenever Y != 0.
double perturbed_decrement_bound(const Element& x, const Element& y,
                                 double lambda);

struct SelfScaledReport {
  long trials;
  double max_violation_cone;   // axiom (a): H''(w) x stays interior
  double max_violation_conj;   // axiom (b): conjugate identity
  double max_violation;
  double tol;
  bool pass;
};

// Samples (x, w) pairs and checks both self-scaled axioms. Requires all
// weights >= 1 (the certified family); weights in (0,1) are accepted by the
// other barrier operations but not certified here.
SelfScaledReport check_self_scaled(const BarrierSpec& spec, long trials,
                                   double tol, std::uint64_t seed);

}  // namespace symcone

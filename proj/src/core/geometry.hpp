#pragma once

#include "core/jordan.hpp"

namespace symcone {

// The identities below hold on the open cone only; inputs this close to the
// boundary (relative min eigenvalue) are still accepted but get flagged.
bool near_boundary(const Element& x);

// Riemannian distance of the invariant metric:
// sqrt(sum_i log^2 lambda_i) over the eigenvalues of P(a^{-1/2}) b.
double riemannian_distance(const Element& a, const Element& b);

// P(a^{1/2}) (P(a^{-1/2}) b)^t; the unique geodesic through a (t=0) and
// b (t=1), interior for every real t.
Element geodesic(const Element& a, const Element& b, double t);

// a # b, the geodesic midpoint; unique interior solution of P(m) a^{-1} = b.
Element geometric_mean(const Element& a, const Element& b);

// w with P(w^{-1}) x = s, i.e. the scaling point of the log-det barrier;
// equals x # s^{-1}.
Element scaling_point(const Element& x, const Element& s);

}  // namespace symcone

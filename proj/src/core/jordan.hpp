#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "core/algebra.hpp"

namespace symcone {

// Jordan frame (complete orthogonal system of primitive idempotents) plus
// eigenvalues, sorted descending.
struct Spectral {
  std::vector<Element> frame;
  Vec eigenvalues;
};

struct DetTrace {
  double det;
  double trace;
};

// x o y. Sym blocks multiply as (XY + YX)/2, Spin blocks as
// (x0, xbar) o (y0, ybar) = (x0 y0 + xbar.ybar, x0 ybar + y0 xbar),
// direct sums componentwise.
Element jordan_product(const Element& x, const Element& y);

// Left multiplication L(x): y -> x o y as a dense operator.
LinMap mult_op(const Element& x);

// Quadratic representation P(x) = 2 L(x)^2 - L(x^2).
LinMap quadratic_rep(const Element& x);

// P(x) y = 2 x o (x o y) - (x o x) o y without forming the operator.
Element quadratic_apply(const Element& x, const Element& y);

Spectral spectral(const Element& x);

// Eigenvalues only, sorted descending.
Vec eigenvalues_of(const Element& x);
double min_eigenvalue(const Element& x);

// Predicate applied to every eigenvalue before a spectral function is
// evaluated; `requirement` is quoted in the domain error.
struct EigenGuard {
  std::function<bool(double)> ok;
  std::string requirement;
};

// sum_i f(lambda_i) c_i over the Jordan frame of x.
Element spectral_map(const Element& x, const std::function<double(double)>& f,
                     const EigenGuard& guard);

Element inverse(const Element& x);          // f = 1/l, guard l != 0
Element sqrt(const Element& x);             // f = sqrt,  guard l >= 0
Element power(const Element& x, double t);  // f = l^t,   guard l > 0
Element exp(const Element& x);
Element log(const Element& x);              // guard l > 0

// det = prod of eigenvalues; trace = sum (evaluated exactly as the linear
// trace form of the coordinates).
DetTrace det_trace(const Element& x);

// True iff every eigenvalue exceeds `margin` (strictly).
bool in_cone(const Element& x, double margin = 0.0);

// exp(z) for z with independent N(0, spread^2) coordinates; always interior.
Element sample_cone(const Algebra& a, std::uint64_t seed, double spread);
Element sample_cone(const Algebra& a, std::mt19937_64& rng, double spread);

// Plain Gaussian coordinate vector, N(0, spread^2) per coordinate.
Element sample_element(const Algebra& a, std::mt19937_64& rng, double spread);

// The k-th irreducible component of x as an element of its own single-block
// algebra.
Element block_element(const Element& x, std::size_t k);

}  // namespace symcone

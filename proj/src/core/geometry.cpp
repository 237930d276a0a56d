#include "core/geometry.hpp"

#include <cmath>

namespace symcone {

namespace {

void require_cone(const Element& x, const char* where, const char* which) {
  if (!in_cone(x, 0.0))
    throw DomainError(std::string(where) + ": " + which +
                      " argument is not in the cone");
}

}  // namespace

bool near_boundary(const Element& x) {
  return min_eigenvalue(x) < 1e-10 * norm(x);
}

double riemannian_distance(const Element& a, const Element& b) {
  require_cone(a, "riemannian_distance", "first");
  require_cone(b, "riemannian_distance", "second");
  const Element rel = quadratic_apply(power(a, -0.5), b);
  const Vec ev = eigenvalues_of(rel);
  double sum = 0.0;
  for (int i = 0; i < ev.size(); ++i) {
    const double l = std::log(ev[i]);
    sum += l * l;
  }
  return std::sqrt(sum);
}

Element geodesic(const Element& a, const Element& b, double t) {
  require_cone(a, "geodesic", "first");
  require_cone(b, "geodesic", "second");
  const Element root = sqrt(a);
  const Element rel = quadratic_apply(inverse(root), b);
  return quadratic_apply(root, power(rel, t));
}

Element geometric_mean(const Element& a, const Element& b) {
  return geodesic(a, b, 0.5);
}

Element scaling_point(const Element& x, const Element& s) {
  require_cone(x, "scaling_point", "first");
  require_cone(s, "scaling_point", "second");
  return geodesic(x, inverse(s), 0.5);
}

}  // namespace symcone

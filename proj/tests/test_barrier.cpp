#include <doctest.h>

#include <cmath>

#include "core/barrier.hpp"
#include "core/geometry.hpp"
#include "test_helpers.hpp"

using namespace symcone;
using namespace testutil;

namespace {

BarrierSpec weighted_spec(const Algebra& a) {
  Vec w(static_cast<int>(a.block_count()));
  for (int k = 0; k < w.size(); ++k) w[k] = 1.5 + k;
  return BarrierSpec::make(a, 0.25, w);
}

// Gradient-ascent maximization of -<x,s> - H(x), independent of the
// analytic conjugate formula.
double conjugate_by_ascent(const BarrierSpec& spec, const Element& s) {
  const auto value = [&](const Element& x) {
    return -inner(x, s) - barrier_value(spec, x);
  };
  Element x = spec.algebra().identity();
  double fx = value(x);
  for (int iter = 0; iter < 4000; ++iter) {
    const Element grad = -s - barrier_gradient(spec, x);
    double step = 1.0;
    bool moved = false;
    while (step > 1e-16) {
      const Element cand = x + step * grad;
      if (in_cone(cand, 0.0)) {
        const double fc = value(cand);
        if (fc > fx) {
          x = cand;
          fx = fc;
          moved = true;
          break;
        }
      }
      step /= 2;
    }
    if (!moved && norm(grad) < 1e-10) break;
    if (!moved) break;
  }
  return fx;
}

}  // namespace

TEST_CASE("barrier spec validation") {
  const Algebra a = Algebra::direct_sum({Algebra::sym(2), Algebra::spin(3)});
  CHECK_THROWS_AS(BarrierSpec::make(a, 0.0, Vec::Ones(1)), StructuralError);
  Vec bad(2);
  bad << 1.0, 0.0;
  CHECK_THROWS_AS(BarrierSpec::make(a, 0.0, bad), StructuralError);
  const BarrierSpec spec = weighted_spec(a);
  CHECK(spec.nu() == doctest::Approx(1.5 * 2 + 2.5 * 2));
}

TEST_CASE("barrier value") {
  SUBCASE("identity point and hand-computed determinant") {
    const Algebra a = Algebra::sym(2);
    const BarrierSpec unit = BarrierSpec::standard(a);
    CHECK(barrier_value(unit, a.identity()) == doctest::Approx(0.0));

    const BarrierSpec two = BarrierSpec::make(a, 0.75, Vec::Constant(1, 2.0));
    MatrixXd x(2, 2);
    x << 2, 0, 0, 3;
    CHECK(barrier_value(two, sym_element(x)) ==
          doctest::Approx(-2.0 * std::log(6.0) + 0.75).epsilon(1e-12));
    CHECK_THROWS_AS(barrier_value(two, -a.identity()), DomainError);
  }

  SUBCASE("logarithmic homogeneity") {
    for (const Algebra& a : test_algebras()) {
      const BarrierSpec spec = weighted_spec(a);
      auto rng = substream(61, a.describe());
      for (int i = 0; i < 25; ++i) {
        const Element x = sample_cone(a, rng, 0.7);
        std::uniform_real_distribution<double> unif(0.2, 5.0);
        const double t = unif(rng);
        CHECK(barrier_value(spec, t * x) ==
              doctest::Approx(barrier_value(spec, x) -
                              spec.nu() * std::log(t))
                  .epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("barrier gradient") {
  SUBCASE("unit weights at the identity") {
    const Algebra a = Algebra::spin(4);
    const BarrierSpec unit = BarrierSpec::standard(a);
    CHECK(norm(barrier_gradient(unit, a.identity()) + a.identity()) < 1e-13);
  }

  SUBCASE("finite differences of the value") {
    for (const Algebra& a : test_algebras()) {
      const BarrierSpec spec = weighted_spec(a);
      auto rng = substream(62, a.describe());
      const Element x = sample_cone(a, rng, 0.5);
      const Element g = barrier_gradient(spec, x);
      const double h = 1e-6;
      for (int k = 0; k < a.dim(); ++k) {
        Vec step = Vec::Zero(a.dim());
        step[k] = h;
        const double fd = (barrier_value(spec, Element(a, x.coords() + step)) -
                           barrier_value(spec, Element(a, x.coords() - step))) /
                          (2 * h);
        CHECK(fd == doctest::Approx(g.coords()[k])
                        .epsilon(1e-6 * std::max(1.0, std::abs(g.coords()[k]))));
      }
    }
  }

  SUBCASE("Euler identity <-grad, x> = nu") {
    for (const Algebra& a : test_algebras()) {
      const BarrierSpec spec = weighted_spec(a);
      auto rng = substream(63, a.describe());
      for (int i = 0; i < 20; ++i) {
        const Element x = sample_cone(a, rng, 0.8);
        CHECK(-inner(barrier_gradient(spec, x), x) ==
              doctest::Approx(spec.nu()).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("barrier hessian") {
  SUBCASE("identity point") {
    const Algebra a = Algebra::direct_sum({Algebra::sym(2), Algebra::spin(3)});
    const BarrierSpec unit = BarrierSpec::standard(a);
    const Mat h = barrier_hessian(unit, a.identity()).matrix;
    CHECK((h - Mat::Identity(a.dim(), a.dim())).norm() < 1e-12);
  }

  SUBCASE("sym oracle X^{-1} A X^{-1}") {
    auto rng = substream(64, "hess_sym");
    const Algebra a = Algebra::sym(3);
    const BarrierSpec spec = BarrierSpec::make(a, 0.0, Vec::Constant(1, 1.7));
    for (int i = 0; i < 25; ++i) {
      const MatrixXd x = random_spd(3, rng);
      const MatrixXd v = random_symmetric(3, rng);
      const Element image =
          barrier_hessian_apply(spec, sym_element(x), sym_element(v));
      const MatrixXd xi = x.inverse();
      CHECK((dense_of(image) - 1.7 * xi * v * xi).norm() <=
            1e-10 * std::max(1.0, (xi * v * xi).norm()));
    }
  }

  SUBCASE("finite differences of the gradient") {
    const Algebra a = Algebra::direct_sum({Algebra::sym(2), Algebra::spin(3)});
    const BarrierSpec spec = weighted_spec(a);
    auto rng = substream(65, "hess_fd");
    const Element x = sample_cone(a, rng, 0.5);
    const Element v = sample_element(a, rng, 1.0);
    const double h = 1e-6;
    const Element gp =
        barrier_gradient(spec, Element(a, x.coords() + h * v.coords()));
    const Element gm =
        barrier_gradient(spec, Element(a, x.coords() - h * v.coords()));
    const Vec fd = (gp.coords() - gm.coords()) / (2 * h);
    const Element hv = barrier_hessian_apply(spec, x, v);
    CHECK((fd - hv.coords()).norm() <= 1e-5 * std::max(1.0, hv.coords().norm()));
  }

  SUBCASE("positive definite and cone preserving") {
    for (const Algebra& a : test_algebras()) {
      const BarrierSpec spec = weighted_spec(a);
      auto rng = substream(66, a.describe());
      for (int i = 0; i < 20; ++i) {
        const Element x = sample_cone(a, rng, 0.7);
        const Mat h = barrier_hessian(spec, x).matrix;
        CHECK(Eigen::SelfAdjointEigenSolver<Mat>(h, Eigen::EigenvaluesOnly)
                  .eigenvalues()
                  .minCoeff() > 0.0);
        const Element p = sample_cone(a, rng, 0.7);
        CHECK(in_cone(barrier_hessian_apply(spec, x, p), 0.0));
      }
    }
  }
}

TEST_CASE("scaling point of the weighted barrier") {
  SUBCASE("unit weights reduce to the log-det scaling point") {
    for (const Algebra& a : test_algebras()) {
      const BarrierSpec unit = BarrierSpec::standard(a);
      auto rng = substream(67, a.describe());
      const Element x = sample_cone(a, rng, 0.7);
      const Element s = sample_cone(a, rng, 0.7);
      const ScalingReport rep = scaling_point_h(unit, x, s);
      CHECK(rel_gap(rep.w, scaling_point(x, s)) < 1e-12);
      CHECK(rep.residual < 1e-10);
    }
  }

  SUBCASE("residual stays tiny over many draws on a mixed algebra") {
    const Algebra a = Algebra::direct_sum({Algebra::sym(3), Algebra::spin(4)});
    const BarrierSpec spec = weighted_spec(a);
    auto rng = substream(68, "wh_mixed");
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const Element x = sample_cone(a, rng, 0.7);
      const Element s = sample_cone(a, rng, 0.7);
      worst = std::max(worst, scaling_point_h(spec, x, s).residual);
    }
    CHECK(worst <= 1e-9);
  }

  SUBCASE("hessian factorization through the scaling point") {
    const Algebra a = Algebra::direct_sum({Algebra::sym(2), Algebra::spin(3)});
    const BarrierSpec spec = weighted_spec(a);
    auto rng = substream(69, "wh_factorization");
    for (int i = 0; i < 25; ++i) {
      const Element x = sample_cone(a, rng, 0.7);
      const Element s = sample_cone(a, rng, 0.7);
      const ScalingReport rep = scaling_point_h(spec, x, s);
      const Mat hx = barrier_hessian(spec, x).matrix;
      const Mat hw = barrier_hessian(spec, rep.w).matrix;
      const Mat hs = barrier_hessian(spec, s).matrix;
      CHECK((hx - hw * hs * hw).norm() <= 1e-8 * hx.norm());
    }
  }

  SUBCASE("near-boundary inputs are flagged, not rejected") {
    const Algebra a = Algebra::sym(2);
    MatrixXd m(2, 2);
    m << 1.0, 0.0, 0.0, 1e-12;
    const ScalingReport rep = scaling_point_h(BarrierSpec::standard(a),
                                              sym_element(m), a.identity());
    CHECK(rep.near_boundary_input);
  }
}

TEST_CASE("upsilon map") {
  SUBCASE("unit weights act as the identity") {
    const Algebra a = Algebra::sym(3);
    const BarrierSpec unit = BarrierSpec::standard(a);
    auto rng = substream(70, "upsilon");
    const Element x = sample_cone(a, rng, 0.8);
    CHECK(rel_gap(upsilon(unit, x), x) < 1e-14);
  }

  SUBCASE("c = 4 at the identity gives e/2") {
    const Algebra a = Algebra::sym(2);
    const BarrierSpec spec = BarrierSpec::make(a, 0.0, Vec::Constant(1, 4.0));
    const Element u = upsilon(spec, a.identity());
    CHECK(rel_gap(u, 0.5 * a.identity()) < 1e-13);
    // P((e/2)^{-1}) = 4 P(e^{-1})
    const Mat lhs = quadratic_rep(inverse(u)).matrix;
    const Mat rhs = 4.0 * quadratic_rep(a.identity()).matrix;
    CHECK((lhs - rhs).norm() < 1e-12);
  }

  SUBCASE("upsilon(x) = P(x^{1/2}) upsilon(e)") {
    for (const Algebra& a : test_algebras()) {
      const BarrierSpec spec = weighted_spec(a);
      auto rng = substream(71, a.describe());
      const Element ue = upsilon(spec, a.identity());
      for (int i = 0; i < 20; ++i) {
        const Element x = sample_cone(a, rng, 0.7);
        CHECK(rel_gap(upsilon(spec, x), quadratic_apply(sqrt(x), ue)) < 1e-9);
      }
    }
  }

  SUBCASE("chains through both scaling points") {
    // upsilon(w_H(x,s)) = w_F(x,s) and upsilon(x) = P(w_F) upsilon(s)
    for (const Algebra& a : test_algebras()) {
      const BarrierSpec spec = weighted_spec(a);
      auto rng = substream(72, a.describe());
      for (int i = 0; i < 15; ++i) {
        const Element x = sample_cone(a, rng, 0.7);
        const Element s = sample_cone(a, rng, 0.7);
        const Element wf = scaling_point(x, s);
        const Element wh = scaling_point_h(spec, x, s).w;
        CHECK(rel_gap(upsilon(spec, wh), wf) < 1e-8);
        CHECK(rel_gap(upsilon(spec, x),
                      quadratic_apply(wf, upsilon(spec, s))) < 1e-8);
      }
    }
  }
}

TEST_CASE("conjugate value") {
  SUBCASE("unit weights give F(s) - nu") {
    const Algebra a = Algebra::direct_sum({Algebra::sym(3), Algebra::spin(4)});
    const BarrierSpec unit = BarrierSpec::standard(a);
    CHECK(conjugate_value(unit, a.identity()) ==
          doctest::Approx(-unit.nu()).epsilon(1e-12));
    auto rng = substream(73, "conj");
    const Element s = sample_cone(a, rng, 0.8);
    CHECK(conjugate_value(unit, s) ==
          doctest::Approx(barrier_value(unit, s) - unit.nu()).epsilon(1e-10));
  }

  SUBCASE("conjugation is an involution for the family") {
    for (const Algebra& a : test_algebras()) {
      const BarrierSpec spec = weighted_spec(a);
      // H_sharp is the same family with constant sum c_i r_i (ln c_i - 1) - c0
      double sharp_c0 = -spec.c0();
      for (std::size_t k = 0; k < a.block_count(); ++k)
        sharp_c0 += spec.weight(k) * block_rank(a.blocks()[k]) *
                    (std::log(spec.weight(k)) - 1.0);
      const BarrierSpec sharp = BarrierSpec::make(a, sharp_c0, spec.weights());
      auto rng = substream(74, a.describe());
      const Element x = sample_cone(a, rng, 0.8);
      CHECK(conjugate_value(sharp, x) ==
            doctest::Approx(barrier_value(spec, x)).epsilon(1e-10));
    }
  }

  SUBCASE("matches a numerical maximization oracle") {
    const Algebra a = Algebra::sym(2);
    const BarrierSpec spec = BarrierSpec::make(a, 0.3, Vec::Constant(1, 1.8));
    auto rng = substream(75, "conj_oracle");
    for (int i = 0; i < 5; ++i) {
      const Element s = sample_cone(a, rng, 0.5);
      const double analytic = conjugate_value(spec, s);
      const double numeric = conjugate_by_ascent(spec, s);
      CHECK(numeric == doctest::Approx(analytic).epsilon(1e-6));
    }
  }
}

TEST_CASE("self-scaled axioms") {
  SUBCASE("certified families pass") {
    const SelfScaledReport unit_rep = check_self_scaled(
        BarrierSpec::standard(Algebra::sym(3)), 300, 1e-8, 5);
    CHECK(unit_rep.pass);
    CHECK(unit_rep.max_violation <= 1e-8);

    const Algebra mixed =
        Algebra::direct_sum({Algebra::sym(2), Algebra::spin(3)});
    const SelfScaledReport mixed_rep = check_self_scaled(
        BarrierSpec::make(mixed, 0.0, Vec::Constant(2, 2.5)), 300, 1e-8, 6);
    CHECK(mixed_rep.pass);
  }

  SUBCASE("axiom (b) at x = w") {
    // H_sharp(H''(x) x) = -H(x) - nu
    const Algebra a = Algebra::spin(5);
    const BarrierSpec spec =
        BarrierSpec::make(a, 0.1, Vec::Constant(1, 2.0));
    auto rng = substream(76, "xw");
    const Element x = sample_cone(a, rng, 0.8);
    const Element s = barrier_hessian_apply(spec, x, x);
    CHECK(conjugate_value(spec, s) ==
          doctest::Approx(-barrier_value(spec, x) - spec.nu()).epsilon(1e-9));
  }

  SUBCASE("weights below one are not certified") {
    const BarrierSpec spec =
        BarrierSpec::make(Algebra::sym(2), 0.0, Vec::Constant(1, 0.5));
    CHECK_THROWS_AS(check_self_scaled(spec, 10, 1e-8, 1), StructuralError);
  }
}

TEST_CASE("newton decrement") {
  SUBCASE("unit weights give the rank") {
    for (const Algebra& a : test_algebras()) {
      const BarrierSpec unit = BarrierSpec::standard(a);
      auto rng = substream(77, a.describe());
      const Element x = sample_cone(a, rng, 0.8);
      CHECK(newton_decrement_sq(unit, x) ==
            doctest::Approx(double(a.rank())).epsilon(1e-10));
    }
  }

  SUBCASE("identity point with a single weight c gives c * r") {
    const Algebra a = Algebra::sym(3);
    const BarrierSpec spec = BarrierSpec::make(a, 0.0, Vec::Constant(1, 2.3));
    CHECK(newton_decrement_sq(spec, a.identity()) ==
          doctest::Approx(2.3 * 3).epsilon(1e-12));
  }

  SUBCASE("equals nu everywhere") {
    for (const Algebra& a : test_algebras()) {
      const BarrierSpec spec = weighted_spec(a);
      auto rng = substream(78, a.describe());
      for (int i = 0; i < 50; ++i) {
        const Element x = sample_cone(a, rng, 0.8);
        CHECK(std::abs(newton_decrement_sq(spec, x) - spec.nu()) <=
              1e-9 * spec.nu());
      }
    }
  }
}

TEST_CASE("perturbed decrement bound") {
  const Algebra a = Algebra::sym(2);

  SUBCASE("vanishing perturbation gives the constant lambda * n") {
    auto rng = substream(79, "bound");
    const Element y = Element(a, Vec::Zero(a.dim()));
    for (const double lambda : {0.5, 1.0, 3.0}) {
      for (int i = 0; i < 10; ++i) {
        const Element x = sample_cone(a, rng, 1.0);
        CHECK(perturbed_decrement_bound(x, y, lambda) ==
              doctest::Approx(lambda * 2).epsilon(1e-14));
      }
    }
  }

  SUBCASE("identity perturbation along the scaled identity ray") {
    // X = tI, Y = I, lambda = 1, n = 2: bound = (sqrt(2) t - sqrt(2))^2
    const Element y = a.identity();
    for (const double t : {1.0, 2.0, 10.0}) {
      const double bound =
          perturbed_decrement_bound(t * a.identity(), y, 1.0);
      const double expected = std::pow(std::sqrt(2.0) * t - std::sqrt(2.0), 2);
      CHECK(bound == doctest::Approx(expected).epsilon(1e-12));
    }
  }

  SUBCASE("grows without bound along rays for nonzero Y") {
    auto rng = substream(80, "bound_growth");
    for (int i = 0; i < 10; ++i) {
      Element y = sample_element(a, rng, 1.0);
      y = (1.0 / norm(y)) * y;
      const double at_cube =
          perturbed_decrement_bound(1e3 * a.identity(), y, 1.0);
      CHECK(at_cube > 10.0 * 2);
      double prev = 0.0;
      for (const double t : {10.0, 100.0, 1000.0}) {
        const double b = perturbed_decrement_bound(t * a.identity(), y, 1.0);
        CHECK(b > prev);
        prev = b;
      }
    }
  }

  SUBCASE("rejects non-sym algebras and outside points") {
    const Algebra sp = Algebra::spin(3);
    CHECK_THROWS_AS(
        perturbed_decrement_bound(sp.identity(), sp.identity(), 1.0),
        StructuralError);
    CHECK_THROWS_AS(
        perturbed_decrement_bound(-a.identity(), a.identity(), 1.0),
        DomainError);
  }
}

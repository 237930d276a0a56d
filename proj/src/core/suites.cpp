#include "core/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "core/barrier.hpp"
#include "core/geometry.hpp"
#include "core/rng.hpp"
#include "core/verify.hpp"

namespace symcone {

namespace {

std::string fmt_e(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

struct Resolved {
  std::uint64_t seed;
  double tol;
  long trials;
  int n;
  int samples;
  Algebra algebra;
};

Resolved resolve(const SuiteConfig& cfg, long default_trials, int default_n,
                 int default_samples) {
  Resolved r{cfg.seed,
             cfg.tol,
             cfg.trials > 0 ? cfg.trials : default_trials,
             cfg.n > 0 ? cfg.n : default_n,
             cfg.samples > 0 ? cfg.samples : default_samples,
             cfg.algebra ? *cfg.algebra : Algebra::sym(3)};
  if (!(r.tol > 0.0)) throw StructuralError("suite: tol must be > 0");
  if (r.trials < 1) throw StructuralError("suite: trials must be >= 1");
  return r;
}

CheckResult make_check(std::string name, long trials, double violation,
                       double tol, std::string note = "") {
  return CheckResult{std::move(name), trials, violation, violation <= tol,
                     std::move(note)};
}

double relative_operator_gap(const Mat& lhs, const Mat& rhs) {
  return (lhs - rhs).norm() / rhs.norm();
}

// Weights >= 1 with distinct values per component: 1.5, 2.5, 3.5, ...
Vec mixed_weights(const Algebra& a) {
  Vec w(static_cast<int>(a.block_count()));
  for (int k = 0; k < w.size(); ++k) w[k] = 1.5 + k;
  return w;
}

std::vector<CheckResult> suite_fundamental(const Resolved& r) {
  const double spread = 0.8;
  double worst = 0.0;
  for (long i = 0; i < r.trials; ++i) {
    auto rng = substream(r.seed, "fundamental", i);
    const Element x = sample_cone(r.algebra, rng, spread);
    const Element y = sample_cone(r.algebra, rng, spread);
    const Mat px = quadratic_rep(x).matrix;
    const Mat py = quadratic_rep(y).matrix;
    const Mat lhs = quadratic_rep(quadratic_apply(x, y)).matrix;
    worst = std::max(worst, relative_operator_gap(lhs, px * py * px));
  }
  return {make_check("fundamental_formula", r.trials, worst, r.tol)};
}

std::vector<CheckResult> suite_thm12(const Resolved& r) {
  const double spread = 0.7;
  std::vector<CheckResult> checks;
  const BarrierSpec unit = BarrierSpec::standard(r.algebra);
  const BarrierSpec weighted =
      BarrierSpec::make(r.algebra, 0.0, mixed_weights(r.algebra));
  const std::vector<std::pair<std::string, const BarrierSpec*>> tagged = {
      {"standard", &unit}, {"weighted", &weighted}};
  for (const auto& [tag, spec_ptr] : tagged) {
    const BarrierSpec& spec = *spec_ptr;
    double worst_residual = 0.0;
    double worst_factorization = 0.0;
    double worst_cone = 0.0;
    for (long i = 0; i < r.trials; ++i) {
      auto rng = substream(r.seed, std::string("thm12_") + tag, i);
      const Element x = sample_cone(r.algebra, rng, spread);
      const Element s = sample_cone(r.algebra, rng, spread);
      const ScalingReport sr = scaling_point_h(spec, x, s);
      worst_residual = std::max(worst_residual, sr.residual);

      const Mat hx = barrier_hessian(spec, x).matrix;
      const Mat hw = barrier_hessian(spec, sr.w).matrix;
      const Mat hs = barrier_hessian(spec, s).matrix;
      worst_factorization =
          std::max(worst_factorization, relative_operator_gap(hx, hw * hs * hw));

      // the Hessian is a cone automorphism: it keeps sampled points interior
      const Element p = sample_cone(r.algebra, rng, spread);
      const Element image = barrier_hessian_apply(spec, sr.w, p);
      worst_cone = std::max(worst_cone,
                            std::max(0.0, -min_eigenvalue(image) / norm(image)));
    }
    checks.push_back(make_check(std::string("scaling_residual_") + tag,
                                r.trials, worst_residual, r.tol));
    checks.push_back(make_check(std::string("hessian_factorization_") + tag,
                                r.trials, worst_factorization, r.tol));
    checks.push_back(make_check(std::string("hessian_cone_map_") + tag,
                                r.trials, worst_cone, r.tol));
  }
  return checks;
}

std::vector<CheckResult> suite_geo_mean(const Resolved& r) {
  const double spread = 0.6;
  double worst_a = 0.0, worst_b = 0.0, worst_c = 0.0, worst_d = 0.0,
         worst_e = 0.0, worst_mid = 0.0;
  for (long i = 0; i < r.trials; ++i) {
    auto rng = substream(r.seed, "geo_mean", i);
    const Element a = sample_cone(r.algebra, rng, spread);
    const Element b = sample_cone(r.algebra, rng, spread);
    const Element m = geometric_mean(a, b);

    worst_a = std::max(worst_a,
                       norm(quadratic_apply(m, inverse(a)) - b) / norm(b));
    worst_b = std::max(worst_b, norm(m - geometric_mean(b, a)) / norm(m));
    const Element mi = inverse(m);
    worst_c = std::max(
        worst_c, norm(mi - geometric_mean(inverse(a), inverse(b))) / norm(mi));

    const Mat pa_half = quadratic_rep(sqrt(a)).matrix;
    const Mat pa_half_inv = quadratic_rep(inverse(sqrt(a))).matrix;
    const Mat inner_root =
        psd_sqrt(pa_half_inv * quadratic_rep(b).matrix * pa_half_inv);
    worst_d = std::max(worst_d,
                       relative_operator_gap(quadratic_rep(m).matrix,
                                             pa_half * inner_root * pa_half));

    LinMap g = (i % 2 == 0)
                   ? quadratic_rep(sample_cone(r.algebra, rng, spread))
                   : sample_orthogonal_automorphism(r.algebra, rng);
    const Element lhs = apply(g, m);
    const Element rhs = geometric_mean(apply(g, a), apply(g, b));
    worst_e = std::max(worst_e, norm(lhs - rhs) / norm(rhs));

    const double dist = riemannian_distance(a, b);
    if (dist > 1e-12) {
      const double da = riemannian_distance(a, m);
      const double db = riemannian_distance(m, b);
      worst_mid = std::max(worst_mid,
                           std::max(std::abs(da - 0.5 * dist),
                                    std::abs(db - 0.5 * dist)) /
                               dist);
    }
  }
  return {make_check("quadratic_equation", r.trials, worst_a, r.tol),
          make_check("commutativity", r.trials, worst_b, r.tol),
          make_check("inversion", r.trials, worst_c, r.tol),
          make_check("operator_mean", r.trials, worst_d, r.tol),
          make_check("transformation", r.trials, worst_e, r.tol),
          make_check("midpoint", r.trials, worst_mid, r.tol)};
}

std::vector<CheckResult> suite_self_scaled(const Resolved& r) {
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, BarrierSpec>> specs;
  specs.emplace_back("unit", BarrierSpec::standard(r.algebra));
  specs.emplace_back(
      "c2.5", BarrierSpec::make(
                  r.algebra, 0.0,
                  Vec::Constant(static_cast<int>(r.algebra.block_count()),
                                2.5)));
  specs.emplace_back(
      "mixed",
      r.algebra.irreducible()
          ? BarrierSpec::make(r.algebra, 0.5,
                              Vec::Constant(1, 1.75))
          : BarrierSpec::make(r.algebra, 0.5, mixed_weights(r.algebra)));
  for (const auto& [tag, spec] : specs) {
    const SelfScaledReport rep =
        check_self_scaled(spec, r.trials, r.tol, r.seed);
    checks.push_back(make_check("axiom_a_" + tag, rep.trials,
                                rep.max_violation_cone, r.tol));
    checks.push_back(make_check("axiom_b_" + tag, rep.trials,
                                rep.max_violation_conj, r.tol));

    double worst_nd = 0.0;
    for (long i = 0; i < r.trials; ++i) {
      auto rng = substream(r.seed, "decrement_" + tag, i);
      const Element x = sample_cone(r.algebra, rng, 0.75);
      worst_nd = std::max(
          worst_nd,
          std::abs(newton_decrement_sq(spec, x) - spec.nu()) / spec.nu());
    }
    checks.push_back(
        make_check("newton_decrement_" + tag, r.trials, worst_nd, r.tol));
  }
  return checks;
}

std::vector<CheckResult> suite_polar(const Resolved& r) {
  // forming theta^T theta squares conditioning twice over; sample w with a
  // moderate spread so factor recovery stays within tolerance
  const double spread = 0.5;
  double worst = 0.0;
  for (long i = 0; i < r.trials; ++i) {
    auto rng = substream(r.seed, "polar", i);
    const LinMap omega = sample_orthogonal_automorphism(r.algebra, rng);
    const Element w = sample_cone(r.algebra, rng, spread);
    const LinMap theta =
        compose(omega, quadratic_rep(inverse(w)));
    const PolarResult res = polar_decompose(theta);
    const double gap_omega =
        (res.omega.matrix - omega.matrix).norm() / omega.matrix.norm();
    const double gap_w = norm(res.w - w) / norm(w);
    worst = std::max({worst, gap_omega, gap_w, res.residual});
  }
  return {make_check("compose_decompose", r.trials, worst, r.tol)};
}

std::vector<CheckResult> suite_nondefective(const Resolved& r) {
  double worst_spectrum = 0.0;
  double worst_roundtrip = 0.0;
  double worst_spd = 0.0;
  const int max_n = std::max(2, r.n);
  for (long i = 0; i < r.trials; ++i) {
    auto rng = substream(r.seed, "nondefective", i);
    const int n = 2 + static_cast<int>(i % (max_n - 1));
    const Mat x = sample_spd(n, rng);
    const Mat s = sample_spd(n, rng);
    const Mat prod = x * s;

    // products of SPD pairs have positive real spectra
    Eigen::EigenSolver<Mat> es(prod);
    const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
    double imag = 0.0, neg = 0.0;
    for (int k = 0; k < n; ++k) {
      imag = std::max(imag, std::abs(es.eigenvalues()[k].imag()));
      neg = std::max(neg, -es.eigenvalues()[k].real());
    }
    worst_spectrum =
        std::max(worst_spectrum, std::max(imag, neg) / scale);

    // and conversely such spectra admit an SPD factorization
    const NondefectiveFactors f = factor_nondefective(prod);
    worst_roundtrip =
        std::max(worst_roundtrip, (f.x * f.s - prod).norm() / prod.norm());
    const double min_x =
        Eigen::SelfAdjointEigenSolver<Mat>(f.x, Eigen::EigenvaluesOnly)
            .eigenvalues()
            .minCoeff();
    const double min_s =
        Eigen::SelfAdjointEigenSolver<Mat>(f.s, Eigen::EigenvaluesOnly)
            .eigenvalues()
            .minCoeff();
    worst_spd = std::max(worst_spd,
                         std::max(-min_x / f.x.norm(), -min_s / f.s.norm()));
    worst_spd = std::max(worst_spd, 0.0);
  }
  return {make_check("product_spectrum", r.trials, worst_spectrum, r.tol),
          make_check("factor_roundtrip", r.trials, worst_roundtrip, r.tol),
          make_check("factor_spd", r.trials, worst_spd, r.tol)};
}

std::vector<CheckResult> suite_lie_span(const Resolved& r) {
  const LieSpanReport rep = lie_span_probe(r.n, r.samples, r.seed);
  std::ostringstream note;
  note << "span_dimension=" << rep.span_dimension << " target=" << rep.target
       << " samples=" << rep.samples_used;
  CheckResult check = make_check(
      "span_rank", rep.samples_used,
      static_cast<double>(rep.target - rep.span_dimension), 0.0, note.str());
  check.pass = rep.span_dimension == rep.target;
  return {check};
}

std::vector<CheckResult> suite_isotropy(const Resolved& r) {
  std::vector<Mat> generators;
  for (int g = 0; g < 24; ++g) {
    auto rng = substream(r.seed, "isotropy_gen", g);
    generators.push_back(
        rotation_from(sample_spd(r.n, rng) * sample_spd(r.n, rng)));
  }

  double worst_scalar = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double lambda = 0.5 + i;
    const Mat m = lambda * Mat::Identity(r.n, r.n);
    worst_scalar =
        std::max(worst_scalar, isotropy_certificate(m, generators, r.seed));
  }

  double min_nonscalar = std::numeric_limits<double>::infinity();
  for (long i = 0; i < r.trials; ++i) {
    auto rng = substream(r.seed, "isotropy_m", i);
    Mat m = sample_spd(r.n, rng);
    // keep a visible non-scalar part
    for (int attempt = 0;
         attempt < 100 &&
         (m - m.trace() / r.n * Mat::Identity(r.n, r.n)).norm() <
             0.1 * m.norm();
         ++attempt)
      m = sample_spd(r.n, rng);
    min_nonscalar = std::min(min_nonscalar,
                             isotropy_certificate(m, generators, r.seed));
  }

  std::vector<CheckResult> checks;
  checks.push_back(
      make_check("scalar_invariance", 5, worst_scalar, std::min(r.tol, 1e-12)));
  CheckResult nonscalar = make_check(
      "nonscalar_detection", r.trials,
      std::max(0.0, 1e-2 - min_nonscalar), r.tol,
      "min_certificate=" + fmt_e(min_nonscalar));
  nonscalar.pass = min_nonscalar > 1e-2;
  checks.push_back(nonscalar);
  return checks;
}

std::vector<CheckResult> suite_alpha(const Resolved& r) {
  std::vector<CheckResult> checks;
  for (const double lambda : {1.0, 3.0}) {
    const AlphaReport rep =
        alpha_mechanism_check(lambda, r.algebra, r.trials, r.tol, r.seed);
    std::ostringstream name;
    name << "scalar_alpha_lambda_" << lambda;
    checks.push_back(
        make_check(name.str(), rep.trials, rep.max_violation, r.tol));
    if (lambda == 1.0) {
      CheckResult witness = make_check(
          "nonscalar_witness", rep.trials,
          rep.witness_found ? 0.0 : 1.0, r.tol,
          rep.witness_found
              ? "witness_violation=" + fmt_e(rep.witness_violation)
              : "no witness found");
      witness.pass = rep.witness_found;
      checks.push_back(witness);
    }
  }
  return checks;
}

std::vector<CheckResult> suite_classification(const Resolved& r) {
  if (!r.algebra.irreducible())
    throw StructuralError(
        "classification suite: needs an irreducible algebra");
  std::vector<CheckResult> checks;
  const Mat id = Mat::Identity(r.algebra.dim(), r.algebra.dim());
  for (const double c : {1.0, 2.5}) {
    const BarrierSpec spec =
        BarrierSpec::make(r.algebra, 0.0, Vec::Constant(1, c));
    const BarrierSpec standard = BarrierSpec::standard(r.algebra);
    double worst = 0.0;
    for (long i = 0; i < r.trials; ++i) {
      auto rng = substream(r.seed, "classification", i);
      const Element x = sample_cone(r.algebra, rng, 0.8);
      const Mat h = barrier_hessian(spec, x).matrix;
      const Mat f = barrier_hessian(standard, x).matrix;
      const Mat ratio =
          Eigen::LLT<Mat>(f).solve(h).transpose();  // H''(x) F''(x)^{-1}
      worst = std::max(worst, (ratio - c * id).norm() / c);
    }
    std::ostringstream name;
    name << "hessian_ratio_c_" << c;
    checks.push_back(make_check(name.str(), r.trials, worst, r.tol));
  }
  return checks;
}

}  // namespace

double SuiteReport::max_violation() const {
  double worst = 0.0;
  for (const CheckResult& c : checks)
    worst = std::max(worst, c.max_violation);
  return worst;
}

bool SuiteReport::pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

std::string SuiteReport::render() const {
  std::ostringstream os;
  os << "symcone report\n";
  os << "suite: " << suite << "\n";
  os << "algebra: " << algebra << "\n";
  os << "seed: " << seed << "\n";
  os << "tol: " << nlohmann::json(tol).dump() << "\n";
  for (const CheckResult& c : checks) {
    os << "check: " << c.name << "  trials: " << c.trials
       << "  max_violation: " << fmt_e(c.max_violation)
       << "  pass: " << (c.pass ? "yes" : "no");
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
  }
  nlohmann::json summary{{"suite", suite},
                         {"algebra", algebra},
                         {"seed", seed},
                         {"tol", tol},
                         {"checks", checks.size()},
                         {"max_violation", max_violation()},
                         {"pass", pass()}};
  os << "SUMMARY " << summary.dump() << "\n";
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "fundamental", "thm12",    "geo-mean", "self-scaled",
      "polar",       "nondefective", "lie-span", "isotropy",
      "alpha",       "classification"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  SuiteReport report;
  report.suite = name;
  report.seed = config.seed;
  report.tol = config.tol;

  if (name == "fundamental") {
    const Resolved r = resolve(config, 1000, 0, 0);
    report.algebra = r.algebra.describe();
    report.checks = suite_fundamental(r);
  } else if (name == "thm12") {
    const Resolved r = resolve(config, 200, 0, 0);
    report.algebra = r.algebra.describe();
    report.checks = suite_thm12(r);
  } else if (name == "geo-mean") {
    const Resolved r = resolve(config, 500, 0, 0);
    report.algebra = r.algebra.describe();
    report.checks = suite_geo_mean(r);
  } else if (name == "self-scaled") {
    const Resolved r = resolve(config, 1000, 0, 0);
    report.algebra = r.algebra.describe();
    report.checks = suite_self_scaled(r);
  } else if (name == "polar") {
    const Resolved r = resolve(config, 200, 0, 0);
    report.algebra = r.algebra.describe();
    report.checks = suite_polar(r);
  } else if (name == "nondefective") {
    const Resolved r = resolve(config, 500, 8, 0);
    report.algebra = "-";
    report.checks = suite_nondefective(r);
  } else if (name == "lie-span") {
    const Resolved r = resolve(config, 1, 4, 100);
    report.algebra = "-";
    report.checks = suite_lie_span(r);
  } else if (name == "isotropy") {
    const Resolved r = resolve(config, 20, 3, 0);
    report.algebra = "-";
    report.checks = suite_isotropy(r);
  } else if (name == "alpha") {
    const Resolved r = resolve(config, 500, 0, 0);
    report.algebra = r.algebra.describe();
    report.checks = suite_alpha(r);
  } else if (name == "classification") {
    const Resolved r = resolve(config, 100, 0, 0);
    report.algebra = r.algebra.describe();
    report.checks = suite_classification(r);
  } else {
    throw StructuralError("unknown suite '" + name + "'");
  }
  return report;
}

}  // namespace symcone

#include "core/ipm.hpp"

#include <algorithm>
#include <cmath>

#include "core/geometry.hpp"

namespace symcone {

namespace {

struct StepInfo {
  double step_length = 0.0;
  double nt_residual = 0.0;
};

// Largest alpha with x + alpha*dx interior: through the eigenvalues of the
// direction seen from x.
double max_step(const Element& x, const Element& dx) {
  const Element scaled = quadratic_apply(power(x, -0.5), dx);
  const double lmin = min_eigenvalue(scaled);
  if (lmin >= 0.0) return std::numeric_limits<double>::infinity();
  return -1.0 / lmin;
}

IterateState nt_step_impl(const IterateState& state,
                          const ConicProgram& program, double sigma,
                          StepInfo* info) {
  if (!(sigma >= 0.0 && sigma <= 1.0))
    throw StructuralError("nt_step: sigma must lie in [0, 1]");
  if (!in_cone(state.x, 0.0) || !in_cone(state.s, 0.0))
    throw StructuralError("nt_step: iterate is not strictly interior");
  const double mu = inner(state.x, state.s) / program.algebra().rank();
  if (!(mu > 0.0)) throw StructuralError("nt_step: mu must be positive");

  const Algebra& alg = program.algebra();
  const Mat& amat = program.constraint_matrix();
  const Element w = scaling_point(state.x, state.s);
  if (info)
    info->nt_residual =
        norm(quadratic_apply(inverse(w), state.x) - state.s) / norm(state.s);

  const Element wr = sqrt(w);
  const Element v = quadratic_apply(inverse(wr), state.x);  // scaled point

  // Residuals are re-targeted each step so rounding drift cannot accumulate.
  const Vec rp = program.rhs() - amat * state.x.coords();
  Vec rd = program.objective().coords() - state.s.coords();
  rd -= amat.transpose() * state.y;

  // L(v) (dxs + dss) = sigma*mu*e - v o v in the scaled frame.
  const Element target =
      sigma * mu * alg.identity() - jordan_product(v, v);
  const Mat lv = mult_op(v).matrix;
  const Vec d = Eigen::LLT<Mat>(lv).solve(target.coords());

  const Mat pw = quadratic_rep(w).matrix;
  const Mat pwr = quadratic_rep(wr).matrix;

  const Mat schur = amat * pw * amat.transpose();
  Eigen::LLT<Mat> schur_llt(schur);
  if (schur_llt.info() != Eigen::Success)
    throw DegenerateProgramError(
        "nt_step: reduced system is singular (degenerate program)");
  const Vec rhs_y = rp - amat * (pwr * d) + amat * (pw * rd);
  const Vec dy = schur_llt.solve(rhs_y);
  const Vec ds = rd - amat.transpose() * dy;
  const Vec dx = pwr * d - pw * ds;

  const Element dx_el(alg, dx);
  const Element ds_el(alg, ds);
  const double alpha_limit =
      std::min(max_step(state.x, dx_el), max_step(state.s, ds_el));
  const double alpha = std::min(1.0, 0.99 * alpha_limit);
  if (alpha < 1e-14)
    throw StallError("nt_step: step length fell below 1e-14");
  if (info) info->step_length = alpha;

  IterateState next{state.x + alpha * dx_el, state.y + alpha * dy,
                    state.s + alpha * ds_el, 0.0};
  next.mu = inner(next.x, next.s) / alg.rank();
  return next;
}

}  // namespace

ConicProgram ConicProgram::make(Algebra algebra, Element c,
                                std::vector<Element> constraints, Vec b) {
  if (c.algebra() != algebra)
    throw StructuralError("ConicProgram: objective algebra mismatch");
  if (constraints.size() != static_cast<std::size_t>(b.size()))
    throw StructuralError(
        "ConicProgram: constraint and right-hand-side counts differ");
  const int m = static_cast<int>(b.size());
  if (m > algebra.dim())
    throw StructuralError("ConicProgram: more constraints than dimensions");
  Mat amat(m, algebra.dim());
  for (int i = 0; i < m; ++i) {
    if (constraints[i].algebra() != algebra)
      throw StructuralError("ConicProgram: constraint algebra mismatch");
    amat.row(i) = constraints[i].coords().transpose();
  }
  if (m > 0) {
    Eigen::ColPivHouseholderQR<Mat> qr(amat.transpose());
    if (qr.rank() < m)
      throw StructuralError(
          "ConicProgram: constraint elements are linearly dependent");
  }
  ConicProgram p;
  p.algebra_ = std::move(algebra);
  p.c_ = std::move(c);
  p.constraints_ = std::move(constraints);
  p.b_ = std::move(b);
  p.amat_ = std::move(amat);
  return p;
}

IterateState initial_state(const ConicProgram& program) {
  const Algebra& alg = program.algebra();
  const Element e = alg.identity();
  const Mat& amat = program.constraint_matrix();
  const int m = program.num_constraints();

  Element x = e;
  Vec y = Vec::Zero(m);
  Element s = program.objective();
  if (m > 0) {
    Eigen::LLT<Mat> gram(Mat(amat * amat.transpose()));
    if (gram.info() != Eigen::Success)
      throw DegenerateProgramError("initial_state: constraint Gram matrix "
                                   "is singular");
    const Vec u = gram.solve(program.rhs() - amat * e.coords());
    x = Element(alg, e.coords() + amat.transpose() * u);
    y = gram.solve(amat * (program.objective().coords() - e.coords()));
    s = Element(alg,
                program.objective().coords() - amat.transpose() * y);
  }
  if (!in_cone(x, 0.0))
    throw InitializationError(
        "initial_state: translating e into the constraint set leaves the "
        "cone; provide a program with a strictly feasible identity translate");
  if (!in_cone(s, 0.0))
    throw InitializationError(
        "initial_state: no strictly feasible dual start near e");
  return IterateState{x, y, s, inner(x, s) / alg.rank()};
}

IterateState nt_step(const IterateState& state, const ConicProgram& program,
                     double sigma) {
  return nt_step_impl(state, program, sigma, nullptr);
}

SolveReport solve(const ConicProgram& program, const SolveOptions& options) {
  if (options.max_iters < 1)
    throw StructuralError("solve: max_iters must be >= 1");
  const Mat& amat = program.constraint_matrix();

  IterateState state = initial_state(program);
  SolveReport report;
  report.max_nt_residual = 0.0;
  report.gap_trace.push_back(inner(state.x, state.s));

  const auto residuals = [&](const IterateState& st, double& rp, double& rd) {
    rp = (program.rhs() - amat * st.x.coords()).norm() /
         (1.0 + program.rhs().norm());
    rd = (program.objective().coords() - amat.transpose() * st.y -
          st.s.coords())
             .norm() /
         (1.0 + program.objective().coords().norm());
  };

  int iter = 0;
  SolveStatus status = SolveStatus::IterationLimit;
  double rp = 0.0, rd = 0.0;
  for (; iter < options.max_iters; ++iter) {
    const double gap = inner(state.x, state.s);
    const double objective = inner(program.objective(), state.x);
    residuals(state, rp, rd);
    if (gap <= options.tol * (1.0 + std::abs(objective)) &&
        rp <= options.tol && rd <= options.tol) {
      status = SolveStatus::Optimal;
      break;
    }
    StepInfo info;
    try {
      state = nt_step_impl(state, program, options.sigma, &info);
    } catch (const StallError&) {
      status = SolveStatus::Stall;
      break;
    }
    report.max_nt_residual =
        std::max(report.max_nt_residual, info.nt_residual);
    report.gap_trace.push_back(inner(state.x, state.s));
  }

  // The scaling identity is also checked at the final iterate.
  {
    const Element w = scaling_point(state.x, state.s);
    report.max_nt_residual = std::max(
        report.max_nt_residual,
        norm(quadratic_apply(inverse(w), state.x) - state.s) / norm(state.s));
  }

  residuals(state, rp, rd);
  report.status = status;
  report.iterations = iter;
  report.objective = inner(program.objective(), state.x);
  report.gap = inner(state.x, state.s);
  report.primal_residual = rp;
  report.dual_residual = rd;
  report.state = std::move(state);
  return report;
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::Stall:
      return "stall";
    case SolveStatus::IterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

}  // namespace symcone

#pragma once

#include <cstdint>
#include <vector>

#include "core/jordan.hpp"

namespace symcone {

class InitializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateProgramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// min <c, x> s.t. <a_i, x> = b_i, x in the cone of `algebra`.
class ConicProgram {
 public:
  // Validates m <= dim and linear independence of the constraint elements.
  static ConicProgram make(Algebra algebra, Element c,
                           std::vector<Element> constraints, Vec b);

  const Algebra& algebra() const { return algebra_; }
  const Element& objective() const { return c_; }
  const std::vector<Element>& constraints() const { return constraints_; }
  const Vec& rhs() const { return b_; }
  int num_constraints() const { return static_cast<int>(b_.size()); }

  // m x dim matrix whose rows are the constraint coordinates.
  const Mat& constraint_matrix() const { return amat_; }

 private:
  ConicProgram() = default;
  Algebra algebra_;
  Element c_;
  std::vector<Element> constraints_;
  Vec b_;
  Mat amat_;
};

struct IterateState {
  Element x;
  Vec y;
  Element s;
  double mu;  // <x, s> / rank
};

enum class SolveStatus { Optimal, Stall, IterationLimit };

struct SolveOptions {
  double tol = 1e-8;
  int max_iters = 50;
  double sigma = 0.1;  // fixed centering parameter, corrector-free
  std::uint64_t seed = 0;  // echoed into reports; the path itself is
                           // deterministic
};

struct SolveReport {
  SolveStatus status;
  int iterations;
  double objective;
  double gap;  // <x, s> at the final iterate
  double primal_residual;
  double dual_residual;
  double max_nt_residual;  // worst |P(w^{-1}) x - s| / |s| seen on the path
  std::vector<double> gap_trace;
  IterateState state;
};

// Strictly feasible start: e is translated into the affine constraint set
// (x0 = e + A^T u), the multipliers are chosen by least squares so that
// s0 = c - A^T y0 is closest to e. Throws InitializationError when either
// translate leaves the cone.
IterateState initial_state(const ConicProgram& program);

// One Nesterov-Todd step towards the sigma*mu center: solves the linearized
// central-path system in the frame scaled by the scaling point w of (x, s),
// then applies 0.99 of the largest step keeping both iterates interior.
IterateState nt_step(const IterateState& state, const ConicProgram& program,
                     double sigma);

SolveReport solve(const ConicProgram& program, const SolveOptions& options);

const char* to_string(SolveStatus status);

}  // namespace symcone

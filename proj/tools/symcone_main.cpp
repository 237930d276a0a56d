// Command-line front door for the symcone shared library. Talks to the
// library exclusively through the C API.
//
// Exit codes: 0 success / all checks passed, 1 numeric or domain failure
// (including a suite exceeding its tolerance), 2 usage or parse errors.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "symcone/symcone.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int exit_code_for(sc_status status) {
  switch (status) {
    case SC_OK:
      return kExitOk;
    case SC_ERROR_DOMAIN:
    case SC_ERROR_NUMERIC:
      return kExitFailure;
    case SC_ERROR_PARSE:
    case SC_ERROR_INVALID:
      return kExitUsage;
  }
  return kExitUsage;
}

int report_error(sc_status status) {
  std::cerr << "error: " << sc_last_error() << "\n";
  return exit_code_for(status);
}

struct StringGuard {
  char* ptr = nullptr;
  ~StringGuard() { sc_string_free(ptr); }
};

struct ElementGuard {
  sc_element* ptr = nullptr;
  ~ElementGuard() { sc_element_free(ptr); }
};

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream f(path);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(path);
  if (!f) return false;
  f << text;
  return static_cast<bool>(f);
}

int load_element(const std::string& path, ElementGuard& guard) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  const sc_status st = sc_element_parse(text.c_str(), &guard.ptr);
  if (st != SC_OK) return report_error(st);
  int flagged = 0;
  if (sc_near_boundary(guard.ptr, &flagged) == SC_OK && flagged)
    std::cerr << "warning: input '" << path
              << "' is near the cone boundary; geometric identities carry "
                 "no accuracy promise there\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::string algebra;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  long trials = 0;
  int n = 0;
  int samples = 0;
  std::string output;
};

int run_verify(const VerifyArgs& args) {
  std::ostringstream cfg;
  cfg << "{\"seed\":" << args.seed << ",\"tol\":" << args.tol;
  if (args.trials > 0) cfg << ",\"trials\":" << args.trials;
  if (args.n > 0) cfg << ",\"n\":" << args.n;
  if (args.samples > 0) cfg << ",\"samples\":" << args.samples;
  if (!args.algebra.empty()) cfg << ",\"algebra\":\"" << args.algebra << "\"";
  cfg << "}";

  StringGuard report;
  int pass = 0;
  const sc_status st =
      sc_run_suite(args.suite.c_str(), cfg.str().c_str(), &report.ptr, &pass);
  if (st != SC_OK) return report_error(st);
  if (!write_output(args.output, report.ptr)) {
    std::cerr << "error: cannot write '" << args.output << "'\n";
    return kExitUsage;
  }
  return pass ? kExitOk : kExitFailure;
}

struct ComputeArgs {
  std::string what;
  std::string a, b, x, s, at, to, spec, map, matrix;
  double t = 0.5;
  std::string output;
};

int run_compute(const ComputeArgs& args) {
  std::ostringstream out;

  const auto element_json = [](sc_element* e, std::string& text) {
    StringGuard s;
    const sc_status st = sc_element_to_json(e, &s.ptr);
    if (st != SC_OK) return st;
    text = s.ptr;
    return SC_OK;
  };

  const auto need = [&](const std::string& value, const char* flag) {
    if (!value.empty()) return true;
    std::cerr << "error: compute " << args.what << " requires " << flag
              << "\n";
    return false;
  };

  if (args.what == "geomean" || args.what == "distance" ||
      args.what == "geodesic") {
    if (!need(args.a, "--a") || !need(args.b, "--b")) return kExitUsage;
    ElementGuard a, b;
    int rc = load_element(args.a, a);
    if (rc != kExitOk) return rc;
    rc = load_element(args.b, b);
    if (rc != kExitOk) return rc;
    if (args.what == "distance") {
      double d = 0.0;
      const sc_status st = sc_riemannian_distance(a.ptr, b.ptr, &d);
      if (st != SC_OK) return report_error(st);
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.17g", d);
      out << "{\"distance\":" << buf << "}\n";
    } else {
      ElementGuard result;
      const sc_status st =
          args.what == "geomean"
              ? sc_geometric_mean(a.ptr, b.ptr, &result.ptr)
              : sc_geodesic(a.ptr, b.ptr, args.t, &result.ptr);
      if (st != SC_OK) return report_error(st);
      std::string text;
      const sc_status st2 = element_json(result.ptr, text);
      if (st2 != SC_OK) return report_error(st2);
      out << text << "\n";
    }
  } else if (args.what == "scaling-point") {
    if (!need(args.x, "--x") || !need(args.s, "--s")) return kExitUsage;
    ElementGuard x, s;
    int rc = load_element(args.x, x);
    if (rc != kExitOk) return rc;
    rc = load_element(args.s, s);
    if (rc != kExitOk) return rc;
    if (!args.spec.empty()) {
      std::string spec_text;
      if (!read_input(args.spec, spec_text)) {
        std::cerr << "error: cannot read '" << args.spec << "'\n";
        return kExitUsage;
      }
      ElementGuard w;
      double residual = 0.0;
      int flagged = 0;
      const sc_status st = sc_scaling_point_h(spec_text.c_str(), x.ptr, s.ptr,
                                              &w.ptr, &residual, &flagged);
      if (st != SC_OK) return report_error(st);
      std::string text;
      const sc_status st2 = element_json(w.ptr, text);
      if (st2 != SC_OK) return report_error(st2);
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.17g", residual);
      out << "{\"near_boundary_input\":" << (flagged ? "true" : "false")
          << ",\"residual\":" << buf << ",\"w\":" << text << "}\n";
    } else {
      ElementGuard w;
      const sc_status st = sc_scaling_point(x.ptr, s.ptr, &w.ptr);
      if (st != SC_OK) return report_error(st);
      std::string text;
      const sc_status st2 = element_json(w.ptr, text);
      if (st2 != SC_OK) return report_error(st2);
      out << text << "\n";
    }
  } else if (args.what == "barrier") {
    if (!need(args.spec, "--spec") || !need(args.x, "--x")) return kExitUsage;
    std::string spec_text;
    if (!read_input(args.spec, spec_text)) {
      std::cerr << "error: cannot read '" << args.spec << "'\n";
      return kExitUsage;
    }
    ElementGuard x;
    int rc = load_element(args.x, x);
    if (rc != kExitOk) return rc;
    double value = 0.0;
    sc_status st = sc_barrier_value(spec_text.c_str(), x.ptr, &value);
    if (st != SC_OK) return report_error(st);
    ElementGuard grad;
    st = sc_barrier_gradient(spec_text.c_str(), x.ptr, &grad.ptr);
    if (st != SC_OK) return report_error(st);
    std::string text;
    st = element_json(grad.ptr, text);
    if (st != SC_OK) return report_error(st);
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    out << "{\"gradient\":" << text << ",\"value\":" << buf << "}\n";
  } else if (args.what == "hessian-apply") {
    if (!need(args.spec, "--spec") || !need(args.at, "--at") ||
        !need(args.to, "--to"))
      return kExitUsage;
    std::string spec_text;
    if (!read_input(args.spec, spec_text)) {
      std::cerr << "error: cannot read '" << args.spec << "'\n";
      return kExitUsage;
    }
    ElementGuard at, to, result;
    int rc = load_element(args.at, at);
    if (rc != kExitOk) return rc;
    rc = load_element(args.to, to);
    if (rc != kExitOk) return rc;
    const sc_status st = sc_barrier_hessian_apply(spec_text.c_str(), at.ptr,
                                                  to.ptr, &result.ptr);
    if (st != SC_OK) return report_error(st);
    std::string text;
    const sc_status st2 = element_json(result.ptr, text);
    if (st2 != SC_OK) return report_error(st2);
    out << text << "\n";
  } else if (args.what == "polar") {
    if (!need(args.map, "--map")) return kExitUsage;
    std::string map_text;
    if (!read_input(args.map, map_text)) {
      std::cerr << "error: cannot read '" << args.map << "'\n";
      return kExitUsage;
    }
    StringGuard result;
    const sc_status st = sc_polar_decompose(map_text.c_str(), &result.ptr);
    if (st != SC_OK) return report_error(st);
    out << result.ptr << "\n";
  } else if (args.what == "factor") {
    if (!need(args.matrix, "--matrix")) return kExitUsage;
    std::string matrix_text;
    if (!read_input(args.matrix, matrix_text)) {
      std::cerr << "error: cannot read '" << args.matrix << "'\n";
      return kExitUsage;
    }
    StringGuard result;
    const sc_status st =
        sc_factor_nondefective(matrix_text.c_str(), &result.ptr);
    if (st != SC_OK) return report_error(st);
    out << result.ptr << "\n";
  } else {
    std::cerr << "error: unknown compute target '" << args.what << "'\n";
    return kExitUsage;
  }

  if (!write_output(args.output, out.str())) {
    std::cerr << "error: cannot write '" << args.output << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

struct SolveArgs {
  std::string program;
  double tol = 1e-8;
  int max_iters = 50;
  double sigma = 0.1;
  std::uint64_t seed = 0;
  std::string output;
};

int run_solve(const SolveArgs& args) {
  std::string program_text;
  if (!read_input(args.program, program_text)) {
    std::cerr << "error: cannot read '" << args.program << "'\n";
    return kExitUsage;
  }
  std::ostringstream options;
  options << "{\"tol\":" << args.tol << ",\"max_iters\":" << args.max_iters
          << ",\"sigma\":" << args.sigma << ",\"seed\":" << args.seed << "}";
  StringGuard report, status;
  const sc_status st = sc_solve(program_text.c_str(), options.str().c_str(),
                                &report.ptr, &status.ptr);
  if (st != SC_OK) return report_error(st);
  if (!write_output(args.output, report.ptr)) {
    std::cerr << "error: cannot write '" << args.output << "'\n";
    return kExitUsage;
  }
  return std::string(status.ptr) == "optimal" ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symcone: symmetric-cone toolkit (version " +
               std::string(sc_version()) + ")"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "run a verification suite and report violations");
  verify
      ->add_option("suite", verify_args.suite,
                   "one of: fundamental, thm12, geo-mean, self-scaled, polar, "
                   "nondefective, lie-span, isotropy, alpha, classification")
      ->required();
  verify->add_option("--algebra", verify_args.algebra,
                     "sym:N | spin:D | sum:sym:N+spin:D+...");
  verify->add_option("--seed", verify_args.seed, "random seed");
  verify->add_option("--tol", verify_args.tol, "violation tolerance");
  verify->add_option("--trials", verify_args.trials, "trial count");
  verify->add_option("--n", verify_args.n, "matrix size (matrix suites)");
  verify->add_option("--samples", verify_args.samples,
                     "sample count (lie-span)");
  verify->add_option("--output", verify_args.output, "report file");

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand(
      "compute", "compute a geometric quantity from serialized inputs");
  compute
      ->add_option("what", compute_args.what,
                   "one of: geomean, distance, geodesic, scaling-point, "
                   "barrier, hessian-apply, polar, factor")
      ->required();
  compute->add_option("--a", compute_args.a, "element file (or '-')");
  compute->add_option("--b", compute_args.b, "element file");
  compute->add_option("--x", compute_args.x, "element file");
  compute->add_option("--s", compute_args.s, "element file");
  compute->add_option("--at", compute_args.at, "element file");
  compute->add_option("--to", compute_args.to, "element file");
  compute->add_option("--spec", compute_args.spec, "barrier spec file");
  compute->add_option("--map", compute_args.map, "linear map file");
  compute->add_option("--matrix", compute_args.matrix, "matrix file");
  compute->add_option("--t", compute_args.t, "geodesic parameter");
  compute->add_option("--output", compute_args.output, "output file");

  SolveArgs solve_args;
  CLI::App* solve =
      app.add_subcommand("solve", "solve a conic program with NT steps");
  solve->add_option("program", solve_args.program, "program file (or '-')")
      ->required();
  solve->add_option("--tol", solve_args.tol, "duality gap tolerance");
  solve->add_option("--max-iters", solve_args.max_iters, "iteration limit");
  solve->add_option("--sigma", solve_args.sigma, "centering parameter");
  solve->add_option("--seed", solve_args.seed, "seed echoed into the report");
  solve->add_option("--output", solve_args.output, "report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed()) return run_verify(verify_args);
  if (compute->parsed()) return run_compute(compute_args);
  if (solve->parsed()) return run_solve(solve_args);
  return kExitUsage;
}

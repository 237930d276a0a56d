#include "symcone/symcone.h"

#include <cstring>
#include <new>
#include <string>

#include "core/geometry.hpp"
#include "core/serialize.hpp"
#include "core/suites.hpp"
#include "core/verify.hpp"

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
sc_status guarded(Fn&& fn) {
  try {
    fn();
    return SC_OK;
  } catch (const symcone::ParseError& e) {
    g_last_error = e.what();
    return SC_ERROR_PARSE;
  } catch (const symcone::DomainError& e) {
    g_last_error = e.what();
    return SC_ERROR_DOMAIN;
  } catch (const symcone::InitializationError& e) {
    g_last_error = e.what();
    return SC_ERROR_DOMAIN;
  } catch (const symcone::StructuralError& e) {
    g_last_error = e.what();
    return SC_ERROR_INVALID;
  } catch (const symcone::NumericalError& e) {
    g_last_error = e.what();
    return SC_ERROR_NUMERIC;
  } catch (const symcone::DegenerateProgramError& e) {
    g_last_error = e.what();
    return SC_ERROR_NUMERIC;
  } catch (const symcone::StallError& e) {
    g_last_error = e.what();
    return SC_ERROR_NUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SC_ERROR_INVALID;
  }
}

sc_status require(bool ok, const char* message) {
  if (ok) return SC_OK;
  g_last_error = message;
  return SC_ERROR_INVALID;
}

}  // namespace

struct sc_algebra {
  symcone::Algebra value;
};

struct sc_element {
  symcone::Element value;
};

namespace {

template <typename Fn>
sc_status unary_element(const sc_element* x, sc_element** out, Fn&& fn) {
  if (require(x && out, "element operation: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] { *out = new sc_element{fn(x->value)}; });
}

template <typename Fn>
sc_status binary_element(const sc_element* x, const sc_element* y,
                         sc_element** out, Fn&& fn) {
  if (require(x && y && out, "element operation: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] { *out = new sc_element{fn(x->value, y->value)}; });
}

symcone::BarrierSpec spec_from_text(const char* spec_json) {
  return symcone::barrier_spec_from_json(
      symcone::parse_json_text(spec_json ? spec_json : ""));
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "0.1.0"; }

const char* sc_last_error(void) { return g_last_error.c_str(); }

void sc_string_free(char* s) { delete[] s; }

sc_status sc_algebra_parse(const char* text, sc_algebra** out) {
  if (require(text && out, "sc_algebra_parse: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    const std::string s(text);
    symcone::Algebra a =
        (!s.empty() && (s[0] == '{' || s[0] == '"'))
            ? symcone::algebra_from_json_or_spec(symcone::parse_json_text(s))
            : symcone::parse_algebra_spec(s);
    *out = new sc_algebra{std::move(a)};
  });
}

sc_status sc_algebra_to_json(const sc_algebra* a, char** out) {
  if (require(a && out, "sc_algebra_to_json: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded(
      [&] { *out = copy_string(symcone::algebra_to_json(a->value).dump()); });
}

int sc_algebra_dim(const sc_algebra* a) { return a ? a->value.dim() : -1; }

int sc_algebra_rank(const sc_algebra* a) { return a ? a->value.rank() : -1; }

void sc_algebra_free(sc_algebra* a) { delete a; }

sc_status sc_element_parse(const char* json, sc_element** out) {
  if (require(json && out, "sc_element_parse: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    *out = new sc_element{
        symcone::element_from_json(symcone::parse_json_text(json))};
  });
}

sc_status sc_element_to_json(const sc_element* e, char** out) {
  if (require(e && out, "sc_element_to_json: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded(
      [&] { *out = copy_string(symcone::element_to_json(e->value).dump()); });
}

sc_status sc_element_identity(const sc_algebra* a, sc_element** out) {
  if (require(a && out, "sc_element_identity: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] { *out = new sc_element{a->value.identity()}; });
}

sc_status sc_element_sample_cone(const sc_algebra* a, uint64_t seed,
                                 double spread, sc_element** out) {
  if (require(a && out, "sc_element_sample_cone: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    *out = new sc_element{symcone::sample_cone(a->value, seed, spread)};
  });
}

void sc_element_free(sc_element* e) { delete e; }

sc_status sc_jordan_product(const sc_element* x, const sc_element* y,
                            sc_element** out) {
  return binary_element(x, y, out, [](const auto& a, const auto& b) {
    return symcone::jordan_product(a, b);
  });
}

sc_status sc_inverse(const sc_element* x, sc_element** out) {
  return unary_element(x, out,
                       [](const auto& a) { return symcone::inverse(a); });
}

sc_status sc_sqrt(const sc_element* x, sc_element** out) {
  return unary_element(x, out, [](const auto& a) { return symcone::sqrt(a); });
}

sc_status sc_power(const sc_element* x, double t, sc_element** out) {
  return unary_element(x, out,
                       [t](const auto& a) { return symcone::power(a, t); });
}

sc_status sc_exp(const sc_element* x, sc_element** out) {
  return unary_element(x, out, [](const auto& a) { return symcone::exp(a); });
}

sc_status sc_log(const sc_element* x, sc_element** out) {
  return unary_element(x, out, [](const auto& a) { return symcone::log(a); });
}

sc_status sc_det_trace(const sc_element* x, double* det, double* trace) {
  if (require(x && det && trace, "sc_det_trace: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    const symcone::DetTrace dt = symcone::det_trace(x->value);
    *det = dt.det;
    *trace = dt.trace;
  });
}

sc_status sc_inner(const sc_element* x, const sc_element* y, double* out) {
  if (require(x && y && out, "sc_inner: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] { *out = symcone::inner(x->value, y->value); });
}

sc_status sc_in_cone(const sc_element* x, double margin, int* out) {
  if (require(x && out, "sc_in_cone: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] { *out = symcone::in_cone(x->value, margin) ? 1 : 0; });
}

sc_status sc_near_boundary(const sc_element* x, int* out) {
  if (require(x && out, "sc_near_boundary: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] { *out = symcone::near_boundary(x->value) ? 1 : 0; });
}

sc_status sc_geometric_mean(const sc_element* a, const sc_element* b,
                            sc_element** out) {
  return binary_element(a, b, out, [](const auto& x, const auto& y) {
    return symcone::geometric_mean(x, y);
  });
}

sc_status sc_riemannian_distance(const sc_element* a, const sc_element* b,
                                 double* out) {
  if (require(a && b && out, "sc_riemannian_distance: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded(
      [&] { *out = symcone::riemannian_distance(a->value, b->value); });
}

sc_status sc_geodesic(const sc_element* a, const sc_element* b, double t,
                      sc_element** out) {
  return binary_element(a, b, out, [t](const auto& x, const auto& y) {
    return symcone::geodesic(x, y, t);
  });
}

sc_status sc_scaling_point(const sc_element* x, const sc_element* s,
                           sc_element** out) {
  return binary_element(x, s, out, [](const auto& a, const auto& b) {
    return symcone::scaling_point(a, b);
  });
}

sc_status sc_barrier_value(const char* spec_json, const sc_element* x,
                           double* out) {
  if (require(spec_json && x && out, "sc_barrier_value: null argument") !=
      SC_OK)
    return SC_ERROR_INVALID;
  return guarded(
      [&] { *out = symcone::barrier_value(spec_from_text(spec_json), x->value); });
}

sc_status sc_barrier_gradient(const char* spec_json, const sc_element* x,
                              sc_element** out) {
  if (require(spec_json && x && out, "sc_barrier_gradient: null argument") !=
      SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    *out = new sc_element{
        symcone::barrier_gradient(spec_from_text(spec_json), x->value)};
  });
}

sc_status sc_barrier_hessian_apply(const char* spec_json,
                                   const sc_element* at, const sc_element* v,
                                   sc_element** out) {
  if (require(spec_json && at && v && out,
              "sc_barrier_hessian_apply: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    *out = new sc_element{symcone::barrier_hessian_apply(
        spec_from_text(spec_json), at->value, v->value)};
  });
}

sc_status sc_scaling_point_h(const char* spec_json, const sc_element* x,
                             const sc_element* s, sc_element** w,
                             double* residual, int* near_boundary) {
  if (require(spec_json && x && s && w && residual,
              "sc_scaling_point_h: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    symcone::ScalingReport rep =
        symcone::scaling_point_h(spec_from_text(spec_json), x->value, s->value);
    *w = new sc_element{std::move(rep.w)};
    *residual = rep.residual;
    if (near_boundary) *near_boundary = rep.near_boundary_input ? 1 : 0;
  });
}

sc_status sc_conjugate_value(const char* spec_json, const sc_element* s,
                             double* out) {
  if (require(spec_json && s && out, "sc_conjugate_value: null argument") !=
      SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    *out = symcone::conjugate_value(spec_from_text(spec_json), s->value);
  });
}

sc_status sc_newton_decrement_sq(const char* spec_json, const sc_element* x,
                                 double* out) {
  if (require(spec_json && x && out,
              "sc_newton_decrement_sq: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    *out = symcone::newton_decrement_sq(spec_from_text(spec_json), x->value);
  });
}

sc_status sc_polar_decompose(const char* linmap_json, char** result_json) {
  if (require(linmap_json && result_json,
              "sc_polar_decompose: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    const symcone::LinMap theta =
        symcone::linmap_from_json(symcone::parse_json_text(linmap_json));
    const symcone::PolarResult res = symcone::polar_decompose(theta);
    symcone::json out{{"omega", symcone::matrix_to_json(res.omega.matrix)},
                      {"w", symcone::element_to_json(res.w)},
                      {"residual", res.residual}};
    *result_json = copy_string(out.dump());
  });
}

sc_status sc_factor_nondefective(const char* matrix_json,
                                 char** result_json) {
  if (require(matrix_json && result_json,
              "sc_factor_nondefective: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    const symcone::Mat n =
        symcone::matrix_from_json(symcone::parse_json_text(matrix_json));
    const symcone::NondefectiveFactors f = symcone::factor_nondefective(n);
    symcone::json out{{"x", symcone::matrix_to_json(f.x)},
                      {"s", symcone::matrix_to_json(f.s)}};
    *result_json = copy_string(out.dump());
  });
}

sc_status sc_rotation_from(const char* matrix_json, char** result_json) {
  if (require(matrix_json && result_json,
              "sc_rotation_from: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    const symcone::Mat n =
        symcone::matrix_from_json(symcone::parse_json_text(matrix_json));
    *result_json =
        copy_string(symcone::matrix_to_json(symcone::rotation_from(n)).dump());
  });
}

sc_status sc_run_suite(const char* suite, const char* config_json,
                       char** report, int* pass) {
  if (require(suite && report && pass, "sc_run_suite: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    symcone::SuiteConfig cfg;
    if (config_json && *config_json) {
      const symcone::json j = symcone::parse_json_text(config_json);
      if (!j.is_object())
        throw symcone::ParseError("suite config: expected an object");
      if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
      if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
      if (j.contains("trials")) cfg.trials = j["trials"].get<long>();
      if (j.contains("n")) cfg.n = j["n"].get<int>();
      if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
      if (j.contains("algebra"))
        cfg.algebra = symcone::algebra_from_json_or_spec(j["algebra"]);
    }
    const symcone::SuiteReport rep = symcone::run_suite(suite, cfg);
    *report = copy_string(rep.render());
    *pass = rep.pass() ? 1 : 0;
  });
}

sc_status sc_solve(const char* program_json, const char* options_json,
                   char** report, char** status_out) {
  if (require(program_json && report && status_out,
              "sc_solve: null argument") != SC_OK)
    return SC_ERROR_INVALID;
  return guarded([&] {
    const symcone::ConicProgram program =
        symcone::program_from_json(symcone::parse_json_text(program_json));
    symcone::SolveOptions options;
    if (options_json && *options_json) {
      const symcone::json j = symcone::parse_json_text(options_json);
      if (!j.is_object())
        throw symcone::ParseError("solve options: expected an object");
      if (j.contains("tol")) options.tol = j["tol"].get<double>();
      if (j.contains("max_iters"))
        options.max_iters = j["max_iters"].get<int>();
      if (j.contains("sigma")) options.sigma = j["sigma"].get<double>();
      if (j.contains("seed")) options.seed = j["seed"].get<std::uint64_t>();
    }
    const symcone::SolveReport res = symcone::solve(program, options);
    *report = copy_string(symcone::render_solve_report(program, options, res));
    *status_out = copy_string(symcone::to_string(res.status));
  });
}

}  // extern "C"

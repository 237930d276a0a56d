// Exercises the shared-library surface: handles, status codes, reports.

#include <doctest.h>

#include <cmath>
#include <string>

#include "symcone/symcone.h"

namespace {

struct Str {
  char* ptr = nullptr;
  ~Str() { sc_string_free(ptr); }
  std::string view() const { return ptr ? ptr : ""; }
};

struct Alg {
  sc_algebra* ptr = nullptr;
  ~Alg() { sc_algebra_free(ptr); }
};

struct Elem {
  sc_element* ptr = nullptr;
  ~Elem() { sc_element_free(ptr); }
};

}  // namespace

TEST_CASE("algebra handles") {
  Alg a;
  REQUIRE(sc_algebra_parse("sym:3", &a.ptr) == SC_OK);
  CHECK(sc_algebra_dim(a.ptr) == 6);
  CHECK(sc_algebra_rank(a.ptr) == 3);

  Str json;
  REQUIRE(sc_algebra_to_json(a.ptr, &json.ptr) == SC_OK);
  Alg b;
  REQUIRE(sc_algebra_parse(json.ptr, &b.ptr) == SC_OK);
  CHECK(sc_algebra_dim(b.ptr) == 6);

  Alg sum;
  REQUIRE(sc_algebra_parse("sum:sym:2+spin:4", &sum.ptr) == SC_OK);
  CHECK(sc_algebra_dim(sum.ptr) == 7);
  CHECK(sc_algebra_rank(sum.ptr) == 4);

  Alg bad;
  CHECK(sc_algebra_parse("cube:3", &bad.ptr) == SC_ERROR_PARSE);
  CHECK(std::string(sc_last_error()).size() > 0);
}

TEST_CASE("element handles and arithmetic") {
  Alg a;
  REQUIRE(sc_algebra_parse("spin:3", &a.ptr) == SC_OK);
  Elem e;
  REQUIRE(sc_element_identity(a.ptr, &e.ptr) == SC_OK);

  double det = 0.0, trace = 0.0;
  REQUIRE(sc_det_trace(e.ptr, &det, &trace) == SC_OK);
  CHECK(det == doctest::Approx(1.0));
  CHECK(trace == doctest::Approx(2.0));

  Elem x;
  REQUIRE(sc_element_sample_cone(a.ptr, 42, 0.8, &x.ptr) == SC_OK);
  int interior = 0;
  REQUIRE(sc_in_cone(x.ptr, 0.0, &interior) == SC_OK);
  CHECK(interior == 1);
  int flagged = -1;
  REQUIRE(sc_near_boundary(x.ptr, &flagged) == SC_OK);
  CHECK(flagged == 0);

  // inverse round trip through json
  Elem inv, back;
  REQUIRE(sc_inverse(x.ptr, &inv.ptr) == SC_OK);
  REQUIRE(sc_inverse(inv.ptr, &back.ptr) == SC_OK);
  Str xj, bj;
  REQUIRE(sc_element_to_json(x.ptr, &xj.ptr) == SC_OK);
  REQUIRE(sc_element_to_json(back.ptr, &bj.ptr) == SC_OK);
  Elem xe, be;
  REQUIRE(sc_element_parse(xj.ptr, &xe.ptr) == SC_OK);
  REQUIRE(sc_element_parse(bj.ptr, &be.ptr) == SC_OK);
  double ip = 0.0, nx = 0.0;
  REQUIRE(sc_inner(xe.ptr, be.ptr, &ip) == SC_OK);
  REQUIRE(sc_inner(xe.ptr, xe.ptr, &nx) == SC_OK);
  CHECK(ip == doctest::Approx(nx).epsilon(1e-9));
}

TEST_CASE("status codes by failure class") {
  Elem bad;
  CHECK(sc_element_parse("{broken", &bad.ptr) == SC_ERROR_PARSE);

  Alg a;
  REQUIRE(sc_algebra_parse("sym:2", &a.ptr) == SC_OK);
  Elem e, neg, out;
  REQUIRE(sc_element_identity(a.ptr, &e.ptr) == SC_OK);
  REQUIRE(sc_element_parse(
              R"({"algebra":"sym:2","coords":[-1,-1,0]})", &neg.ptr) == SC_OK);
  CHECK(sc_log(neg.ptr, &out.ptr) == SC_ERROR_DOMAIN);
  CHECK(sc_riemannian_distance(neg.ptr, e.ptr, nullptr) == SC_ERROR_INVALID);
  double d = 0.0;
  CHECK(sc_riemannian_distance(neg.ptr, e.ptr, &d) == SC_ERROR_DOMAIN);

  Elem other;
  Alg sp;
  REQUIRE(sc_algebra_parse("spin:3", &sp.ptr) == SC_OK);
  REQUIRE(sc_element_identity(sp.ptr, &other.ptr) == SC_OK);
  Elem prod;
  CHECK(sc_jordan_product(e.ptr, other.ptr, &prod.ptr) == SC_ERROR_INVALID);
}

TEST_CASE("geometry and barrier surface") {
  Alg a;
  REQUIRE(sc_algebra_parse("sym:2", &a.ptr) == SC_OK);
  Elem x, s;
  REQUIRE(sc_element_sample_cone(a.ptr, 7, 0.6, &x.ptr) == SC_OK);
  REQUIRE(sc_element_sample_cone(a.ptr, 8, 0.6, &s.ptr) == SC_OK);

  // scaling point round trip: apply the barrier hessian at w back to x
  Elem w;
  double residual = -1.0;
  int flagged = -1;
  const char* spec = R"({"algebra":"sym:2"})";
  REQUIRE(sc_scaling_point_h(spec, x.ptr, s.ptr, &w.ptr, &residual,
                             &flagged) == SC_OK);
  CHECK(residual <= 1e-9);
  CHECK(flagged == 0);
  Elem image;
  REQUIRE(sc_barrier_hessian_apply(spec, w.ptr, x.ptr, &image.ptr) == SC_OK);
  double gap = 0.0, ss = 0.0;
  REQUIRE(sc_inner(image.ptr, s.ptr, &gap) == SC_OK);
  REQUIRE(sc_inner(s.ptr, s.ptr, &ss) == SC_OK);
  CHECK(gap == doctest::Approx(ss).epsilon(1e-9));

  // geometric mean of x and x^{-1} is the identity
  Elem xi, mean, e;
  REQUIRE(sc_inverse(x.ptr, &xi.ptr) == SC_OK);
  REQUIRE(sc_geometric_mean(x.ptr, xi.ptr, &mean.ptr) == SC_OK);
  REQUIRE(sc_element_identity(a.ptr, &e.ptr) == SC_OK);
  double dist = 0.0;
  REQUIRE(sc_riemannian_distance(mean.ptr, e.ptr, &dist) == SC_OK);
  CHECK(dist <= 1e-7);

  double nu = 0.0;
  REQUIRE(sc_newton_decrement_sq(spec, x.ptr, &nu) == SC_OK);
  CHECK(nu == doctest::Approx(2.0).epsilon(1e-9));

  double conj = 0.0;
  REQUIRE(sc_conjugate_value(spec, e.ptr, &conj) == SC_OK);
  CHECK(conj == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("matrix factorization surface") {
  Str polar;
  const char* id_map =
      R"({"algebra":"sym:2","matrix":[[1,0,0],[0,1,0],[0,0,1]]})";
  REQUIRE(sc_polar_decompose(id_map, &polar.ptr) == SC_OK);
  CHECK(polar.view().find("\"residual\"") != std::string::npos);

  Str factors;
  CHECK(sc_factor_nondefective("[[1,0],[0,-1]]", &factors.ptr) ==
        SC_ERROR_DOMAIN);
  CHECK(std::string(sc_last_error()).find("not in K") != std::string::npos);
  REQUIRE(sc_factor_nondefective("[[2,0],[0,3]]", &factors.ptr) == SC_OK);

  Str rot;
  REQUIRE(sc_rotation_from("[[2,0],[1,3]]", &rot.ptr) == SC_OK);
}

TEST_CASE("suites through the C surface are deterministic") {
  const char* config = R"({"seed":5,"tol":1e-8,"trials":40,"algebra":"sym:3"})";
  Str first, second;
  int pass1 = 0, pass2 = 0;
  REQUIRE(sc_run_suite("geo-mean", config, &first.ptr, &pass1) == SC_OK);
  REQUIRE(sc_run_suite("geo-mean", config, &second.ptr, &pass2) == SC_OK);
  CHECK(pass1 == 1);
  CHECK(first.view() == second.view());

  Str none;
  int pass = 0;
  CHECK(sc_run_suite("bogus", "{}", &none.ptr, &pass) == SC_ERROR_INVALID);
}

TEST_CASE("solver through the C surface") {
  const char* program = R"({
    "algebra": {"kind":"sym","n":2},
    "c": [1,1,0],
    "A": [[1,0,0]],
    "b": [1]
  })";
  Str report, status;
  REQUIRE(sc_solve(program, R"({"tol":1e-7})", &report.ptr, &status.ptr) ==
          SC_OK);
  CHECK(status.view() == "optimal");
  CHECK(report.view().find("SUMMARY") != std::string::npos);

  Str r2, s2;
  CHECK(sc_solve("{bad json", "", &r2.ptr, &s2.ptr) == SC_ERROR_PARSE);

  // infeasible identity translate surfaces as a domain failure
  const char* infeasible = R"({
    "algebra": {"kind":"sym","n":2},
    "c": [1,1,0],
    "A": [[1,0,0]],
    "b": [-5]
  })";
  Str r3, s3;
  CHECK(sc_solve(infeasible, "", &r3.ptr, &s3.ptr) == SC_ERROR_DOMAIN);
}

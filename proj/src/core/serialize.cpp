#include "core/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace symcone {

namespace {

const json& require_field(const json& j, const char* name,
                          const char* where) {
  auto it = j.find(name);
  if (it == j.end())
    throw ParseError(std::string(where) + ": missing field '" + name + "'");
  return *it;
}

int require_int(const json& j, const char* name, const char* where) {
  const json& f = require_field(j, name, where);
  if (!f.is_number_integer())
    throw ParseError(std::string(where) + ": field '" + name +
                     "' must be an integer");
  return f.get<int>();
}

double require_number(const json& j, const char* name, const char* where) {
  const json& f = require_field(j, name, where);
  if (!f.is_number())
    throw ParseError(std::string(where) + ": field '" + name +
                     "' must be a number");
  return f.get<double>();
}

Vec vector_from_json(const json& j, const char* where) {
  if (!j.is_array())
    throw ParseError(std::string(where) + ": expected an array of numbers");
  Vec v(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number())
      throw ParseError(std::string(where) + ": expected an array of numbers");
    v[static_cast<int>(i)] = j[i].get<double>();
  }
  return v;
}

json vector_to_json(const Vec& v) {
  json j = json::array();
  for (int i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

int parse_positive_int(std::string_view text, const char* where) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0)
    throw ParseError(std::string(where) + ": bad size '" + std::string(text) +
                     "'");
  return value;
}

Algebra parse_single_block_spec(std::string_view spec) {
  if (spec.rfind("sym:", 0) == 0)
    return Algebra::sym(parse_positive_int(spec.substr(4), "algebra spec"));
  if (spec.rfind("spin:", 0) == 0)
    return Algebra::spin(parse_positive_int(spec.substr(5), "algebra spec"));
  throw ParseError("algebra spec: expected 'sym:N' or 'spin:D', got '" +
                   std::string(spec) + "'");
}

}  // namespace

json algebra_to_json(const Algebra& a) {
  const auto block_json = [](const Block& b) {
    json j;
    if (b.kind == BlockKind::Sym) {
      j["kind"] = "sym";
      j["n"] = b.size;
    } else {
      j["kind"] = "spin";
      j["d"] = b.size;
    }
    return j;
  };
  if (a.irreducible()) return block_json(a.blocks()[0]);
  json parts = json::array();
  for (const Block& b : a.blocks()) parts.push_back(block_json(b));
  return json{{"kind", "sum"}, {"parts", parts}};
}

Algebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("algebra: expected an object");
  const json& kind = require_field(j, "kind", "algebra");
  if (!kind.is_string()) throw ParseError("algebra: 'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "sym") {
    const int n = require_int(j, "n", "algebra");
    if (n < 1) throw ParseError("algebra: sym needs n >= 1");
    return Algebra::sym(n);
  }
  if (k == "spin") {
    const int d = require_int(j, "d", "algebra");
    if (d < 2) throw ParseError("algebra: spin needs d >= 2");
    return Algebra::spin(d);
  }
  if (k == "sum") {
    const json& parts = require_field(j, "parts", "algebra");
    if (!parts.is_array() || parts.empty())
      throw ParseError("algebra: 'parts' must be a nonempty array");
    std::vector<Algebra> list;
    list.reserve(parts.size());
    for (const json& p : parts) list.push_back(algebra_from_json(p));
    return Algebra::direct_sum(list);
  }
  throw ParseError("algebra: unknown kind '" + k + "'");
}

Algebra parse_algebra_spec(const std::string& spec) {
  std::string_view s(spec);
  if (s.rfind("sum:", 0) == 0) {
    s.remove_prefix(4);
    std::vector<Algebra> parts;
    while (!s.empty()) {
      const std::size_t plus = s.find('+');
      const std::string_view part =
          plus == std::string_view::npos ? s : s.substr(0, plus);
      parts.push_back(parse_single_block_spec(part));
      if (plus == std::string_view::npos) break;
      s.remove_prefix(plus + 1);
    }
    if (parts.empty()) throw ParseError("algebra spec: empty sum");
    return Algebra::direct_sum(parts);
  }
  return parse_single_block_spec(s);
}

Algebra algebra_from_json_or_spec(const json& j) {
  if (j.is_string()) return parse_algebra_spec(j.get<std::string>());
  return algebra_from_json(j);
}

json element_to_json(const Element& e) {
  return json{{"algebra", algebra_to_json(e.algebra())},
              {"coords", vector_to_json(e.coords())}};
}

Element element_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("element: expected an object");
  const Algebra a =
      algebra_from_json_or_spec(require_field(j, "algebra", "element"));
  Vec coords = vector_from_json(require_field(j, "coords", "element"),
                                "element coords");
  if (coords.size() != a.dim())
    throw ParseError("element: coords length " +
                     std::to_string(coords.size()) +
                     " does not match algebra dimension " +
                     std::to_string(a.dim()));
  return Element(a, std::move(coords));
}

json barrier_spec_to_json(const BarrierSpec& spec) {
  return json{{"algebra", algebra_to_json(spec.algebra())},
              {"c0", spec.c0()},
              {"weights", vector_to_json(spec.weights())}};
}

BarrierSpec barrier_spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("barrier spec: expected an object");
  Algebra a =
      algebra_from_json_or_spec(require_field(j, "algebra", "barrier spec"));
  const double c0 =
      j.contains("c0") ? require_number(j, "c0", "barrier spec") : 0.0;
  Vec weights;
  if (j.contains("weights"))
    weights = vector_from_json(j["weights"], "barrier spec weights");
  else
    weights = Vec::Ones(static_cast<int>(a.block_count()));
  try {
    return BarrierSpec::make(std::move(a), c0, std::move(weights));
  } catch (const StructuralError& err) {
    throw ParseError(std::string("barrier spec: ") + err.what());
  }
}

ConicProgram program_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("program: expected an object");
  Algebra a =
      algebra_from_json_or_spec(require_field(j, "algebra", "program"));
  Vec c = vector_from_json(require_field(j, "c", "program"), "program c");
  if (c.size() != a.dim())
    throw ParseError("program: objective length does not match algebra");
  const json& rows = require_field(j, "A", "program");
  if (!rows.is_array()) throw ParseError("program: 'A' must be an array");
  std::vector<Element> constraints;
  constraints.reserve(rows.size());
  for (const json& row : rows) {
    Vec r = vector_from_json(row, "program A row");
    if (r.size() != a.dim())
      throw ParseError("program: constraint row length does not match "
                       "algebra");
    constraints.emplace_back(a, std::move(r));
  }
  Vec b = vector_from_json(require_field(j, "b", "program"), "program b");
  try {
    return ConicProgram::make(a, Element(a, std::move(c)),
                              std::move(constraints), std::move(b));
  } catch (const StructuralError& err) {
    throw ParseError(std::string("program: ") + err.what());
  }
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(m(i, j2));
    rows.push_back(row);
  }
  return rows;
}

Mat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("matrix: expected a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw ParseError("matrix: rows must be nonempty arrays");
  const int cols = static_cast<int>(j[0].size());
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw ParseError("matrix: ragged rows");
    for (int k = 0; k < cols; ++k) {
      if (!j[i][k].is_number()) throw ParseError("matrix: non-numeric entry");
      m(i, k) = j[i][k].get<double>();
    }
  }
  return m;
}

json linmap_to_json(const LinMap& m) {
  return json{{"algebra", algebra_to_json(m.algebra)},
              {"matrix", matrix_to_json(m.matrix)}};
}

LinMap linmap_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("linmap: expected an object");
  Algebra a =
      algebra_from_json_or_spec(require_field(j, "algebra", "linmap"));
  Mat m = matrix_from_json(require_field(j, "matrix", "linmap"));
  if (m.rows() != a.dim() || m.cols() != a.dim())
    throw ParseError("linmap: matrix size does not match algebra dimension");
  return LinMap{std::move(a), std::move(m)};
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return j;
}

namespace {

std::string fmt_scalar(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

}  // namespace

std::string render_solve_report(const ConicProgram& program,
                                const SolveOptions& options,
                                const SolveReport& report) {
  std::ostringstream os;
  os << "symcone solve report\n";
  os << "algebra: " << program.algebra().describe() << "\n";
  os << "constraints: " << program.num_constraints() << "\n";
  os << "sigma: " << json(options.sigma).dump() << "\n";
  os << "tol: " << json(options.tol).dump() << "\n";
  os << "seed: " << options.seed << "\n";
  os << "status: " << to_string(report.status) << "\n";
  os << "iterations: " << report.iterations << "\n";
  os << "objective: " << fmt_scalar(report.objective) << "\n";
  os << "gap: " << fmt_scalar(report.gap) << "\n";
  os << "primal_residual: " << fmt_scalar(report.primal_residual) << "\n";
  os << "dual_residual: " << fmt_scalar(report.dual_residual) << "\n";
  os << "max_nt_residual: " << fmt_scalar(report.max_nt_residual) << "\n";
  json trace = json::array();
  for (double g : report.gap_trace) trace.push_back(g);
  os << "gap_trace: " << trace.dump() << "\n";
  os << "x: " << vector_to_json(report.state.x.coords()).dump() << "\n";
  os << "y: " << vector_to_json(report.state.y).dump() << "\n";
  os << "s: " << vector_to_json(report.state.s.coords()).dump() << "\n";
  const json summary{{"status", to_string(report.status)},
                     {"iterations", report.iterations},
                     {"objective", report.objective},
                     {"gap", report.gap},
                     {"max_nt_residual", report.max_nt_residual},
                     {"seed", options.seed}};
  os << "SUMMARY " << summary.dump() << "\n";
  return os.str();
}

}  // namespace symcone

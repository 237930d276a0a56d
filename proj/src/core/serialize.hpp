#pragma once

#include <string>

#include <json.hpp>

#include "core/barrier.hpp"
#include "core/ipm.hpp"

namespace symcone {

using json = nlohmann::json;

// All readers throw ParseError on malformed input.

// {"kind":"sym","n":N} | {"kind":"spin","d":D} | {"kind":"sum","parts":[...]}
json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

// Compact command-line form: "sym:3", "spin:4", "sum:sym:3+spin:4".
Algebra parse_algebra_spec(const std::string& spec);

// Accepts either the structured object or the compact string form.
Algebra algebra_from_json_or_spec(const json& j);

// {"algebra": ..., "coords": [...]} in the orthonormal coordinate basis.
json element_to_json(const Element& e);
Element element_from_json(const json& j);

// {"algebra": ..., "c0": ..., "weights": [...]}
json barrier_spec_to_json(const BarrierSpec& spec);
BarrierSpec barrier_spec_from_json(const json& j);

// {"algebra": ..., "c": [...], "A": [[...], ...], "b": [...]}
ConicProgram program_from_json(const json& j);

// Dense matrices as row arrays: [[...], ...]
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

// {"algebra": ..., "matrix": [[...], ...]}
json linmap_to_json(const LinMap& m);
LinMap linmap_from_json(const json& j);

json parse_json_text(const std::string& text);

// Line-oriented solver report ending in a machine-readable SUMMARY record;
// deterministic for a fixed (program, options).
std::string render_solve_report(const ConicProgram& program,
                                const SolveOptions& options,
                                const SolveReport& report);

}  // namespace symcone

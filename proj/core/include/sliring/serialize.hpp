#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sliring/fuzzy_number.hpp"
#include "sliring/sli.hpp"
#include "sliring/solver.hpp"

// JSON and CSV formats. Every parser throws ErrorKind::parse on malformed
// documents; all writers are deterministic (fixed key order, shortest
// round-trip decimal for doubles).
namespace sliring::io {

using Json = nlohmann::ordered_json;

// Shortest decimal string that parses back to the same double.
std::string format_number(double x);

// {"levels": [...], "lower": [...], "upper": [...]}
Json to_json(const FuzzyNumber& f);
// Accepts the explicit form or {"trapezoid": [a, b, c, d]}, which is
// sampled on `grid`.
FuzzyNumber fuzzy_from_json(const Json& j, const LevelGrid& grid = LevelGrid());

// alpha,lower,upper header then one row per grid level, ascending α.
std::string alpha_cut_csv(const FuzzyNumber& f);

// Basis description. Exactly one of `generator` and `elements` is set.
struct BasisSpec {
  std::optional<Trapezoid> generator;
  std::size_t n = 0;
  std::size_t levels = kDefaultLevelCount;
  double threshold = kDefaultSliThreshold;
  std::optional<std::vector<FuzzyNumber>> elements;
};

// {"generator": [a,b,c,d], "n": k, "levels": M+1, "threshold": t} or
// {"elements": [<fuzzy number>...], "levels": ..., "threshold": ...}.
// "levels" and "threshold" are optional. A "certificate" key is ignored.
BasisSpec basis_spec_from_json(const Json& j);
Json to_json(const BasisSpec& spec);
// Spec plus {"certificate": {...}}.
Json basis_document(const BasisSpec& spec, const SliBasis& basis);
BasisPtr build_basis(const BasisSpec& spec);

Json to_json(const SliCertificate& cert);

// {"coords": [...]}
Json to_json(const SVector& v);
SVector svector_from_json(const Json& j, const BasisPtr& basis);

// {"basis": {...}, "equation": {"A": {...}, "B": {...}, "C": {...}}}
struct Problem {
  BasisSpec basis_spec;
  BasisPtr basis;
  LinearEquation equation;
};
Problem problem_from_json(const Json& j, std::optional<std::size_t> levels_override = std::nullopt,
                          std::optional<double> threshold_override = std::nullopt);

// {"kind", "coords", "core", "residual", ["free_directions"], "levels": [...]}
// `table_levels` sets the uniform grid of the α-cut table (0 = omit it).
Json to_json(const Solution& sol, std::size_t table_levels);

// Coordinates carried by a solution document, if any.
std::optional<std::vector<double>> solution_coords(const Json& j);

Json parse(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sliring::io

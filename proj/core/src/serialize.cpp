#include "sliring/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <system_error>

#include "sliring/error.hpp"

namespace sliring::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorKind::parse, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) parse_fail(std::string("expected a JSON object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing key \"") + key + "\"");
  return *it;
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) parse_fail(what + " must be a number");
  return j.get<double>();
}

std::size_t count(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    parse_fail(what + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<double> numbers(const Json& j, const std::string& what) {
  if (!j.is_array()) parse_fail(what + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(number(v, what + " entry"));
  return out;
}

Trapezoid trapezoid(const Json& j, const std::string& what) {
  const auto v = numbers(j, what);
  if (v.size() != 4) parse_fail(what + " must have exactly 4 entries [a, b, c, d]");
  return Trapezoid(v[0], v[1], v[2], v[3]);
}

Json number_array(std::span<const double> xs) {
  Json arr = Json::array();
  for (double x : xs) arr.push_back(x);
  return arr;
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  if (res.ec != std::errc()) fail(ErrorKind::internal, "number formatting failed");
  return std::string(buf, res.ptr);
}

Json to_json(const FuzzyNumber& f) {
  Json j;
  j["levels"] = number_array(f.grid().levels());
  j["lower"] = number_array(f.lower());
  j["upper"] = number_array(f.upper());
  return j;
}

FuzzyNumber fuzzy_from_json(const Json& j, const LevelGrid& grid) {
  if (!j.is_object()) parse_fail("fuzzy number must be a JSON object");
  if (j.contains("trapezoid")) {
    return make_trapezoid(trapezoid(j["trapezoid"], "\"trapezoid\""), grid);
  }
  auto levels = numbers(member(j, "levels"), "\"levels\"");
  auto lower = numbers(member(j, "lower"), "\"lower\"");
  auto upper = numbers(member(j, "upper"), "\"upper\"");
  return FuzzyNumber(LevelGrid(std::move(levels)), std::move(lower), std::move(upper));
}

std::string alpha_cut_csv(const FuzzyNumber& f) {
  std::string out = "alpha,lower,upper\n";
  for (std::size_t k = 0; k < f.size(); ++k) {
    out += format_number(f.grid()[k]);
    out += ',';
    out += format_number(f.lower()[k]);
    out += ',';
    out += format_number(f.upper()[k]);
    out += '\n';
  }
  return out;
}

BasisSpec basis_spec_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("basis must be a JSON object");
  BasisSpec spec;
  if (j.contains("levels")) spec.levels = count(j["levels"], "\"levels\"");
  if (j.contains("threshold")) spec.threshold = number(j["threshold"], "\"threshold\"");

  const bool has_gen = j.contains("generator");
  const bool has_elems = j.contains("elements");
  if (has_gen == has_elems) {
    parse_fail("basis needs exactly one of \"generator\" and \"elements\"");
  }
  if (has_gen) {
    spec.generator = trapezoid(j["generator"], "\"generator\"");
    spec.n = count(member(j, "n"), "\"n\"");
    return spec;
  }
  const Json& elems = j["elements"];
  if (!elems.is_array() || elems.empty()) parse_fail("\"elements\" must be a non-empty array");
  const LevelGrid grid = LevelGrid::uniform(spec.levels);
  spec.elements.emplace();
  for (const auto& e : elems) spec.elements->push_back(fuzzy_from_json(e, grid));
  spec.n = spec.elements->size();
  if (j.contains("n") && count(j["n"], "\"n\"") != spec.n) {
    parse_fail("\"n\" does not match the number of explicit elements");
  }
  return spec;
}

Json to_json(const BasisSpec& spec) {
  Json j;
  if (spec.generator) {
    const Trapezoid& t = *spec.generator;
    j["generator"] = Json::array({t.a, t.b, t.c, t.d});
  }
  j["n"] = spec.n;
  j["levels"] = spec.levels;
  j["threshold"] = spec.threshold;
  if (spec.elements) {
    Json elems = Json::array();
    for (const auto& e : *spec.elements) elems.push_back(to_json(e));
    j["elements"] = std::move(elems);
  }
  return j;
}

Json to_json(const SliCertificate& cert) {
  Json j;
  j["smallest_singular_value"] = cert.smallest_singular_value;
  j["matrix_max_norm"] = cert.matrix_max_norm;
  j["relative_threshold"] = cert.relative_threshold;
  j["threshold"] = cert.threshold;
  j["accepted"] = cert.accepted;
  return j;
}

Json basis_document(const BasisSpec& spec, const SliBasis& basis) {
  Json j = to_json(spec);
  j["certificate"] = to_json(basis.certificate());
  return j;
}

BasisPtr build_basis(const BasisSpec& spec) {
  if (spec.generator) {
    return build_power_basis(*spec.generator, spec.n, LevelGrid::uniform(spec.levels),
                             spec.threshold);
  }
  if (!spec.elements) fail(ErrorKind::parse, "basis spec has neither generator nor elements");
  return build_explicit_basis(*spec.elements, spec.threshold);
}

Json to_json(const SVector& v) {
  Json j;
  j["coords"] = number_array(v.coords());
  return j;
}

SVector svector_from_json(const Json& j, const BasisPtr& basis) {
  return SVector(basis, numbers(member(j, "coords"), "\"coords\""));
}

Problem problem_from_json(const Json& j, std::optional<std::size_t> levels_override,
                          std::optional<double> threshold_override) {
  Json basis_json = member(j, "basis");
  if (basis_json.is_object()) {
    if (levels_override) basis_json["levels"] = *levels_override;
    if (threshold_override) basis_json["threshold"] = *threshold_override;
  }
  BasisSpec spec = basis_spec_from_json(basis_json);
  BasisPtr basis = build_basis(spec);
  const Json& eq = member(j, "equation");
  LinearEquation equation(svector_from_json(member(eq, "A"), basis),
                          svector_from_json(member(eq, "B"), basis),
                          svector_from_json(member(eq, "C"), basis));
  return Problem{std::move(spec), std::move(basis), std::move(equation)};
}

Json to_json(const Solution& sol, std::size_t table_levels) {
  Json j;
  j["kind"] = to_string(sol.kind);
  if (sol.value) {
    j["coords"] = number_array(sol.value->coords());
    j["core"] = sol.kind == SolutionKind::family ? sol.family_core : sol.value->core_value();
  } else {
    j["coords"] = nullptr;
    j["core"] = nullptr;
  }
  j["residual"] = sol.residual;
  if (sol.kind == SolutionKind::family) {
    j["core_free"] = sol.core_free;
    Json dirs = Json::array();
    for (const auto& d : sol.free_directions()) dirs.push_back(number_array(d));
    j["free_directions"] = std::move(dirs);
  }
  if (table_levels > 0) {
    Json rows = Json::array();
    if (sol.value) {
      const FuzzyNumber realized = psi_realize(*sol.value);
      const LevelGrid grid = LevelGrid::uniform(table_levels);
      for (double alpha : grid.levels()) {
        const Interval cut = alpha_cut(realized, alpha);
        Json row;
        row["alpha"] = alpha;
        row["lower"] = cut.lo;
        row["upper"] = cut.hi;
        rows.push_back(std::move(row));
      }
    }
    j["levels"] = std::move(rows);
  }
  return j;
}

std::optional<std::vector<double>> solution_coords(const Json& j) {
  if (!j.is_object()) parse_fail("solution must be a JSON object");
  auto it = j.find("coords");
  if (it == j.end() || it->is_null()) return std::nullopt;
  return numbers(*it, "\"coords\"");
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open '" + path + "' for reading");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) fail(ErrorKind::io, "failed reading '" + path + "'");
  return parse(text);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::io, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) fail(ErrorKind::io, "failed writing '" + path + "'");
}

}  // namespace sliring::io

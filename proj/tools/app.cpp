#include "app.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "sliring/fuzzy_number.hpp"
#include "sliring/ring.hpp"
#include "sliring/serialize.hpp"
#include "sliring/sli.hpp"
#include "sliring/solver.hpp"
#include "sliring/zadeh.hpp"

namespace sliring::cli {

namespace {

using io::Json;

constexpr double kCheckTolerance = 1e-9;
constexpr std::uint64_t kDefaultSeed = 20240917;

struct CommonOptions {
  std::optional<std::size_t> levels;
  std::optional<double> threshold;
  std::string format = "json";
  std::string out_path;
};

void emit(const CommonOptions& opts, const std::string& text, std::ostream& out) {
  if (opts.out_path.empty()) {
    out << text;
  } else {
    io::write_text_file(opts.out_path, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string format_sig(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

// ---------------------------------------------------------------- basis

int cmd_basis(const std::string& path, const CommonOptions& opts, std::ostream& out,
              std::ostream& err) {
  if (opts.format != "json") {
    err << "error: basis output supports --format json only\n";
    return kUsage;
  }
  Json doc = io::read_json_file(path);
  if (doc.is_object()) {
    if (opts.levels) doc["levels"] = *opts.levels;
    if (opts.threshold) doc["threshold"] = *opts.threshold;
  }
  const io::BasisSpec spec = io::basis_spec_from_json(doc);
  const BasisPtr basis = io::build_basis(spec);
  emit(opts, dump(io::basis_document(spec, *basis)), out);

  const SliCertificate& cert = basis->certificate();
  std::ostream& report = opts.out_path.empty() ? err : out;
  report << "certificate: smallest singular value " << io::format_number(cert.smallest_singular_value)
         << " > threshold " << io::format_number(cert.threshold) << " (n = " << basis->size()
         << ", levels = " << basis->grid().size() << ")\n";
  return kOk;
}

// ---------------------------------------------------------------- solve

int cmd_solve(const std::string& path, const CommonOptions& opts, std::ostream& out) {
  const io::Problem problem =
      io::problem_from_json(io::read_json_file(path), opts.levels, opts.threshold);
  const Solution sol = solve(problem.equation);
  const std::size_t table = opts.levels.value_or(problem.basis->grid().size());
  if (opts.format == "csv") {
    std::string text = "alpha,lower,upper\n";
    if (sol.value) {
      const FuzzyNumber realized = psi_realize(*sol.value);
      text = io::alpha_cut_csv(
          resample(realized, std::make_shared<const LevelGrid>(LevelGrid::uniform(table))));
    }
    emit(opts, text, out);
  } else {
    emit(opts, dump(io::to_json(sol, table)), out);
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string name;
  enum class Status { pass, fail, skip, info } status = Status::pass;
  double value = 0.0;
  std::string note;
};

const char* to_string(Check::Status s) {
  switch (s) {
    case Check::Status::pass: return "PASS";
    case Check::Status::fail: return "FAIL";
    case Check::Status::skip: return "SKIP";
    case Check::Status::info: return "INFO";
  }
  return "?";
}

Check threshold_check(std::string name, double value, std::string note = {}) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.status = value <= kCheckTolerance ? Check::Status::pass : Check::Status::fail;
  c.note = std::move(note);
  return c;
}

Check skipped(std::string name, std::string note) {
  Check c;
  c.name = std::move(name);
  c.status = Check::Status::skip;
  c.note = std::move(note);
  return c;
}

std::uint64_t sampling_seed() {
  if (const char* env = std::getenv("SLI_RING_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultSeed;
}

RingElement random_element(const BasisPtr& basis, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::vector<double> q(basis->size());
  for (auto& x : q) x = coord(rng);
  return RingElement(basis, std::move(q));
}

std::vector<Check> run_checks(const io::Problem& problem, const std::optional<RingElement>& given,
                              std::size_t samples) {
  const LinearEquation& eq = problem.equation;
  const BasisPtr& basis = problem.basis;
  std::vector<Check> checks;

  std::optional<RingElement> x = given;
  std::string origin = "supplied solution";
  if (!x) {
    const Solution sol = solve(eq);
    x = sol.value;
    origin = std::string("solver: ") + sliring::to_string(sol.kind);
  }

  if (x) {
    checks.push_back(threshold_check("solve_residual",
                                     coord_distance(apply_linear(eq.a, eq.b, *x), eq.c), origin));
    const auto report = levelwise_system(eq.a, *x, sub_psi(eq.c, eq.b), basis->grid());
    checks.push_back(threshold_check("levelwise_residual", report.max_deviation,
                                     std::to_string(report.levels.size()) + " levels"));

    const FuzzyNumber xr = psi_realize(*x);
    const FuzzyNumber ar = psi_realize(eq.a);
    const FuzzyNumber br = psi_realize(eq.b);
    const FuzzyNumber composite = minkowski_add(cross_product(ar, xr), br);
    const std::vector<FuzzyNumber> args{xr, ar, br};
    const FuzzyNumber oracle =
        extend_fuzzy(linearized_product_sum(core_point(xr), core_point(ar)), args);
    checks.push_back(threshold_check("zadeh_oracle_gap", hausdorff(composite, oracle),
                                     "A (.) X + B vs vertex extension of the linearization"));

    Check gap;
    gap.name = "psi_vs_cross_product_gap";
    gap.status = Check::Status::info;
    gap.value = hausdorff(psi_realize(cross_psi(eq.a, *x)), cross_product(ar, xr));
    gap.note = "reported only";
    checks.push_back(gap);
  } else {
    checks.push_back(skipped("solve_residual", origin));
    checks.push_back(skipped("levelwise_residual", "no solution"));
    checks.push_back(skipped("zadeh_oracle_gap", "no solution"));
  }

  std::mt19937_64 rng(sampling_seed());

  if (is_invertible(eq.a)) {
    double worst = coord_distance(cross_psi(eq.a, inv_psi(eq.a)), RingElement::crisp(basis, 1.0));
    double round_trip = 0.0;
    if (x) round_trip = coord_distance(apply_inverse(eq.a, eq.b, apply_linear(eq.a, eq.b, *x)), *x);
    for (std::size_t s = 0; s < samples; ++s) {
      const RingElement y = random_element(basis, rng);
      round_trip = std::max(round_trip,
                            coord_distance(apply_linear(eq.a, eq.b, apply_inverse(eq.a, eq.b, y)), y));
    }
    checks.push_back(threshold_check("inverse_law_A", worst));
    checks.push_back(threshold_check("bijection_round_trip", round_trip,
                                     std::to_string(samples) + " samples"));
  } else {
    checks.push_back(skipped("inverse_law_A", "core(A) = 0"));
    checks.push_back(skipped("bijection_round_trip", "core(A) = 0"));
  }

  double inverse_worst = 0.0;
  double axiom_worst = 0.0;
  std::size_t inverse_count = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const RingElement p = random_element(basis, rng);
    const RingElement q = random_element(basis, rng);
    const RingElement r = random_element(basis, rng);
    axiom_worst = std::max({axiom_worst, coord_distance(cross_psi(p, q), cross_psi(q, p)),
                            coord_distance(cross_psi(cross_psi(p, q), r), cross_psi(p, cross_psi(q, r))),
                            coord_distance(cross_psi(p, add_psi(q, r)),
                                           add_psi(cross_psi(p, q), cross_psi(p, r))),
                            coord_distance(add_psi(add_psi(p, q), r), add_psi(p, add_psi(q, r)))});
    if (std::abs(r.core_value()) >= 0.1) {
      ++inverse_count;
      inverse_worst = std::max(inverse_worst,
                               coord_distance(cross_psi(r, inv_psi(r)), RingElement::crisp(basis, 1.0)));
    }
  }
  checks.push_back(threshold_check("ring_axioms", axiom_worst, std::to_string(samples) + " triples"));
  checks.push_back(threshold_check("inverse_law_sampled", inverse_worst,
                                   std::to_string(inverse_count) + " samples"));
  return checks;
}

int cmd_verify(const std::string& path, const std::string& solution_path, std::size_t samples,
               const std::string& report_format, const CommonOptions& opts, std::ostream& out) {
  const Json doc = io::read_json_file(path);
  const io::Problem problem = io::problem_from_json(doc, opts.levels, opts.threshold);

  std::optional<std::vector<double>> coords;
  if (!solution_path.empty()) {
    coords = io::solution_coords(io::read_json_file(solution_path));
  } else if (doc.contains("solution")) {
    coords = io::solution_coords(doc["solution"]);
  }
  std::optional<RingElement> given;
  if (coords) given = RingElement(problem.basis, *coords);

  const auto checks = run_checks(problem, given, samples);
  bool ok = true;
  double worst = 0.0;
  for (const auto& c : checks) {
    if (c.status == Check::Status::fail) ok = false;
    if (c.status == Check::Status::pass || c.status == Check::Status::fail) {
      worst = std::max(worst, c.value);
    }
  }

  std::ostringstream text;
  if (report_format == "json") {
    Json report;
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json row;
      row["check"] = c.name;
      row["status"] = to_string(c.status);
      row["value"] = c.value;
      row["note"] = c.note;
      arr.push_back(std::move(row));
    }
    report["checks"] = std::move(arr);
    report["max_residual"] = worst;
    report["passed"] = ok;
    text << dump(report);
  } else {
    for (const auto& c : checks) {
      char line[160];
      std::snprintf(line, sizeof line, "%-26s %-4s %-14s", c.name.c_str(), to_string(c.status),
                    c.status == Check::Status::skip ? "-" : format_sig(c.value, 6).c_str());
      std::string row = line;
      if (!c.note.empty()) row += "  " + c.note;
      row.erase(row.find_last_not_of(' ') + 1);
      text << row << "\n";
    }
    text << "max residual: " << format_sig(worst, 6) << "\n";
    text << (ok ? "verification passed" : "verification FAILED") << "\n";
  }
  emit(opts, text.str(), out);
  return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- dist

int cmd_dist(const std::string& first, const std::string& second, const CommonOptions& opts,
             std::ostream& out) {
  const LevelGrid grid = LevelGrid::uniform(opts.levels.value_or(kDefaultLevelCount));
  const FuzzyNumber f = io::fuzzy_from_json(io::read_json_file(first), grid);
  const FuzzyNumber g = io::fuzzy_from_json(io::read_json_file(second), grid);
  emit(opts, format_sig(hausdorff(f, g), 12) + "\n", out);
  return kOk;
}

// ---------------------------------------------------------------- eval

struct Evaluator {
  BasisPtr basis;
  std::map<std::string, RingElement> vars;

  RingElement operand(const Json& e) const {
    if (e.is_number()) return RingElement::crisp(basis, e.get<double>());
    if (e.is_string()) {
      auto it = vars.find(e.get<std::string>());
      if (it == vars.end()) fail(ErrorKind::parse, "unknown variable '" + e.get<std::string>() + "'");
      return it->second;
    }
    if (e.is_object()) return io::svector_from_json(e, basis);
    if (!e.is_array() || e.empty() || !e[0].is_string()) {
      fail(ErrorKind::parse, "expression must be a number, a variable name, {\"coords\": [...]}, "
                             "or [op, args...]");
    }
    const std::string op = e[0].get<std::string>();
    const std::size_t argc = e.size() - 1;
    auto want = [&](std::size_t n) {
      if (argc != n) {
        fail(ErrorKind::parse, "'" + op + "' takes " + std::to_string(n) + " argument(s), got " +
                                   std::to_string(argc));
      }
    };
    if (op == "add") return want(2), add_psi(operand(e[1]), operand(e[2]));
    if (op == "sub") return want(2), sub_psi(operand(e[1]), operand(e[2]));
    if (op == "cross") return want(2), cross_psi(operand(e[1]), operand(e[2]));
    if (op == "div") return want(2), div_psi(operand(e[1]), operand(e[2]));
    if (op == "inv") return want(1), inv_psi(operand(e[1]));
    if (op == "smul") {
      want(2);
      if (!e[1].is_number()) fail(ErrorKind::parse, "'smul' expects a number as first argument");
      return scalar_psi(e[1].get<double>(), operand(e[2]));
    }
    fail(ErrorKind::parse, "unknown operation '" + op + "'");
  }
};

int cmd_eval(const std::string& path, const CommonOptions& opts, std::ostream& out) {
  const Json doc = io::read_json_file(path);
  if (!doc.is_object() || !doc.contains("basis") || !doc.contains("expr")) {
    fail(ErrorKind::parse, "eval document needs \"basis\" and \"expr\"");
  }
  Json basis_json = doc["basis"];
  if (basis_json.is_object()) {
    if (opts.levels) basis_json["levels"] = *opts.levels;
    if (opts.threshold) basis_json["threshold"] = *opts.threshold;
  }
  Evaluator ev;
  ev.basis = io::build_basis(io::basis_spec_from_json(basis_json));
  if (doc.contains("vars")) {
    if (!doc["vars"].is_object()) fail(ErrorKind::parse, "\"vars\" must be an object");
    for (const auto& [name, value] : doc["vars"].items()) {
      ev.vars.emplace(name, io::svector_from_json(value, ev.basis));
    }
  }
  const RingElement result = ev.operand(doc["expr"]);
  if (opts.format == "csv") {
    emit(opts, io::alpha_cut_csv(psi_realize(result)), out);
    return kOk;
  }
  Json j = io::to_json(result);
  j["core"] = result.core_value();
  emit(opts, dump(j), out);
  return kOk;
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_format) {
  cmd->add_option("--levels", opts.levels, "number of α levels (default 101)")
      ->check(CLI::Range(std::size_t{3}, std::size_t{1000000}));
  cmd->add_option("--threshold", opts.threshold, "relative SLI threshold (default 1e-8)")
      ->check(CLI::NonNegativeNumber);
  if (with_format) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  }
  cmd->add_option("--out", opts.out_path, "write output to this path instead of stdout");
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return kParse;
    case ErrorKind::sli_failure: return kSliFailure;
    case ErrorKind::basis_mismatch: return kBasisMismatch;
    case ErrorKind::no_inverse: return kNoInverse;
    case ErrorKind::io: return kIo;
    case ErrorKind::domain: return kDomain;
    case ErrorKind::internal: return kInternal;
  }
  return kInternal;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic and linear equations over S(A)-linearly correlated fuzzy numbers",
               "sli-ring"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string input, second, solution_path;
  std::string report_format = "text";
  std::size_t samples = 200;

  auto* basis = app.add_subcommand("basis", "build and certify an SLI basis from a spec file");
  basis->add_option("spec", input, "basis spec JSON")->required();
  add_common(basis, opts, true);

  auto* solve_cmd = app.add_subcommand("solve", "solve A (.)psi X +psi B = C");
  solve_cmd->add_option("problem", input, "problem JSON")->required();
  add_common(solve_cmd, opts, true);

  auto* verify = app.add_subcommand("verify", "cross-check a problem and its solution");
  verify->add_option("problem", input, "problem JSON (may embed a \"solution\")")->required();
  verify->add_option("--solution", solution_path, "solution JSON to check instead of solving");
  verify->add_option("--samples", samples, "random samples for ring checks")
      ->check(CLI::Range(std::size_t{0}, std::size_t{1000000}));
  add_common(verify, opts, false);
  verify->add_option("--format", report_format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* dist = app.add_subcommand("dist", "Hausdorff distance between two fuzzy numbers");
  dist->add_option("first", input, "fuzzy number JSON")->required();
  dist->add_option("second", second, "fuzzy number JSON")->required();
  add_common(dist, opts, false);

  auto* eval = app.add_subcommand("eval", "evaluate a prefix expression over S(A) elements");
  eval->add_option("expr_file", input, "expression JSON")->required();
  add_common(eval, opts, true);

  // CLI11 consumes a reversed argument list without the program name.
  std::vector<std::string> reversed;
  if (args.size() > 1) reversed.assign(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*basis) return cmd_basis(input, opts, out, err);
    if (*solve_cmd) return cmd_solve(input, opts, out);
    if (*verify) return cmd_verify(input, solution_path, samples, report_format, opts, out);
    if (*dist) return cmd_dist(input, second, opts, out);
    if (*eval) return cmd_eval(input, opts, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error (internal): " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace sliring::cli

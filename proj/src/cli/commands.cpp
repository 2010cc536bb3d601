// Copyright 2026 The tricdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/commands.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cli/serialize.hpp"
#include "tricdc/random.hpp"

namespace tricdc::cli {

namespace {

/// Raised for problems with flags or files rather than with the state.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct StateOptions {
  std::string spec_path;
  std::string inline_json;
  std::string family;
  std::vector<std::string> params;
};

void add_state_options(CLI::App* cmd, StateOptions& o) {
  cmd->add_option("--spec", o.spec_path, "JSON state document ('-' reads stdin)");
  cmd->add_option("--state", o.inline_json, "inline JSON state document");
  cmd->add_option("--family", o.family, "state family (see 'states list')");
  cmd->add_option("--param", o.params, "family parameter NAME=VALUE (repeatable)");
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ParamMap parse_params(const std::vector<std::string>& items) {
  ParamMap out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param expects NAME=VALUE, got '" + item + "'");
    }
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (name == "k") {
      out[name] = value;
    } else {
      out[name] = parse_angle(value);
    }
  }
  return out;
}

ParsedState load_state(const StateOptions& o) {
  const int sources = !o.spec_path.empty() + !o.inline_json.empty() + !o.family.empty();
  if (sources != 1) {
    throw UsageError("give exactly one of --spec, --state or --family");
  }
  if (!o.params.empty() && o.family.empty()) {
    throw UsageError("--param only applies together with --family");
  }
  if (!o.family.empty()) {
    return build_state(StateSpec{o.family, parse_params(o.params), std::nullopt});
  }
  if (!o.inline_json.empty()) return parse_state_spec(o.inline_json);
  if (o.spec_path == "-") return parse_state_spec(read_all(std::cin));
  std::ifstream in(o.spec_path);
  if (!in) throw UsageError("cannot read " + o.spec_path);
  return parse_state_spec(read_all(in));
}

int parse_controller(const std::string& text) {
  if (text == "a") return kQubitA;
  if (text == "b") return kQubitB;
  if (text == "c") return kQubitC;
  throw UsageError("--controller must be a, b or c");
}

Pauli parse_pauli(std::string text) {
  for (auto& ch : text) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (text == "i") return Pauli::I;
  if (text == "x") return Pauli::X;
  if (text == "y") return Pauli::Y;
  if (text == "z") return Pauli::Z;
  throw UsageError("unknown Pauli label '" + text + "'");
}

// "1:x" or "0:z,1:x"
CorrectionRule parse_rule(const std::string& text) {
  CorrectionRule rule;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--rule entries look like OUTCOME:PAULI");
    const std::string outcome = item.substr(0, colon);
    if (outcome != "0" && outcome != "1") throw UsageError("--rule outcome must be 0 or 1");
    rule.by_outcome[outcome == "1" ? 1 : 0] = parse_pauli(item.substr(colon + 1));
  }
  return rule;
}

json rule_json(const CorrectionRule& rule) {
  json out = json::object();
  for (const auto& [outcome, p] : rule.by_outcome) out[std::to_string(outcome)] = pauli_label(p);
  return out;
}

// Matching correction for the seeded families: undo sigma_k on branch 1.
CorrectionRule default_rule(const std::string& family, const ParamMap& params) {
  CorrectionRule rule;
  const bool seeded = family == "chi_plus" || family == "chi_minus" || family == "xi_plus" ||
                      family == "xi_minus";
  if (seeded) {
    const auto it = params.find("k");
    if (it != params.end()) {
      if (const auto* k = std::get_if<std::string>(&it->second)) rule.by_outcome[1] = parse_pauli(*k);
    }
  }
  return rule;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format '" + format + "'");
}

// ---------------------------------------------------------------------------

int cmd_classify(const StateOptions& so, const std::string& format, std::ostream& out,
                 std::ostream& err) {
  check_format(format, {"text", "json"});
  const auto parsed = load_state(so);
  if (parsed.renormalized) err << "warning: amplitudes were renormalized\n";
  const auto p = profile(parsed.state);
  if (format == "json") {
    json doc = to_json(p);
    doc["renormalized"] = parsed.renormalized;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "ranks: (" << p.rank_a << ", " << p.rank_b << ", " << p.rank_c << ")\n"
      << "C2_a(bc): " << format_real(p.c2_a_bc) << "\n"
      << "C2_ab: " << format_real(p.c2_ab) << "\n"
      << "C2_ac: " << format_real(p.c2_ac) << "\n"
      << "tau (hyperdeterminant): " << format_real(p.tau) << "\n"
      << "tau (CKW residual): " << format_real(p.tau_ckw) << "\n"
      << "class: " << to_string(p.slocc_class) << "\n";
  return kExitOk;
}

int cmd_tangle(const StateOptions& so, int random_count, std::optional<std::uint64_t> seed,
               const std::string& format, std::ostream& out) {
  check_format(format, {"text", "json"});
  if (random_count > 0) {
    if (!so.spec_path.empty() || !so.inline_json.empty() || !so.family.empty()) {
      throw UsageError("--random cannot be combined with a state");
    }
    if (!seed) throw UsageError("--random requires --seed");
    std::mt19937_64 rng(*seed);
    double route = 0;
    double pivot = 0;
    for (int i = 0; i < random_count; ++i) {
      const auto s = random_state(rng);
      const double h = tangle_hyperdet(s);
      const double a = tangle_ckw(s, kQubitA);
      const double b = tangle_ckw(s, kQubitB);
      const double c = tangle_ckw(s, kQubitC);
      route = std::max(route, std::abs(h - a));
      pivot = std::max({pivot, std::abs(a - b), std::abs(a - c), std::abs(b - c)});
    }
    if (format == "json") {
      out << json{{"states", random_count}, {"seed", *seed}, {"max_route_gap", route},
                  {"max_pivot_gap", pivot}}.dump(2)
          << "\n";
    } else {
      out << "states: " << random_count << "\nseed: " << *seed
          << "\nmax |hyperdet - ckw(a)|: " << format_real(route)
          << "\nmax pivot gap: " << format_real(pivot) << "\n";
    }
    return kExitOk;
  }
  if (seed) throw UsageError("--seed only applies with --random");

  const auto parsed = load_state(so);
  const auto& s = parsed.state;
  const double h = tangle_hyperdet(s);
  std::array<double, 3> ckw{}, c2{};
  for (int q = 0; q < 3; ++q) {
    ckw[static_cast<std::size_t>(q)] = tangle_ckw(s, q);
    c2[static_cast<std::size_t>(q)] = c2_one_vs_rest(s, q);
  }
  if (format == "json") {
    out << json{{"tau_hyperdet", h},
                {"tau_ckw", {{"a", ckw[0]}, {"b", ckw[1]}, {"c", ckw[2]}}},
                {"c2_one_vs_rest", {{"a", c2[0]}, {"b", c2[1]}, {"c", c2[2]}}}}
                   .dump(2)
        << "\n";
  } else {
    out << "tau (hyperdeterminant): " << format_real(h) << "\n";
    for (int q = 0; q < 3; ++q) {
      out << "tau (CKW, pivot " << qubit_name(q) << "): " << format_real(ckw[static_cast<std::size_t>(q)])
          << "   C2_" << qubit_name(q) << "(rest): " << format_real(c2[static_cast<std::size_t>(q)]) << "\n";
    }
  }
  return kExitOk;
}

struct CdcOptions {
  std::string controller = "a";
  std::string theta;
  std::string phi;
  std::string rule;
  bool optimize = false;
  int grid = 0;
};

int cmd_cdc(const StateOptions& so, const CdcOptions& co, std::ostream& out) {
  if (co.optimize && (!co.theta.empty() || !co.phi.empty())) {
    throw UsageError("--optimize-basis cannot be combined with --theta/--phi");
  }
  if (!co.optimize && co.grid != 0) throw UsageError("--grid requires --optimize-basis");
  const int controller = parse_controller(co.controller);
  const auto parsed = load_state(so);
  const CorrectionRule rule = co.rule.empty() ? default_rule(parsed.spec.family, parsed.spec.params)
                                              : parse_rule(co.rule);

  json doc;
  ControllerBasis basis;
  std::optional<BasisSearchResult> search;
  if (co.optimize) {
    search = optimize_controller_basis(parsed.state, controller, co.grid == 0 ? 64 : co.grid);
    basis = search->basis;
  } else {
    basis = ControllerBasis::make(co.theta.empty() ? 0.0 : parse_angle(co.theta),
                                  co.phi.empty() ? 0.0 : parse_angle(co.phi));
  }
  doc = to_json(run_cdc(parsed.state, controller, basis, rule));
  doc["rule"] = rule_json(rule);
  if (search) doc["search"] = to_json(*search);
  if (parsed.renormalized) doc["renormalized"] = true;
  out << doc.dump(2) << "\n";
  return kExitOk;
}

struct SweepOptions {
  std::string family;
  std::string vary;
  std::string from;
  std::string to;
  int steps = 0;
  std::vector<std::string> params;
  std::string output = "-";
  std::string format = "csv";
  std::string controller = "a";
  std::string theta;
  std::string phi;
  std::string rule;
  bool optimize = false;
  int grid = 0;
};

struct ReportRow {
  double param = 0;
  EntanglementProfile profile;
  double average_capacity = 0;
  double min_capacity = 0;
  bool perfect = false;
};

constexpr const char* kCsvHeader =
    "param,tau,c2_a_bc,c2_ab,c2_ac,rank_a,rank_b,rank_c,class,avg_capacity,min_capacity,perfect";

std::string csv_line(const ReportRow& r) {
  const auto& p = r.profile;
  std::string line = format_real(r.param);
  for (double v : {p.tau, p.c2_a_bc, p.c2_ab, p.c2_ac}) line += "," + format_real(v);
  for (int v : {p.rank_a, p.rank_b, p.rank_c}) line += "," + std::to_string(v);
  line += "," + to_string(p.slocc_class);
  line += "," + format_real(r.average_capacity) + "," + format_real(r.min_capacity);
  line += r.perfect ? ",true" : ",false";
  return line;
}

json row_json(const ReportRow& r) {
  const auto& p = r.profile;
  return json{{"param", r.param},      {"tau", p.tau},       {"c2_a_bc", p.c2_a_bc},
              {"c2_ab", p.c2_ab},      {"c2_ac", p.c2_ac},   {"rank_a", p.rank_a},
              {"rank_b", p.rank_b},    {"rank_c", p.rank_c}, {"class", to_string(p.slocc_class)},
              {"avg_capacity", r.average_capacity}, {"min_capacity", r.min_capacity},
              {"perfect", r.perfect}};
}

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  check_format(o.format, {"csv", "json"});
  const auto* info = find_family(o.family);
  if (info == nullptr) throw UnknownFamily(o.family);
  const bool known = std::any_of(info->params.begin(), info->params.end(), [&](const ParamInfo& p) {
    return p.name == o.vary && !p.is_text;
  });
  if (!known) throw UsageError("family '" + o.family + "' has no real parameter '" + o.vary + "'");
  if (o.steps < 2) throw UsageError("--steps must be at least 2");
  const double from = parse_angle(o.from);
  const double to = parse_angle(o.to);
  if (!(from < to)) throw UsageError("--from must be less than --to");
  if (o.optimize && (!o.theta.empty() || !o.phi.empty())) {
    throw UsageError("--optimize-basis cannot be combined with --theta/--phi");
  }
  if (!o.optimize && o.grid != 0) throw UsageError("--grid requires --optimize-basis");

  ParamMap fixed = parse_params(o.params);
  if (fixed.count(o.vary) != 0) throw UsageError("'" + o.vary + "' is both swept and fixed");
  const int controller = parse_controller(o.controller);
  const CorrectionRule rule = o.rule.empty() ? default_rule(o.family, fixed) : parse_rule(o.rule);
  const ControllerBasis fixed_basis = ControllerBasis::make(
      o.theta.empty() ? 0.0 : parse_angle(o.theta), o.phi.empty() ? 0.0 : parse_angle(o.phi));

  std::vector<ReportRow> rows;
  rows.reserve(static_cast<std::size_t>(o.steps));
  for (int i = 0; i < o.steps; ++i) {
    const double value = i == o.steps - 1 ? to : from + (to - from) * i / (o.steps - 1);
    ParamMap params = fixed;
    params[o.vary] = value;
    const auto state = make_state(o.family, params);
    ReportRow row;
    row.param = value;
    row.profile = profile(state);
    const ControllerBasis basis =
        o.optimize ? optimize_controller_basis(state, controller, o.grid == 0 ? 64 : o.grid).basis
                   : fixed_basis;
    const auto report = run_cdc(state, controller, basis, rule);
    row.average_capacity = report.average_capacity_bits;
    row.min_capacity = report.min_capacity_bits;
    row.perfect = report.perfect_cdc;
    rows.push_back(row);
  }

  std::ostringstream body;
  if (o.format == "csv") {
    body << kCsvHeader << "\n";
    for (const auto& r : rows) body << csv_line(r) << "\n";
  } else {
    json doc = json::array();
    for (const auto& r : rows) doc.push_back(row_json(r));
    body << doc.dump(2) << "\n";
  }

  if (o.output == "-") {
    out << body.str();
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write " + o.output);
  file << body.str();
  file.flush();
  if (!file) throw UsageError("failed writing " + o.output);
  return kExitOk;
}

int cmd_states_list(std::ostream& out) {
  for (const auto& f : families()) {
    out << f.name << "\n    " << f.formula << "\n";
    for (const auto& p : f.params) out << "    " << p.name << ": " << p.range << "\n";
  }
  return kExitOk;
}

int cmd_states_show(const StateOptions& so, std::ostream& out) {
  const auto parsed = load_state(so);
  json doc = to_json(parsed.state);
  if (parsed.renormalized) doc["renormalized"] = true;
  out << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-qubit entanglement classification and controlled dense coding", "tricdc"};
  app.require_subcommand(1);

  StateOptions classify_state, tangle_state, cdc_state, show_state;
  std::string classify_format = "text";
  std::string tangle_format = "text";
  int random_count = 0;
  std::uint64_t seed = 0;
  CdcOptions cdc_opts;
  SweepOptions sweep_opts;

  auto* classify = app.add_subcommand("classify", "rank profile, 3-tangle and SLOCC class");
  add_state_options(classify, classify_state);
  classify->add_option("--format", classify_format, "text | json");

  auto* tangle = app.add_subcommand("tangle", "3-tangle by both routes and all pivots");
  add_state_options(tangle, tangle_state);
  tangle->add_option("--format", tangle_format, "text | json");
  auto* random_opt = tangle->add_option("--random", random_count,
                                        "check route agreement on N random states")
                         ->check(CLI::PositiveNumber);
  auto* seed_opt = tangle->add_option("--seed", seed, "seed for --random");

  auto* cdc = app.add_subcommand("cdc", "simulate controlled dense coding");
  add_state_options(cdc, cdc_state);
  cdc->add_option("--controller", cdc_opts.controller, "controller qubit: a, b or c");
  cdc->add_option("--theta", cdc_opts.theta, "basis angle theta in [0, pi/2]");
  cdc->add_option("--phi", cdc_opts.phi, "basis phase phi in [0, 2pi)");
  cdc->add_option("--rule", cdc_opts.rule, "corrections, e.g. 1:x or 0:z,1:x");
  cdc->add_flag("--optimize-basis", cdc_opts.optimize, "search the controller basis");
  cdc->add_option("--grid", cdc_opts.grid, "points per axis for --optimize-basis (>= 8)");

  auto* sweep = app.add_subcommand("sweep", "sweep one family parameter");
  sweep->add_option("--family", sweep_opts.family, "state family")->required();
  sweep->add_option("--vary", sweep_opts.vary, "parameter to sweep")->required();
  sweep->add_option("--from", sweep_opts.from, "first value")->required();
  sweep->add_option("--to", sweep_opts.to, "last value")->required();
  sweep->add_option("--steps", sweep_opts.steps, "number of points (>= 2)")->required();
  sweep->add_option("--param", sweep_opts.params, "fixed parameter NAME=VALUE (repeatable)");
  sweep->add_option("--output,-o", sweep_opts.output, "output path, '-' for stdout");
  sweep->add_option("--format", sweep_opts.format, "csv | json");
  sweep->add_option("--controller", sweep_opts.controller, "controller qubit: a, b or c");
  sweep->add_option("--theta", sweep_opts.theta, "basis angle theta");
  sweep->add_option("--phi", sweep_opts.phi, "basis phase phi");
  sweep->add_option("--rule", sweep_opts.rule, "corrections, e.g. 1:x");
  sweep->add_flag("--optimize-basis", sweep_opts.optimize, "search the controller basis per row");
  sweep->add_option("--grid", sweep_opts.grid, "points per axis for --optimize-basis");

  auto* states = app.add_subcommand("states", "state families");
  states->require_subcommand(1);
  auto* list = states->add_subcommand("list", "list families and parameters");
  auto* show = states->add_subcommand("show", "print the amplitudes of a state");
  add_state_options(show, show_state);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (classify->parsed()) return cmd_classify(classify_state, classify_format, out, err);
    if (tangle->parsed()) {
      return cmd_tangle(tangle_state, random_opt->count() ? random_count : 0,
                        seed_opt->count() ? std::optional<std::uint64_t>(seed) : std::nullopt,
                        tangle_format, out);
    }
    if (cdc->parsed()) return cmd_cdc(cdc_state, cdc_opts, out);
    if (sweep->parsed()) return cmd_sweep(sweep_opts, out);
    if (list->parsed()) return cmd_states_list(out);
    if (show->parsed()) return cmd_states_show(show_state, out);
  } catch (const NumericConsistencyError& e) {
    err << "numeric consistency error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace tricdc::cli

#include "latdeg/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "latdeg/cli/reproduce.hpp"
#include "latdeg/deauto/deauto.hpp"
#include "latdeg/growth/growth.hpp"

namespace latdeg {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string rule;
  std::string rule_file;
  std::string init;
  std::string coeff = "constant";
  std::string region;
  std::string z_value;
  std::string backend;
  int trials = 3;
  std::uint64_t seed = 1;
  int seeds = 3;
  std::string output = "table";
  std::string out_path;
  unsigned threads = 0;
  std::string cell;
  std::string mode = "simple";
  std::vector<int> only;
  bool json = false;
};

Region parse_region(const std::string& s) {
  static const std::regex re(R"((\d+)[xX](\d+))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("region must look like 4x6, got '" + s + "'");
  Region r{std::stoi(m[1]), std::stoi(m[2])};
  if (r.rows < 1 || r.cols < 1) throw UsageError("region must be at least 1x1");
  return r;
}

CellIndex parse_cell(const std::string& s) {
  static const std::regex re(R"((\d+),(\d+))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("cell must look like 2,2, got '" + s + "'");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

LatticeRule resolve_rule(const Options& o) {
  if (!o.rule_file.empty()) {
    LatticeRule r = load_rule_file(o.rule_file);
    if (o.rule.empty() || o.rule == r.name) return r;
  }
  if (o.rule.empty()) throw UsageError("no rule given");
  try {
    return builtin(o.rule);
  } catch (const RuleError& e) {
    throw UsageError(e.what());
  }
}

CoeffMode parse_mode(const std::string& s) {
  if (s == "generic") return CoeffMode::GenericRandom;
  if (s == "symbolic") return CoeffMode::GenericSymbolic;
  CoeffMode m;
  try {
    m = parse_coeff_mode(s);
  } catch (const InitError& e) {
    throw UsageError(e.what());
  }
  if (m == CoeffMode::Explicit) throw UsageError("explicit grids are only available through the library");
  return m;
}

CoefficientGrid make_grid(const Options& o) {
  switch (parse_mode(o.coeff)) {
    case CoeffMode::Constant: {
      if (o.z_value == "symbolic") return CoefficientGrid::constant();
      if (!o.z_value.empty()) {
        mpz_class v;
        if (v.set_str(o.z_value, 10) != 0) throw UsageError("--z-value takes an integer or 'symbolic'");
        return CoefficientGrid::constant(v);
      }
      std::mt19937_64 gen(o.seed);
      return CoefficientGrid::constant(mpz_class(std::uniform_int_distribution<int>(2, 97)(gen)));
    }
    case CoeffMode::GenericSymbolic: return CoefficientGrid::generic_symbolic();
    case CoeffMode::GenericRandom: return CoefficientGrid::generic_random(o.seed);
    case CoeffMode::Sum: return CoefficientGrid::sum(o.seed);
    case CoeffMode::Product: return CoefficientGrid::product(o.seed);
    case CoeffMode::RowOnly: return CoefficientGrid::row_only(o.seed);
    default: throw UsageError("unsupported coefficient mode");
  }
}

InitialData make_init(const Options& o, const LatticeRule& rule, Region region) {
  if (o.init.empty()) return default_initial_data(rule, region);
  try {
    return {parse_scheme(o.init), region};
  } catch (const InitError& e) {
    throw UsageError(e.what());
  }
}

Backend make_backend(const Options& o, Backend fallback) {
  if (o.backend.empty()) return fallback;
  try {
    return parse_backend(o.backend);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

unsigned thread_count(const Options& o) {
  if (o.threads) return o.threads;
  if (const char* env = std::getenv("LATDEG_THREADS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError("LATDEG_THREADS must be a number");
    }
  }
  return 0;
}

SpecializedOptions specialized(const Options& o) {
  if (o.trials < 1) throw UsageError("--trials must be positive");
  return {o.trials, o.seed, thread_count(o)};
}

DegreeTable compute_table(const Options& o, Region fallback_region) {
  LatticeRule rule = resolve_rule(o);
  Region region = o.region.empty() ? fallback_region : parse_region(o.region);
  InitialData init = make_init(o, rule, region);
  CoefficientGrid grid = make_grid(o);
  if (make_backend(o, Backend::Specialized) == Backend::Exact) return degree_table_exact(rule, init, grid);
  return degree_table_specialized(rule, init, grid, specialized(o));
}

void check_output(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.output == a) return;
  throw UsageError("--output '" + o.output + "' is not available for this command");
}

std::string table_text(const DegreeTable& t) {
  const TableMeta& meta = t.meta();
  std::ostringstream s;
  s << "# " << meta.rule << ' ' << scheme_name(meta.init) << ' ' << meta.coeff_mode << ' '
    << backend_name(meta.backend) << ' ' << t.rows() << 'x' << t.cols() << '\n'
    << "# rows: m = 0.." << t.rows() - 1 << " downward; columns: n = 0.." << t.cols() - 1 << " rightward\n"
    << to_text(t);
  return s.str();
}

std::string render_table(const Options& o, const DegreeTable& t) {
  check_output(o, {"table", "json", "csv"});
  if (o.output == "json") return to_json(t).dump(2) + '\n';
  if (o.output == "csv") return to_csv(t);
  return table_text(t);
}

std::string entropy_text(const GrowthReport& r) {
  if (!r.entropy) return "n/a";
  std::ostringstream s;
  s << std::setprecision(6) << "E = " << r.entropy->E << ", ratio = " << r.entropy->ratio;
  return s.str();
}

std::string render_report(const Options& o, const DegreeTable& t, const GrowthReport& r) {
  check_output(o, {"table", "json", "csv"});
  if (o.output == "json") {
    nlohmann::json j = to_json(r);
    j["table"] = to_json(t);
    return j.dump(2) + '\n';
  }
  if (o.output == "csv") return diagonal_csv(t);
  std::ostringstream s;
  s << table_text(t) << '\n'
    << "fit:            " << (r.fit.valid ? r.fit.to_string() : "none") << '\n'
    << "recursion:      " << (r.recursion.valid ? r.recursion.to_string() : "none") << '\n'
    << "entropy:        " << entropy_text(r) << '\n'
    << "class:          " << growth_kind_name(r.growth.kind) << '\n'
    << "interpretation: " << interpretation_name(r.growth.interpretation) << '\n';
  return s.str();
}

std::string pass_text(bool pass) { return pass ? "PASS" : "FAIL"; }

nlohmann::json comparison_json(const TableComparison& c) {
  nlohmann::json j{{"equal", c.equal}};
  if (c.first_discrepancy) {
    const Discrepancy& d = *c.first_discrepancy;
    j["first_discrepancy"] = {{"cell", {d.cell.m, d.cell.n}}, {"autonomous", d.a}, {"constrained", d.b}};
  }
  return j;
}

struct Result {
  std::string text;
  int code = exit_code::ok;
};

Result cmd_list(const Options& o) {
  std::vector<LatticeRule> rules = builtin_rules();
  if (!o.rule_file.empty()) rules.push_back(load_rule_file(o.rule_file));
  if (o.json || o.output == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const LatticeRule& r : rules)
      j.push_back({{"name", r.name},
                   {"stencil", std::string(stencil_name(r.stencil))},
                   {"title", r.title},
                   {"rule", r.expression_string()}});
    return {j.dump(2) + '\n'};
  }
  std::size_t w = 0;
  for (const LatticeRule& r : rules) w = std::max(w, r.name.size());
  std::ostringstream s;
  for (const LatticeRule& r : rules)
    s << r.name << std::string(w + 2 - r.name.size(), ' ') << stencil_name(r.stencil)
      << std::string(6 - stencil_name(r.stencil).size(), ' ') << "x' = "
      << r.expression_string() << (r.title.empty() ? "" : "  (" + r.title + ")") << '\n';
  return {s.str()};
}

Result cmd_degrees(const Options& o) { return {render_table(o, compute_table(o, {4, 4}))}; }

Result cmd_analyze(const Options& o) {
  DegreeTable t = compute_table(o, {6, 6});
  return {render_report(o, t, analyze(t))};
}

CellIndex discrepancy_cell(const Options& o, const LatticeRule& rule) {
  InitialData init = default_initial_data(rule, {4, 4});
  SpecializedOptions opt = specialized(o);
  auto diff = compare_tables(degree_table_specialized(rule, init, CoefficientGrid::constant(), opt),
                             degree_table_specialized(rule, init, CoefficientGrid::generic_symbolic(), opt));
  if (!diff.first_discrepancy)
    throw DeautoError("constant and generic coefficients give the same degrees on 4x4; pass --cell");
  return diff.first_discrepancy->cell;
}

CoefficientGrid generator_grid(CoeffMode m, std::uint64_t seed) {
  if (m == CoeffMode::Sum) return CoefficientGrid::sum(seed);
  if (m == CoeffMode::Product) return CoefficientGrid::product(seed);
  return CoefficientGrid::row_only(seed);
}

Result cmd_derive(const Options& o) {
  check_output(o, {"table", "json"});
  LatticeRule rule = resolve_rule(o);
  CellIndex cell = o.cell.empty() ? discrepancy_cell(o, rule) : parse_cell(o.cell);
  ConstraintPolynomial c = derive_constraint(rule, cell);
  bool verified = false;
  std::optional<CoeffMode> gen = satisfying_generator(c, {4, 4}, o.seed);
  if (gen) {
    VerifyOptions vo;
    vo.seeds = o.seeds;
    vo.base_seed = o.seed;
    vo.backend = make_backend(o, Backend::Exact);
    vo.specialized = specialized(o);
    verified = verify_constraint(rule, generator_grid(*gen, o.seed), {4, 4}, vo).pass;
  }
  if (o.output == "json") return {to_json(c, verified).dump(2) + '\n'};
  std::ostringstream s;
  s << "constraint:     " << c.to_string() << " = 0\n"
    << "cell:           " << cell.m << ',' << cell.n << '\n'
    << "movable factor: " << c.movable_factor.to_string() << '\n'
    << "generator:      " << (gen ? std::string(coeff_mode_name(*gen)) : "none") << '\n'
    << "verified:       " << (verified ? "yes" : "no") << '\n';
  return {s.str()};
}

Result cmd_verify(const Options& o) {
  check_output(o, {"table", "json"});
  LatticeRule rule = resolve_rule(o);
  Region region = o.region.empty() ? Region{4, 4} : parse_region(o.region);
  CoeffMode mode = parse_mode(o.coeff);
  if (mode != CoeffMode::Sum && mode != CoeffMode::Product && mode != CoeffMode::RowOnly)
    throw UsageError("verify needs --coeff sum, product or row-only");
  if (o.seeds < 1) throw UsageError("--seeds must be positive");
  VerifyOptions vo;
  vo.seeds = o.seeds;
  vo.base_seed = o.seed;
  vo.backend = make_backend(o, Backend::Exact);
  vo.specialized = specialized(o);
  VerifyReport r = verify_constraint(rule, generator_grid(mode, o.seed), region, vo);
  int code = r.pass ? exit_code::ok : exit_code::computation;
  if (o.output == "json") {
    nlohmann::json j{{"rule", rule.name},
                     {"coeff_mode", std::string(coeff_mode_name(mode))},
                     {"region", {region.rows, region.cols}},
                     {"backend", std::string(backend_name(vo.backend))},
                     {"seeds", r.seeds},
                     {"pass", r.pass},
                     {"autonomous", to_json(r.autonomous)["degrees"]}};
    j["comparisons"] = nlohmann::json::array();
    for (std::size_t i = 0; i < r.comparisons.size(); ++i) {
      nlohmann::json c = comparison_json(r.comparisons[i]);
      c["seed"] = r.seeds[i];
      j["comparisons"].push_back(c);
    }
    return {j.dump(2) + '\n', code};
  }
  std::ostringstream s;
  s << "autonomous table (symbolic constant z):\n" << to_text(r.autonomous);
  for (std::size_t i = 0; i < r.comparisons.size(); ++i) {
    const TableComparison& c = r.comparisons[i];
    s << "seed " << r.seeds[i] << ": ";
    if (c.equal) {
      s << "equal\n";
    } else {
      const Discrepancy& d = *c.first_discrepancy;
      s << "differs first at " << d.cell.m << ',' << d.cell.n << " (" << d.a << " vs " << d.b << ")\n";
    }
  }
  s << "verify: " << pass_text(r.pass) << '\n';
  return {s.str(), code};
}

Result check_result(const Options& o, const std::string& what, bool pass, nlohmann::json j) {
  check_output(o, {"table", "json"});
  int code = pass ? exit_code::ok : exit_code::computation;
  if (o.output == "json") {
    j["pass"] = pass;
    return {j.dump(2) + '\n', code};
  }
  return {what + ": " + pass_text(pass) + '\n', code};
}

Result cmd_gauge(const Options& o) {
  Region region = o.region.empty() ? Region{3, 3} : parse_region(o.region);
  if (o.seeds < 1) throw UsageError("--seeds must be positive");
  bool pass = check_gauge(region, o.seeds, o.seed);
  return check_result(o, "gauge", pass,
                      {{"check", "gauge"}, {"region", {region.rows, region.cols}}, {"seeds", o.seeds},
                       {"seed", o.seed}});
}

Result cmd_linearize(const Options& o) {
  Region region = o.region.empty() ? Region{4, 6} : parse_region(o.region);
  if (o.seeds < 1) throw UsageError("--seeds must be positive");
  BurgersMode mode;
  if (o.mode == "simple")
    mode = BurgersMode::Simple;
  else if (o.mode == "general")
    mode = BurgersMode::General;
  else
    throw UsageError("--mode takes simple or general");
  bool pass = check_burgers_linearization(mode, region, o.seeds, o.seed);
  return check_result(o, "linearize (" + o.mode + ")", pass,
                      {{"check", "linearize"}, {"mode", o.mode}, {"region", {region.rows, region.cols}},
                       {"seeds", o.seeds}, {"seed", o.seed}});
}

Result cmd_reproduce(const Options& o) {
  check_output(o, {"table", "json"});
  std::vector<int> ids = o.only;
  if (ids.empty())
    for (int i = 1; i <= AcceptanceSession::count; ++i) ids.push_back(i);
  for (int id : ids)
    if (id < 1 || id > AcceptanceSession::count) throw UsageError("criteria are numbered 1 to 10");
  AcceptanceSession session({thread_count(o)});
  std::vector<CriterionResult> results;
  int passed = 0;
  for (int id : ids) {
    results.push_back(session.run(id));
    passed += results.back().pass;
  }
  int code = passed == int(ids.size()) ? exit_code::ok : exit_code::computation;
  if (o.output == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const CriterionResult& r : results) j.push_back(to_json(r));
    return {j.dump(2) + '\n', code};
  }
  std::string s;
  for (const CriterionResult& r : results) s += format_line(r) + '\n';
  s += std::to_string(passed) + "/" + std::to_string(ids.size()) + " criteria passed\n";
  return {s, code};
}

void add_run_options(CLI::App* c, Options& o, bool with_init = true) {
  c->add_option("rule,--rule", o.rule, "builtin rule name, or the name inside --rule-file");
  if (with_init) c->add_option("init,--init", o.init, "corner, staircase or line (default: corner for quad, line for tri)");
  c->add_option("coeff,--coeff", o.coeff,
                "constant, generic-random (generic), generic-symbolic (symbolic), sum, product, row-only");
  c->add_option("region,--region", o.region, "rows x columns, e.g. 4x6");
  c->add_option("--rule-file", o.rule_file, "rule file to load");
  c->add_option("--z-value", o.z_value, "constant z: an integer or 'symbolic' (default: drawn from the seed)");
  c->add_option("--backend", o.backend, "exact or specialized");
  c->add_option("--trials", o.trials, "specialized backend trials")->capture_default_str();
  c->add_option("--seed", o.seed, "seed for every random draw")->capture_default_str();
  c->add_option("--threads", o.threads, "worker threads (default: LATDEG_THREADS or all cores)");
}

void add_output_options(CLI::App* c, Options& o) {
  c->add_option("--output", o.output, "table, json or csv")->capture_default_str();
  c->add_option("--out", o.out_path, "write the result to this file instead of stdout");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"latdeg: degree growth of lattice equations"};
  app.name("latdeg");
  app.require_subcommand(1);
  Options o;

  CLI::App* list = app.add_subcommand("list", "list the builtin rules");
  list->add_flag("--json", o.json, "machine-readable listing");
  list->add_option("--rule-file", o.rule_file, "also list the rule in this file");
  add_output_options(list, o);

  CLI::App* degrees = app.add_subcommand("degrees", "degree table of a lattice rule");
  add_run_options(degrees, o);
  add_output_options(degrees, o);

  CLI::App* an = app.add_subcommand("analyze", "degree table with fit, recursion, entropy and class");
  add_run_options(an, o);
  add_output_options(an, o);

  CLI::App* deauto = app.add_subcommand("deauto", "non-autonomous coefficient constraints");
  deauto->require_subcommand(1);
  CLI::App* derive = deauto->add_subcommand("derive", "derive the constraint on z");
  derive->add_option("rule,--rule", o.rule, "rule name");
  derive->add_option("--rule-file", o.rule_file, "rule file to load");
  derive->add_option("--cell", o.cell, "cell m,n where the autonomous degree drops (default: first discrepancy)");
  derive->add_option("--seed", o.seed, "seed")->capture_default_str();
  derive->add_option("--seeds", o.seeds, "seeds used to verify the constraint")->capture_default_str();
  derive->add_option("--backend", o.backend, "backend used to verify (default exact)");
  derive->add_option("--trials", o.trials, "specialized backend trials")->capture_default_str();
  derive->add_option("--threads", o.threads, "worker threads");
  add_output_options(derive, o);

  CLI::App* verify = deauto->add_subcommand("verify", "compare constrained tables with the autonomous table");
  add_run_options(verify, o, false);
  verify->add_option("--seeds", o.seeds, "number of seeds")->capture_default_str();
  add_output_options(verify, o);

  CLI::App* gauge = deauto->add_subcommand("gauge", "check the gauge map of the Liouville lattice");
  gauge->add_option("region,--region", o.region, "rows x columns (default 3x3)");
  gauge->add_option("--seeds", o.seeds, "number of seeds")->capture_default_str();
  gauge->add_option("--seed", o.seed, "first seed")->capture_default_str();
  add_output_options(gauge, o);

  CLI::App* lin = deauto->add_subcommand("linearize", "check the Cole-Hopf linearisation of Burgers");
  lin->add_option("--mode", o.mode, "simple or general")->capture_default_str();
  lin->add_option("region,--region", o.region, "rows x columns (default 4x6)");
  lin->add_option("--seeds", o.seeds, "number of seeds")->capture_default_str();
  lin->add_option("--seed", o.seed, "first seed")->capture_default_str();
  add_output_options(lin, o);

  CLI::App* rep = app.add_subcommand("reproduce", "run the ten acceptance checks");
  rep->add_option("--only", o.only, "run only these criteria");
  rep->add_option("--threads", o.threads, "worker threads");
  add_output_options(rep, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "latdeg: error: " << (msg.empty() ? "invalid arguments" : msg) << '\n';
    return exit_code::usage;
  }

  Result result;
  try {
    if (*list)
      result = cmd_list(o);
    else if (*degrees)
      result = cmd_degrees(o);
    else if (*an)
      result = cmd_analyze(o);
    else if (*derive)
      result = cmd_derive(o);
    else if (*verify)
      result = cmd_verify(o);
    else if (*gauge)
      result = cmd_gauge(o);
    else if (*lin)
      result = cmd_linearize(o);
    else
      result = cmd_reproduce(o);
  } catch (const UsageError& e) {
    err << "latdeg: error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const RuleError& e) {
    err << "latdeg: error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "latdeg: error: " << e.what() << '\n';
    return exit_code::computation;
  }

  if (o.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!(f << result.text)) {
      err << "latdeg: error: cannot write " << o.out_path << '\n';
      return exit_code::computation;
    }
  }
  return result.code;
}

}  // namespace latdeg

#include "latdeg/lattice/rule.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "latdeg/symcore/rational_function.hpp"

namespace latdeg {

std::string_view stencil_name(Stencil s) { return s == Stencil::Quad ? "quad" : "tri"; }

Stencil parse_stencil(std::string_view s) {
  if (s == "quad") return Stencil::Quad;
  if (s == "tri") return Stencil::Tri;
  throw RuleError("unknown stencil '" + std::string(s) + "' (expected quad or tri)");
}

namespace {

// Evaluates the rule with every placeholder and z replaced by an independent
// symbol, which decides exactly whether a denominator vanishes identically.
struct SymbolicEnv {
  RingPtr ring = make_ring({Variable::aux(0), Variable::aux(1), Variable::aux(2), Variable::z(0, 0)});

  RationalFunction constant(const mpz_class& v) { return RationalFunction(Polynomial::constant(ring, v)); }
  RationalFunction cell(Placeholder p) {
    return RationalFunction(Polynomial::variable(ring, Variable::aux(static_cast<int>(p))));
  }
  RationalFunction coefficient() { return RationalFunction(Polynomial::variable(ring, Variable::z(0, 0))); }
  RationalFunction add(const RationalFunction& a, const RationalFunction& b) { return a + b; }
  RationalFunction sub(const RationalFunction& a, const RationalFunction& b) { return a - b; }
  RationalFunction mul(const RationalFunction& a, const RationalFunction& b) { return a * b; }
  RationalFunction div(const RationalFunction& a, const RationalFunction& b) { return a / b; }
  RationalFunction neg(const RationalFunction& a) { return -a; }
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  return true;
}

LatticeRule make_builtin(std::string name, Stencil s, std::string_view expr, std::string title) {
  LatticeRule r;
  r.name = std::move(name);
  r.stencil = s;
  r.expr = parse_expression(expr);
  r.title = std::move(title);
  return r;
}

}  // namespace

void validate_rule(const LatticeRule& rule) {
  if (!rule.expr) throw RuleError("rule '" + rule.name + "' has no expression");
  if (rule.stencil == Stencil::Tri && uses_placeholder(*rule.expr, Placeholder::X10))
    throw RuleError("rule '" + rule.name + "': x10 is not part of the tri stencil");
  SymbolicEnv env;
  try {
    (void)evaluate(*rule.expr, env);
  } catch (const ZeroDivisionError&) {
    throw RuleError("rule '" + rule.name + "': denominator vanishes identically");
  }
}

LatticeRule parse_rule(std::string_view expr_text, Stencil stencil, std::string name) {
  LatticeRule r;
  r.name = std::move(name);
  r.stencil = stencil;
  r.expr = parse_expression(expr_text);
  validate_rule(r);
  return r;
}

LatticeRule parse_rule_file(std::string_view text) {
  std::optional<std::string> name, stencil, expr;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line;
    // '#' inside the quoted rule is not a comment, but the grammar has no '#'
    // anyway; strip from the first one.
    if (auto h = body.find('#'); h != std::string::npos) body.resize(h);
    body = trim(body);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos)
      throw RuleError("rule file line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key == "name") {
      if (!is_identifier(value)) throw RuleError("rule file line " + std::to_string(lineno) + ": bad name");
      name = value;
    } else if (key == "stencil") {
      stencil = value;
    } else if (key == "rule") {
      if (value.size() < 2 || value.front() != '"' || value.back() != '"')
        throw RuleError("rule file line " + std::to_string(lineno) + ": rule must be double-quoted");
      expr = value.substr(1, value.size() - 2);
    } else {
      throw RuleError("rule file line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!name || !stencil || !expr) throw RuleError("rule file needs name, stencil and rule entries");
  return parse_rule(*expr, parse_stencil(*stencil), *name);
}

std::string print_rule_file(const LatticeRule& rule) {
  return "name = " + rule.name + "\nstencil = " + std::string(stencil_name(rule.stencil)) + "\nrule = \"" +
         rule.expression_string() + "\"\n";
}

LatticeRule load_rule_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw RuleError("cannot open rule file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_rule_file(ss.str());
}

const std::vector<LatticeRule>& builtin_rules() {
  // Liouville and sine-Gordon are usually written in product form,
  //   x11 x00 = x10 x01 + z   and   x11 x00 = (1 + z x10 x01)/(x10 x01 + z),
  // and are stored here solved for the target corner x11.
  static const std::vector<LatticeRule> rules = {
      make_builtin("kdv", Stencil::Quad, "x00 + 1/x01 - 1/x10", "lattice KdV"),
      make_builtin("pkdv", Stencil::Quad, "x00 + z/(x10 - x01)", "potential lattice KdV"),
      make_builtin("mkdv", Stencil::Quad, "x00*(x10 - z*x01)/(z*x10 - x01)", "lattice mKdV"),
      make_builtin("sine_gordon", Stencil::Quad, "(1 + z*x10*x01)/(x00*(x10*x01 + z))", "discrete sine-Gordon"),
      make_builtin("liouville", Stencil::Quad, "(x10*x01 + z)/x00", "discrete Liouville"),
      make_builtin("burgers", Stencil::Tri, "x00*(1 + z*x01)/(1 + z*x00)", "discrete Burgers"),
  };
  return rules;
}

LatticeRule builtin(std::string_view name) {
  for (const auto& r : builtin_rules())
    if (r.name == name) return r;
  throw RuleError("unknown builtin rule '" + std::string(name) + "'");
}

bool operator==(const LatticeRule& a, const LatticeRule& b) {
  return a.name == b.name && a.stencil == b.stencil && structurally_equal(*a.expr, *b.expr);
}

}  // namespace latdeg

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latdeg/lattice/expression.hpp"

namespace latdeg {

/// Quad: target x^{m+1}_{n+1} from x00, x10, x01.
/// Tri: target x^{m+1}_n from x00 and x01.
enum class Stencil { Quad, Tri };

std::string_view stencil_name(Stencil s);
Stencil parse_stencil(std::string_view s);

class RuleError : public Error {
 public:
  using Error::Error;
};

struct LatticeRule {
  std::string name;
  Stencil stencil = Stencil::Quad;
  ExprPtr expr;
  std::string title;  // human-readable label, empty for user rules

  std::string expression_string() const { return print_expression(*expr); }
};

/// Parses and validates a rule: legal placeholders for the stencil and a
/// denominator that does not vanish identically.
LatticeRule parse_rule(std::string_view expr_text, Stencil stencil, std::string name = "custom");
void validate_rule(const LatticeRule& rule);

/// Line-oriented rule file: `name = ident`, `stencil = quad|tri`,
/// `rule = "expr"`; '#' starts a comment.
LatticeRule parse_rule_file(std::string_view text);
std::string print_rule_file(const LatticeRule& rule);
LatticeRule load_rule_file(const std::string& path);

const std::vector<LatticeRule>& builtin_rules();
LatticeRule builtin(std::string_view name);

bool operator==(const LatticeRule& a, const LatticeRule& b);

}  // namespace latdeg

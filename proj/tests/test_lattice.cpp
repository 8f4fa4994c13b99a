#include "doctest.h"

#include <random>
#include <set>

#include "latdeg/lattice/engine.hpp"
#include "latdeg/lattice/univariate_field.hpp"
#include "support/algebras.hpp"

using namespace latdeg;
using latdeg::testing::default_init;
using latdeg::testing::NumericAlgebra;
using latdeg::testing::RationalAlgebra;

TEST_CASE("expression parsing and printing") {
  auto e = parse_expression("x00 + z/(x10 - x01)");
  CHECK(print_expression(*e) == "x00 + z/(x10 - x01)");
  CHECK(print_expression(*parse_expression("((x00))*(x10)")) == "x00*x10");
  CHECK(print_expression(*parse_expression("x00 - (x10 - x01)")) == "x00 - (x10 - x01)");
  CHECK(print_expression(*parse_expression("x00 - x10 - x01")) == "x00 - x10 - x01");
  CHECK(print_expression(*parse_expression("-x00*-x01")) == "-x00*-x01");
  CHECK(print_expression(*parse_expression("-(x00 + 1)")) == "-(x00 + 1)");
  CHECK(print_expression(*parse_expression("x00/(x10/x01)")) == "x00/(x10/x01)");

  try {
    (void)parse_expression("x00 + y");
    FAIL("expected a syntax error");
  } catch (const ParseError& err) {
    CHECK(err.position() == 6);
  }
  CHECK_THROWS_AS((void)parse_expression("x00 +"), ParseError);
  CHECK_THROWS_AS((void)parse_expression("(x00"), ParseError);
  CHECK_THROWS_AS((void)parse_expression("x00 x01"), ParseError);
}

namespace {

ExprPtr random_expr(std::mt19937_64& gen, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  int k = pick(gen);
  if (depth == 0 || k < 3) {
    switch (k % 5) {
      case 0:
        return Expr::placeholder(Placeholder::X00);
      case 1:
        return Expr::placeholder(Placeholder::X10);
      case 2:
        return Expr::placeholder(Placeholder::X01);
      case 3:
        return Expr::coefficient();
      default:
        return Expr::constant(k);
    }
  }
  if (k == 3) return Expr::negate(random_expr(gen, depth - 1));
  static const Expr::Kind ops[] = {Expr::Kind::Add, Expr::Kind::Sub, Expr::Kind::Mul, Expr::Kind::Div};
  return Expr::binary(ops[k % 4], random_expr(gen, depth - 1), random_expr(gen, depth - 1));
}

}  // namespace

TEST_CASE("print then parse is the identity on expression trees") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 500; ++i) {
    ExprPtr e = random_expr(gen, 5);
    std::string s = print_expression(*e);
    ExprPtr back = parse_expression(s);
    CHECK_MESSAGE(structurally_equal(*e, *back), s);
    CHECK(print_expression(*back) == s);
  }
}

TEST_CASE("rule validation") {
  LatticeRule p = parse_rule("x00 + z/(x10 - x01)", Stencil::Quad, "pkdv");
  CHECK(p == builtin("pkdv"));
  CHECK_NOTHROW(parse_rule("x00", Stencil::Quad));
  CHECK_THROWS_AS(parse_rule("x00 + z/(x10 - x10)", Stencil::Quad), RuleError);
  CHECK_THROWS_AS(parse_rule("x00/(z - z)", Stencil::Quad), RuleError);
  CHECK_THROWS_AS(parse_rule("x00 + x10", Stencil::Tri), RuleError);
  CHECK_NOTHROW(parse_rule("x00 + x01", Stencil::Tri));
}

TEST_CASE("builtin registry") {
  const auto& rules = builtin_rules();
  REQUIRE(rules.size() == 6);
  CHECK(builtin("pkdv").stencil == Stencil::Quad);
  CHECK(builtin("pkdv").expression_string() == "x00 + z/(x10 - x01)");
  CHECK(builtin("burgers").stencil == Stencil::Tri);
  CHECK(builtin("burgers").expression_string() == "x00*(1 + z*x01)/(1 + z*x00)");
  CHECK(builtin("liouville").expression_string() == "(x10*x01 + z)/x00");
  for (const auto& r : rules) {
    CHECK_NOTHROW(validate_rule(r));
    CHECK(parse_rule_file(print_rule_file(r)) == r);
  }
  CHECK_THROWS_AS(builtin("toda"), RuleError);
}

TEST_CASE("rule files") {
  auto r = parse_rule_file("# a comment\nname = my_rule\n\nstencil = tri  # trailing\nrule = \"x00*x01\"\n");
  CHECK(r.name == "my_rule");
  CHECK(r.stencil == Stencil::Tri);
  CHECK(r.expression_string() == "x00*x01");
  CHECK_THROWS_AS(parse_rule_file("name = a\nstencil = quad\n"), RuleError);
  CHECK_THROWS_AS(parse_rule_file("name = a\nstencil = hex\nrule = \"x00\"\n"), RuleError);
  CHECK_THROWS_AS(parse_rule_file("name = a\nstencil = quad\nrule = x00\n"), RuleError);
  CHECK_THROWS_AS(parse_rule_file("name = a\nstencil = tri\nrule = \"x10\"\n"), RuleError);
}

TEST_CASE("initial data plans") {
  auto corner = make_plan(Stencil::Quad, {InitScheme::Corner, {4, 6}});
  CHECK(corner.initial.size() == 6 + 3);
  CHECK(corner.order.size() == 3 * 5);
  CHECK(corner.data_variables.size() == 6 + 3 + 1);

  auto line = make_plan(Stencil::Tri, {InitScheme::Line, {5, 4}});
  CHECK(line.initial.size() == 8);
  CHECK(line.order.front() == CellIndex{1, 0});

  auto stair = make_plan(Stencil::Quad, {InitScheme::Staircase, {3, 3}});
  // Every computed cell reads only cells that exist earlier.
  std::set<CellIndex> have;
  for (auto& [c, v] : stair.initial) have.insert(c);
  for (CellIndex t : stair.order) {
    CellIndex s = stair.source_of(t);
    for (Placeholder p : {Placeholder::X00, Placeholder::X10, Placeholder::X01})
      CHECK(have.count(stair.placeholder_cell(s, p)) == 1);
    have.insert(t);
  }
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) CHECK(have.count({m, n}) == 1);

  CHECK_THROWS_AS(make_plan(Stencil::Quad, {InitScheme::Line, {3, 3}}), InitError);
  CHECK_THROWS_AS(make_plan(Stencil::Tri, {InitScheme::Corner, {3, 3}}), InitError);
  CHECK_THROWS_AS(make_plan(Stencil::Tri, {InitScheme::Staircase, {3, 3}}), InitError);
  CHECK_THROWS_AS(make_plan(Stencil::Quad, {InitScheme::Corner, {0, 3}}), InitError);
}

TEST_CASE("coefficient generators satisfy their defining relations") {
  std::vector<CellIndex> cells;
  for (int m = 0; m < 5; ++m)
    for (int n = 0; n < 5; ++n) cells.push_back({m, n});
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto sum = materialize(CoefficientGrid::sum(seed), cells);
    auto prod = materialize(CoefficientGrid::product(seed), cells);
    auto row = materialize(CoefficientGrid::row_only(seed), cells);
    auto gen = materialize(CoefficientGrid::generic_random(seed), cells);
    std::set<mpz_class> distinct;
    for (auto& [c, v] : gen) {
      CHECK(v != 0);
      distinct.insert(v);
    }
    CHECK(distinct.size() == cells.size());
    for (int m = 0; m + 1 < 5; ++m)
      for (int n = 0; n + 1 < 5; ++n) {
        CHECK(sum[{m + 1, n + 1}] - sum[{m + 1, n}] - sum[{m, n + 1}] + sum[{m, n}] == 0);
        CHECK(prod[{m + 1, n + 1}] * prod[{m, n}] == prod[{m + 1, n}] * prod[{m, n + 1}]);
        CHECK(row[{m, n + 1}] == row[{m, n}]);
        CHECK(sum[{m, n}] >= 4);
      }
  }
  CHECK(materialize(CoefficientGrid::sum(5), cells) == materialize(CoefficientGrid::sum(5), cells));
  CHECK(materialize(CoefficientGrid::sum(5), cells) != materialize(CoefficientGrid::sum(6), cells));
  CHECK_THROWS_AS(materialize(CoefficientGrid::generic_symbolic(), cells), InitError);
  CHECK_THROWS_AS(materialize(CoefficientGrid::explicit_grid({}), cells), InitError);
}

namespace {

struct Sym {
  RingPtr ring;
  Polynomial v(const Variable& x) const { return Polynomial::variable(ring, x); }
};

}  // namespace

TEST_CASE("first iterates match hand computation") {
  SUBCASE("pkdv") {
    LatticeState s = iterate(builtin("pkdv"), {InitScheme::Corner, {2, 2}}, CoefficientGrid::constant());
    Sym y{s.ring()};
    auto p0 = y.v(Variable::p(0)), p1 = y.v(Variable::p(1)), r1 = y.v(Variable::r(1)), q = y.v(Variable::q());
    auto z = y.v(Variable::z(0, 0));
    RationalFunction expect(p0 * p1 - p0 * r1 - z * q * q, q * (p1 - r1));
    CHECK(s.cell({1, 1}) == expect);
    CHECK(s.degree({1, 1}) == 2);
  }
  SUBCASE("kdv") {
    LatticeState s = iterate(builtin("kdv"), {InitScheme::Corner, {2, 2}}, CoefficientGrid::constant());
    Sym y{s.ring()};
    auto p0 = y.v(Variable::p(0)), p1 = y.v(Variable::p(1)), r1 = y.v(Variable::r(1)), q = y.v(Variable::q());
    RationalFunction expect(p0 * p1 * r1 + q * q * r1 - q * q * p1, q * p1 * r1);
    CHECK(s.cell({1, 1}) == expect);
    CHECK(s.degree({1, 1}) == 3);
    CHECK(s.cell({1, 1}).to_string() == "(p0*p1*r1 - p1*q^2 + r1*q^2)/(p1*r1*q)");
  }
  SUBCASE("identity copy") {
    LatticeState s = iterate(parse_rule("x00", Stencil::Quad), {InitScheme::Corner, {4, 5}}, CoefficientGrid::constant());
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 5; ++n) {
        int k = std::min(m, n);
        CHECK(s.degree({m, n}) == 1);
        CHECK(s.cell({m, n}) == s.cell({m - k, n - k}));
      }
  }
}

TEST_CASE("factored engine equals plain rational-function iteration") {
  for (const auto& rule : builtin_rules()) {
    for (auto coeffs : {CoefficientGrid::constant(), CoefficientGrid::generic_symbolic(),
                        CoefficientGrid::generic_random(3), CoefficientGrid::constant(mpz_class(5))}) {
      // The plain gcd path is slow once a symbolic z meets cancellations;
      // keep those regions small.
      bool symbolic = coeffs.mode == CoeffMode::GenericSymbolic || !coeffs.value;
      int size = symbolic && coeffs.mode != CoeffMode::GenericRandom ? 3 : 4;
      LatticeState s = iterate(rule, default_init(rule, size, size), coeffs);
      RationalAlgebra ref{s.ring()};
      auto cells = run_lattice(rule, s.plan(), s.resolved(), ref);
      for (const auto& [c, v] : cells) {
        CHECK_MESSAGE(s.cell(c) == v, rule.name, " ", coeffs.describe(), " ", to_string(c));
        if (!v.is_zero()) CHECK(s.degree(c) == v.degree());
      }
    }
  }
}

TEST_CASE("symbolic cells agree with numeric iteration at random points") {
  std::mt19937_64 gen(42);
  std::uniform_int_distribution<int> d(-40, 40);
  for (const auto& rule : builtin_rules()) {
    LatticeState s = iterate(rule, default_init(rule, 4, 4), CoefficientGrid::generic_symbolic());
    LatticeState small = iterate(rule, default_init(rule, 3, 3), CoefficientGrid::generic_symbolic());
    int trials = 0;
    while (trials < 8) {
      NumericAlgebra num;
      std::vector<mpq_class> pt(s.ring()->size());
      for (std::size_t i = 0; i < pt.size(); ++i) {
        pt[i] = d(gen);
        num.values[s.ring()->var(i)] = pt[i];
      }
      std::map<CellIndex, mpq_class> values;
      try {
        values = run_lattice(rule, s.plan(), s.resolved(), num);
      } catch (const Error&) {
        continue;  // q = 0 or a zero denominator at this point
      }
      ++trials;
      for (const auto& [c, v] : values) {
        // Unexpanded factors on the full region, the expanded canonical form
        // on a smaller one (same ring prefix is not guaranteed, so rebuild
        // the point for it).
        try {
          CHECK(s.evaluate(c, pt) == v);
        } catch (const ZeroDivisionError&) {
        }
        if (!small.contains(c)) continue;
        std::vector<mpq_class> spt(small.ring()->size());
        for (std::size_t i = 0; i < spt.size(); ++i) spt[i] = num.values.at(small.ring()->var(i));
        const RationalFunction& f = small.cell(c);
        mpq_class den = f.den().evaluate(spt);
        if (den != 0) CHECK(f.num().evaluate(spt) / den == v);
      }
    }
  }
}

TEST_CASE("iteration is deterministic and homogeneous") {
  auto a = iterate(builtin("mkdv"), {InitScheme::Corner, {4, 4}}, CoefficientGrid::generic_random(9));
  auto b = iterate(builtin("mkdv"), {InitScheme::Corner, {4, 4}}, CoefficientGrid::generic_random(9));
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      CHECK(a.cell({m, n}) == b.cell({m, n}));
      const RationalFunction& f = a.cell({m, n});
      CHECK(f.num().is_homogeneous());
      CHECK(f.den().is_homogeneous());
      CHECK(f.num().weighted_degree() == f.den().weighted_degree());
      CHECK(f.is_reduced(GcdMethod::Auto));
    }
}

TEST_CASE("degenerate data names the cell") {
  try {
    (void)iterate(parse_rule("z/(x10 - x01)", Stencil::Quad), {InitScheme::Corner, {3, 3}},
                  CoefficientGrid::constant(mpz_class(0)));
    FAIL("expected a degenerate-data error");
  } catch (const DegenerateDataError& e) {
    CHECK(e.cell() == CellIndex{2, 2});
  }
}

TEST_CASE("staircase data for pkdv") {
  LatticeState s = iterate(builtin("pkdv"), {InitScheme::Staircase, {4, 4}}, CoefficientGrid::constant());
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      int N = m + n;
      CHECK(s.degree({m, n}) == 1 + N * (N - 1) / 2);
    }
}

TEST_CASE("univariate field arithmetic") {
  std::mt19937_64 gen(1);
  UniAlgebra alg = UniAlgebra::random({Variable::p(0), Variable::p(1), Variable::q()}, {}, gen);
  UniRational a = alg.datum(Variable::p(0)), b = alg.datum(Variable::p(1));
  UniRational s = alg.add(a, b);
  CHECK(s.degree() == 1);
  CHECK(alg.sub(s, b).num == a.num);
  CHECK(alg.sub(s, b).den == a.den);
  CHECK(alg.sub(a, a).is_zero());
  UniRational m = alg.mul(alg.div(a, b), b);
  CHECK(m.num == a.num);
  CHECK(m.den == a.den);
  CHECK_THROWS_AS(alg.div(a, alg.sub(b, b)), ZeroDivisionError);
  UniRational r = alg.div(alg.constant(1), alg.sub(a, b));
  CHECK(r.degree() == 1);
}

TEST_CASE("line substitution degrees agree with exact degrees") {
  std::mt19937_64 gen(8);
  for (const auto& rule : builtin_rules()) {
    int rows = rule.name == "kdv" ? 3 : 4;
    LatticeState s = iterate(rule, default_init(rule, rows, 4), CoefficientGrid::generic_random(4));
    UniAlgebra alg = UniAlgebra::random(s.plan().data_variables, s.resolved().symbols(), gen);
    auto cells = run_lattice(rule, s.plan(), s.resolved(), alg);
    for (const auto& [c, v] : cells) {
      CHECK(v.degree() <= s.degree(c));
      CHECK_MESSAGE(v.degree() == s.degree(c), rule.name, " ", to_string(c));
    }
  }
}

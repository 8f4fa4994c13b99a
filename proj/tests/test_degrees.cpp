#include "doctest.h"

#include <algorithm>

#include "latdeg/degrees/backends.hpp"
#include "support/algebras.hpp"

using namespace latdeg;
using latdeg::testing::default_init;

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

DegreeTable specialized(const std::string& rule, const CoefficientGrid& coeffs, int rows, int cols,
                        int trials = 3, std::uint64_t seed = 1) {
  const LatticeRule& r = builtin(rule);
  return degree_table_specialized(r, default_init(r, rows, cols), coeffs, {trials, seed, 0});
}

}  // namespace

TEST_CASE("kdv exact table") {
  DegreeTable t = degree_table_exact(builtin("kdv"), {InitScheme::Corner, {4, 6}}, CoefficientGrid::constant());
  std::vector<std::vector<long>> expected{
      {1, 1, 1, 1, 1, 1}, {1, 3, 5, 7, 9, 11}, {1, 5, 13, 19, 25, 31}, {1, 7, 19, 31, 41, 51}};
  CHECK(t.matrix() == expected);
  CHECK(t.meta().rule == "kdv");
  CHECK(t.meta().backend == Backend::Exact);
}

TEST_CASE("pkdv closed forms") {
  DegreeTable c = degree_table_exact(builtin("pkdv"), {InitScheme::Corner, {4, 6}}, CoefficientGrid::constant());
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 6; ++n) CHECK(c.at(m, n) == m * n + 1);
  CHECK(c.at(3, 5) == 16);

  DegreeTable g = specialized("pkdv", CoefficientGrid::generic_random(4), 5, 5);
  for (int m = 0; m < 5; ++m)
    for (int n = 0; n < 5; ++n) CHECK(g.at(m, n) == binomial(m + n, m));

  DegreeTable s = degree_table_exact(builtin("pkdv"), {InitScheme::Staircase, {4, 4}}, CoefficientGrid::constant());
  const long seq[] = {1, 1, 2, 4, 7, 11, 16};
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) CHECK(s.at(m, n) == seq[m + n]);
}

TEST_CASE("specialized backend matches exact on pkdv up to (4,4)") {
  InitialData init{InitScheme::Corner, {5, 5}};
  DegreeTable exact = degree_table_exact(builtin("pkdv"), init, CoefficientGrid::constant());
  DegreeTable fast = degree_table_specialized(builtin("pkdv"), init, CoefficientGrid::constant(), {3, 11, 0});
  CHECK(compare_tables(exact, fast).equal);
  CHECK(fast.meta().trials == 3);
  CHECK(fast.meta().backend == Backend::Specialized);
}

TEST_CASE("mkdv generic and sine-gordon tables") {
  DegreeTable mk = specialized("mkdv", CoefficientGrid::generic_random(5), 4, 6);
  CHECK(mk.row(0) == std::vector<long>{1, 1, 1, 1, 1, 1});
  CHECK(mk.row(1) == std::vector<long>{1, 2, 3, 4, 5, 6});
  CHECK(mk.row(2) == std::vector<long>{1, 3, 7, 13, 21, 31});
  auto r3 = mk.row(3);
  CHECK(std::vector<long>(r3.begin(), r3.begin() + 5) == std::vector<long>{1, 4, 13, 32, 65});

  DegreeTable sg = specialized("sine_gordon", CoefficientGrid::constant(), 4, 5);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 5; ++n) CHECK(sg.at(m, n) == m * n + std::min(m, n) + 1);
  CHECK(sg.at(3, 4) == 16);
}

TEST_CASE("specialized backend never exceeds exact and agrees with three trials") {
  for (const auto& rule : builtin_rules()) {
    for (auto coeffs : {CoefficientGrid::constant(), CoefficientGrid::generic_random(2), CoefficientGrid::sum(3),
                        CoefficientGrid::product(4), CoefficientGrid::row_only(5)}) {
      InitialData init = default_init(rule, 4, 4);
      DegreeTable exact = degree_table_exact(rule, init, coeffs);
      DegreeTable one = degree_table_specialized(rule, init, coeffs, {1, 7, 0});
      DegreeTable three = degree_table_specialized(rule, init, coeffs, {3, 7, 0});
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          CHECK(one.at(m, n) <= exact.at(m, n));
          CHECK_MESSAGE(three.at(m, n) == exact.at(m, n), rule.name, " ", coeffs.describe(), " ",
                        to_string({m, n}));
        }
    }
  }
}

TEST_CASE("schedule independence") {
  const LatticeRule& r = builtin("mkdv");
  InitialData init{InitScheme::Corner, {5, 5}};
  DegreeTable serial = degree_table_specialized(r, init, CoefficientGrid::generic_random(1), {6, 99, 1});
  DegreeTable parallel = degree_table_specialized(r, init, CoefficientGrid::generic_random(1), {6, 99, 4});
  CHECK(serial == parallel);
}

TEST_CASE("symmetry, monotonicity and the burgers asymmetry") {
  for (const auto& rule : builtin_rules()) {
    for (auto coeffs : {CoefficientGrid::constant(), CoefficientGrid::generic_random(8)}) {
      DegreeTable t = specialized(rule.name, coeffs, 5, 5);
      for (int m = 0; m < 5; ++m)
        for (int n = 0; n < 5; ++n) {
          if (rule.stencil == Stencil::Quad) CHECK(t.at(m, n) == t.at(n, m));
          if (m + 1 < 5) CHECK(t.at(m, n) <= t.at(m + 1, n));
          if (n + 1 < 5) CHECK(t.at(m, n) <= t.at(m, n + 1));
        }
    }
  }
  DegreeTable b = specialized("burgers", CoefficientGrid::constant(), 6, 4);
  for (int m = 0; m < 6; ++m)
    for (int n = 0; n < 4; ++n) CHECK(b.at(m, n) == m + 1);
}

TEST_CASE("table comparison") {
  InitialData init{InitScheme::Corner, {4, 4}};
  const LatticeRule& pk = builtin("pkdv");
  DegreeTable constant = degree_table_exact(pk, init, CoefficientGrid::constant());
  CHECK(compare_tables(constant, constant).equal);
  CHECK(compare_tables(constant, degree_table_exact(pk, init, CoefficientGrid::sum(6))).equal);

  auto diff = compare_tables(constant, degree_table_exact(pk, init, CoefficientGrid::generic_random(6)));
  REQUIRE_FALSE(diff.equal);
  REQUIRE(diff.first_discrepancy);
  CHECK(diff.first_discrepancy->cell == CellIndex{2, 2});
  CHECK(diff.first_discrepancy->a == 5);
  CHECK(diff.first_discrepancy->b == 6);

  const LatticeRule& bu = builtin("burgers");
  InitialData line{InitScheme::Line, {4, 4}};
  auto bd = compare_tables(degree_table_exact(bu, line, CoefficientGrid::constant()),
                           degree_table_exact(bu, line, CoefficientGrid::generic_random(6)));
  REQUIRE(bd.first_discrepancy);
  CHECK(bd.first_discrepancy->cell == CellIndex{2, 0});
  CHECK(bd.first_discrepancy->a == 3);
  CHECK(bd.first_discrepancy->b == 4);

  CHECK_THROWS_AS(compare_tables(constant, degree_table_exact(pk, {InitScheme::Corner, {3, 4}},
                                                              CoefficientGrid::constant())),
                  RegionMismatchError);
}

TEST_CASE("output formats") {
  DegreeTable t = degree_table_exact(builtin("kdv"), {InitScheme::Corner, {3, 3}}, CoefficientGrid::constant());
  CHECK(to_csv(t) == "1,1,1\n1,3,5\n1,5,13\n");
  CHECK(to_text(t) == " 1  1  1\n 1  3  5\n 1  5 13\n");
  auto j = to_json(t);
  CHECK(j["rule"] == "kdv");
  CHECK(j["init"] == "corner");
  CHECK(j["coeff_mode"] == "constant");
  CHECK(j["backend"] == "exact");
  CHECK(j["region"] == nlohmann::json::array({3, 3}));
  CHECK(j["degrees"][2][2] == 13);
}

TEST_CASE("all-degenerate trials are reported") {
  LatticeRule r = parse_rule("z/(x10 - x01)", Stencil::Quad, "degenerate");
  CHECK_THROWS_AS(degree_table_specialized(r, {InitScheme::Corner, {3, 3}}, CoefficientGrid::constant(mpz_class(0)),
                                           {3, 1, 0}),
                  AllTrialsDegenerateError);
}

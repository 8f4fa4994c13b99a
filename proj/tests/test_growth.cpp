#include "doctest.h"

#include <cmath>
#include <functional>

#include "latdeg/degrees/backends.hpp"
#include "latdeg/growth/growth.hpp"
#include "support/algebras.hpp"

using namespace latdeg;
using latdeg::testing::default_init;

namespace {

DegreeTable table_of(int rows, int cols, const std::function<long(int, int)>& f,
                     InitScheme scheme = InitScheme::Corner) {
  TableMeta meta;
  meta.rule = "synthetic";
  meta.init = scheme;
  DegreeTable t({rows, cols}, meta);
  for (int m = 0; m < rows; ++m)
    for (int n = 0; n < cols; ++n) t.set(m, n, f(m, n));
  return t;
}

// Pascal's triangle built by addition only.
DegreeTable pascal(int size) {
  std::vector<std::vector<long>> c(size, std::vector<long>(size, 1));
  for (int m = 1; m < size; ++m)
    for (int n = 1; n < size; ++n) c[m][n] = c[m - 1][n] + c[m][n - 1];
  return table_of(size, size, [&](int m, int n) { return c[m][n]; });
}

DegreeTable fast(const std::string& rule, const CoefficientGrid& coeffs, int size) {
  const LatticeRule& r = builtin(rule);
  return degree_table_specialized(r, default_init(r, size, size), coeffs, {3, 5, 0});
}

}  // namespace

TEST_CASE("closed forms of the known tables") {
  DegreeTable kdv = degree_table_exact(builtin("kdv"), {InitScheme::Corner, {4, 6}}, CoefficientGrid::constant());
  ClosedFormFit f = fit_closed_form(kdv);
  REQUIRE(f.valid);
  CHECK(f.to_string() == "4*m*n - 2*max(m,n) + 1");
  CHECK(f.coefficient(BasisTerm::MN) == 4);
  CHECK(f.coefficient(BasisTerm::Max) == -2);
  CHECK(f.coefficient(BasisTerm::One) == 1);

  CHECK(fit_closed_form(fast("liouville", CoefficientGrid::constant(), 5)).to_string() == "m + n");
  CHECK(fit_closed_form(fast("sine_gordon", CoefficientGrid::constant(), 5)).to_string() ==
        "m*n + min(m,n) + 1");
  CHECK(fit_closed_form(fast("pkdv", CoefficientGrid::constant(), 5)).to_string() == "m*n + 1");
  CHECK(fit_closed_form(fast("burgers", CoefficientGrid::constant(), 6)).to_string() == "m + 1");
  CHECK_FALSE(fit_closed_form(fast("pkdv", CoefficientGrid::generic_random(1), 5)).valid);

  DegreeTable stair =
      degree_table_specialized(builtin("pkdv"), {InitScheme::Staircase, {4, 4}}, CoefficientGrid::constant(), {});
  ClosedFormFit s = fit_closed_form(stair);
  REQUIRE(s.valid);
  CHECK(s.to_string() == "1/2*N^2 - 1/2*N + 1");

  CHECK_THROWS_AS(fit_closed_form(table_of(3, 5, [](int, int) { return 1L; })), GrowthError);
}

TEST_CASE("fits never leave a residual") {
  for (auto f : std::vector<std::function<long(int, int)>>{
           [](int m, int n) { return 3L * m * n - std::min(m, n) + 7; },
           [](int m, int n) { return long(m) * m + 2L * n; },
           [](int m, int n) { return 2L * std::max(m, n) + m - 1; }}) {
    DegreeTable t = table_of(6, 7, f);
    ClosedFormFit fit = fit_closed_form(t);
    REQUIRE(fit.valid);
    for (int m = 1; m < 6; ++m)
      for (int n = 1; n < 7; ++n) CHECK(fit(m, n) == f(m, n));
  }
  // Interior cells only: the boundary may disagree.
  DegreeTable t = table_of(5, 5, [](int m, int n) { return m * n ? 4L * m * n - 2L * std::max(m, n) + 1 : 1L; });
  CHECK(fit_closed_form(t).valid);
}

TEST_CASE("recursions") {
  RecursionFit mk = detect_recursion(fast("mkdv", CoefficientGrid::generic_random(2), 6));
  REQUIRE(mk.valid);
  CHECK(mk.a == 1);
  CHECK(mk.b == 1);
  CHECK(mk.c == 1);
  CHECK(mk.e == -1);
  CHECK_FALSE(mk.delta);
  CHECK(mk.to_string() == "d(m+1,n+1) = d(m+1,n) + d(m,n+1) + d(m,n) - 1");

  RecursionFit sg = detect_recursion(fast("sine_gordon", CoefficientGrid::generic_random(2), 6));
  REQUIRE(sg.valid);
  CHECK(sg.a == 1);
  CHECK(sg.b == 1);
  CHECK(sg.c == 1);
  CHECK(sg.e == -1);
  REQUIRE(sg.delta);
  CHECK(*sg.delta == 1);
}

TEST_CASE("pascal table recursion against brute force") {
  DegreeTable p = pascal(7);
  RecursionFit r = detect_recursion(p);
  REQUIRE(r.valid);
  CHECK(r.a == 1);
  CHECK(r.b == 1);
  CHECK(r.c == 0);
  CHECK(r.e == 0);
  CHECK_FALSE(r.delta);

  // Every small integer recursion that holds on the whole table.
  int hits = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int e = -3; e <= 3; ++e) {
          bool ok = true;
          for (int m = 0; m + 1 < 7 && ok; ++m)
            for (int n = 0; n + 1 < 7 && ok; ++n)
              ok = p.at(m + 1, n + 1) == a * p.at(m + 1, n) + b * p.at(m, n + 1) + c * p.at(m, n) + e;
          if (ok) {
            ++hits;
            CHECK((a == 1 && b == 1 && c == 0 && e == 0));
          }
        }
  CHECK(hits == 1);

  // The lattice produces the same table.
  CHECK(fast("pkdv", CoefficientGrid::generic_random(3), 7) == p);
}

TEST_CASE("entropy") {
  CHECK(entropy_estimate(fast("pkdv", CoefficientGrid::constant(), 5)).E == 0.0);

  // Central binomials C(2k,k) grow like 4^k / sqrt(k): ratio 2 per unit of m+n.
  double previous = 10;
  for (int size : {7, 12, 20}) {
    EntropyEstimate e = entropy_estimate(pascal(size));
    CHECK(std::abs(e.ratio - 2.0) < std::abs(previous - 2.0));
    CHECK(std::abs(e.ratio - 2.0) < 0.01);
    previous = e.ratio;
  }

  EntropyEstimate mk = entropy_estimate(fast("mkdv", CoefficientGrid::generic_random(1), 7));
  CHECK(std::abs(mk.ratio - (1 + std::sqrt(2.0))) / (1 + std::sqrt(2.0)) < 0.05);
  CHECK(mk.E == doctest::Approx(std::log(mk.ratio)));

  CHECK_THROWS_AS(entropy_estimate(pascal(4)), GrowthError);
}

TEST_CASE("classification of the builtin equations") {
  struct Case {
    const char* rule;
    CoefficientGrid coeffs;
    GrowthKind kind;
  };
  const Case cases[] = {
      {"kdv", CoefficientGrid::constant(), GrowthKind::Polynomial},
      {"pkdv", CoefficientGrid::constant(), GrowthKind::Polynomial},
      {"pkdv", CoefficientGrid::sum(1), GrowthKind::Polynomial},
      {"pkdv", CoefficientGrid::generic_random(1), GrowthKind::Exponential},
      {"mkdv", CoefficientGrid::constant(), GrowthKind::Polynomial},
      {"mkdv", CoefficientGrid::product(1), GrowthKind::Polynomial},
      {"mkdv", CoefficientGrid::generic_random(1), GrowthKind::Exponential},
      {"sine_gordon", CoefficientGrid::constant(), GrowthKind::Polynomial},
      {"sine_gordon", CoefficientGrid::product(1), GrowthKind::Polynomial},
      {"sine_gordon", CoefficientGrid::generic_random(1), GrowthKind::Exponential},
      {"liouville", CoefficientGrid::constant(), GrowthKind::Linear},
      {"burgers", CoefficientGrid::constant(), GrowthKind::Linear},
      {"burgers", CoefficientGrid::row_only(1), GrowthKind::Linear},
      {"burgers", CoefficientGrid::generic_random(1), GrowthKind::Exponential},
  };
  for (const Case& c : cases) {
    GrowthClass g = classify(fast(c.rule, c.coeffs, 6));
    CHECK_MESSAGE(g.kind == c.kind, c.rule, " ", c.coeffs.describe());
    CHECK(g.interpretation == interpretation_of(g.kind));
  }
  CHECK(interpretation_of(GrowthKind::Linear) == Interpretation::Linearisable);
  CHECK(interpretation_of(GrowthKind::Polynomial) == Interpretation::ISTIntegrable);
  CHECK(interpretation_of(GrowthKind::Exponential) == Interpretation::NonIntegrable);

  // No fit and flat ratios: an explicit verdict, not a guess.
  DegreeTable odd = table_of(6, 6, [](int m, int n) { return (m * 7 + n * 3) % 5 + 1L; });
  CHECK(classify(odd).kind == GrowthKind::Indeterminate);
  CHECK(classify(odd).interpretation == Interpretation::Unknown);
}

TEST_CASE("report") {
  DegreeTable t = fast("mkdv", CoefficientGrid::generic_random(1), 7);
  GrowthReport r = analyze(t);
  auto j = to_json(r);
  CHECK(j["class"] == "exponential");
  CHECK(j["interpretation"] == "non-integrable");
  CHECK(j["recursion"]["e"] == "-1");
  CHECK(j["fit"]["valid"] == false);
  CHECK(j["entropy"]["ratio"].get<double>() > 2.3);
  CHECK(to_json(analyze(t)) == j);
  CHECK(diagonal_csv(t).rfind("k,d,log_d_over_2k\n1,2,", 0) == 0);
}

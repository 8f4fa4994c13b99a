#include "doctest.h"

#include "latdeg/deauto/deauto.hpp"

using namespace latdeg;

namespace {

Polynomial z(const RingPtr& ring, int m, int n) { return Polynomial::variable(ring, Variable::z(m, n)); }

}  // namespace

TEST_CASE("constraint derivation") {
  ConstraintPolynomial pk = derive_constraint(builtin("pkdv"), {2, 2});
  const RingPtr& r = pk.poly.ring();
  CHECK(same_constraint(pk.poly, z(r, 1, 1) - z(r, 1, 0) - z(r, 0, 1) + z(r, 0, 0)));
  CHECK(pk.to_string() == "z11 - z10 - z01 + z00");
  CHECK(pk.movable_factor.to_string() == "p1 - r1");
  CHECK(pk.cell == CellIndex{2, 2});

  for (const char* name : {"mkdv", "sine_gordon"}) {
    ConstraintPolynomial c = derive_constraint(builtin(name), {2, 2});
    const RingPtr& ring = c.poly.ring();
    CHECK_MESSAGE(same_constraint(c.poly, z(ring, 1, 1) * z(ring, 0, 0) - z(ring, 1, 0) * z(ring, 0, 1)), name,
                  " ", c.to_string());
  }

  ConstraintPolynomial bu = derive_constraint(builtin("burgers"), {2, 0});
  const RingPtr& br = bu.poly.ring();
  CHECK(same_constraint(bu.poly, z(br, 0, 1) - z(br, 0, 0)));

  CHECK_THROWS_AS(derive_constraint(builtin("pkdv"), {1, 1}), MovableFactorError);
  CHECK_THROWS_AS(derive_constraint(builtin("pkdv"), {0, 2}), DeautoError);
}

TEST_CASE("the burgers discrepancy cell comes from the tables") {
  const LatticeRule& bu = builtin("burgers");
  InitialData init = default_initial_data(bu, {4, 4});
  auto diff = compare_tables(degree_table_exact(bu, init, CoefficientGrid::constant()),
                             degree_table_exact(bu, init, CoefficientGrid::generic_symbolic()));
  REQUIRE(diff.first_discrepancy);
  CHECK(diff.first_discrepancy->cell == CellIndex{2, 0});
}

TEST_CASE("derived constraints pick the matching generator") {
  CHECK(satisfying_generator(derive_constraint(builtin("pkdv"), {2, 2}), {4, 4}) == CoeffMode::Sum);
  CHECK(satisfying_generator(derive_constraint(builtin("mkdv"), {2, 2}), {4, 4}) == CoeffMode::Product);
  CHECK(satisfying_generator(derive_constraint(builtin("burgers"), {2, 0}), {4, 4}) == CoeffMode::RowOnly);
  auto j = to_json(derive_constraint(builtin("pkdv"), {2, 2}), true);
  CHECK(j["constraint"] == "z11 - z10 - z01 + z00");
  CHECK(j["cell"] == nlohmann::json::array({2, 2}));
  CHECK(j["movable_factor"] == "p1 - r1");
  CHECK(j["verified"] == true);
}

TEST_CASE("constraint sufficiency") {
  Region r{4, 4};
  CHECK(verify_constraint(builtin("pkdv"), CoefficientGrid::sum(1), r).pass);
  CHECK(verify_constraint(builtin("mkdv"), CoefficientGrid::product(1), r).pass);
  CHECK(verify_constraint(builtin("sine_gordon"), CoefficientGrid::product(1), r).pass);
  CHECK(verify_constraint(builtin("burgers"), CoefficientGrid::row_only(1), r).pass);
  CHECK(verify_constraint(builtin("liouville"), CoefficientGrid::product(1), r).pass);

  VerifyReport wrong = verify_constraint(builtin("sine_gordon"), CoefficientGrid::sum(1), r);
  CHECK_FALSE(wrong.pass);
  CHECK(wrong.constrained.size() == 3);
  CHECK(wrong.seeds == std::vector<std::uint64_t>{1, 2, 3});

  VerifyOptions fast;
  fast.backend = Backend::Specialized;
  CHECK(verify_constraint(builtin("pkdv"), CoefficientGrid::sum(1), r, fast).pass);
  CHECK_THROWS_AS(verify_constraint(builtin("pkdv"), CoefficientGrid::generic_random(1), r), DeautoError);
}

TEST_CASE("breaking one plaquette raises the first discrepancy cell") {
  const LatticeRule& pk = builtin("pkdv");
  InitialData init{InitScheme::Corner, {4, 4}};
  LatticePlan plan = make_plan(pk.stencil, init);
  auto grid = materialize(CoefficientGrid::sum(2), plan.coefficient_cells);
  CHECK(degree_table_exact(pk, init, CoefficientGrid::explicit_grid(grid)).at(2, 2) == 5);
  grid.at({0, 0}) += 1;  // z00 only enters the plaquette at the origin
  CHECK(degree_table_exact(pk, init, CoefficientGrid::explicit_grid(grid)).at(2, 2) == 6);
}

TEST_CASE("liouville gauge") {
  CHECK(check_gauge({3, 3}, 3));
  CHECK(check_gauge({4, 5}, 3, 40));
  GaugeSpec id = GaugeSpec::identity({3, 3});
  CHECK(id.relations_hold());
  CHECK(gauge_holds(id, {3, 3}, 7));

  GaugeSpec broken = GaugeSpec::random({3, 3}, 5);
  CHECK(broken.relations_hold());
  for (auto& [n, v] : broken.f) v = broken.alpha[n] * broken.alpha[n];
  CHECK_FALSE(broken.relations_hold());
  CHECK_FALSE(gauge_holds(broken, {3, 3}, 5));
}

TEST_CASE("burgers linearization") {
  CHECK(check_burgers_linearization(BurgersMode::Simple, {4, 6}, 3));
  CHECK(check_burgers_linearization(BurgersMode::Simple, {4, 6}, 3, 1, {true, std::nullopt}));
  CHECK(check_burgers_linearization(BurgersMode::General, {4, 6}, 3));
  BurgersOptions broken;
  broken.perturb_beta = CellIndex{1, 2};
  CHECK_FALSE(check_burgers_linearization(BurgersMode::General, {4, 6}, 3, 1, broken));
}

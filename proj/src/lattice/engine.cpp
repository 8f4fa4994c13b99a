#include "latdeg/lattice/engine.hpp"

#include <algorithm>

namespace latdeg {

ExactAlgebra::ExactAlgebra(std::shared_ptr<FactorPool> pool) : FactoredAlgebra(std::move(pool)) {
  inv_q_ = inverse(from_polynomial(Polynomial::variable(this->pool().ring(), Variable::q())));
}

Factored ExactAlgebra::datum(const Variable& v) {
  return mul(from_polynomial(Polynomial::variable(pool().ring(), v)), inv_q_);
}

Factored ExactAlgebra::coefficient(const Coefficient& z) {
  if (z.value) return constant(*z.value);
  return from_polynomial(Polynomial::variable(pool().ring(), z.symbol));
}

namespace {

RingPtr lattice_ring(const LatticePlan& plan, const ResolvedCoefficients& rc) {
  std::vector<Variable> vars = plan.data_variables;
  vars.insert(vars.end(), rc.symbols().begin(), rc.symbols().end());
  return make_ring(std::move(vars));
}

}  // namespace

LatticeState::LatticeState(LatticeRule rule, InitialData init, CoefficientGrid coeffs)
    : rule_(std::move(rule)),
      init_(init),
      coeffs_(std::move(coeffs)),
      plan_(make_plan(rule_.stencil, init_)),
      resolved_(resolve(coeffs_, plan_.coefficient_cells)),
      pool_(std::make_shared<FactorPool>(lattice_ring(plan_, resolved_))) {
  ExactAlgebra alg(pool_);
  cells_ = run_lattice(rule_, plan_, resolved_, alg);
  for (const auto& [c, v] : cells_) {
    if (v.is_zero()) continue;
    if (!alg.homogeneous(v) || alg.numerator_degree(v) != alg.denominator_degree(v))
      throw HomogeneityError("cell " + to_string(c) + " is not homogeneous of degree 0");
  }
}

std::vector<CellIndex> LatticeState::cells() const {
  std::vector<CellIndex> out;
  for (const auto& [c, v] : cells_) out.push_back(c);
  return out;
}

bool LatticeState::homogeneous(CellIndex c) const {
  FactoredAlgebra alg(pool_);
  const Factored& v = factored(c);
  return v.is_zero() || (alg.homogeneous(v) && alg.numerator_degree(v) == alg.denominator_degree(v));
}

bool LatticeState::is_initial(CellIndex c) const {
  return std::any_of(plan_.initial.begin(), plan_.initial.end(), [c](const auto& e) { return e.first == c; });
}

const Factored& LatticeState::factored(CellIndex c) const {
  auto it = cells_.find(c);
  if (it == cells_.end()) throw InitError("cell " + to_string(c) + " is outside the computed lattice");
  return it->second;
}

const RationalFunction& LatticeState::cell(CellIndex c) const {
  auto it = expanded_.find(c);
  if (it != expanded_.end()) return it->second;
  FactoredAlgebra alg(pool_);
  return expanded_.emplace(c, alg.to_rational(factored(c))).first->second;
}

long LatticeState::degree(CellIndex c) const {
  FactoredAlgebra alg(pool_);
  return alg.denominator_degree(factored(c));
}

mpq_class LatticeState::evaluate(CellIndex c, std::span<const mpq_class> point) const {
  FactoredAlgebra alg(pool_);
  return alg.evaluate(factored(c), point);
}

std::vector<Polynomial> LatticeState::denominator_factors(CellIndex c) const {
  std::vector<Polynomial> out;
  for (auto [id, e] : factored(c).powers)
    if (e < 0) out.push_back(pool_->poly(id));
  return out;
}

std::vector<Polynomial> LatticeState::numerator_factors(CellIndex c) const {
  std::vector<Polynomial> out;
  for (auto [id, e] : factored(c).powers)
    if (e > 0) out.push_back(pool_->poly(id));
  return out;
}

LatticeState iterate(const LatticeRule& rule, const InitialData& init, const CoefficientGrid& coeffs) {
  return LatticeState(rule, init, coeffs);
}

}  // namespace latdeg

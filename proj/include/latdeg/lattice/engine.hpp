#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "latdeg/lattice/coefficients.hpp"
#include "latdeg/lattice/factored.hpp"
#include "latdeg/lattice/initial_data.hpp"
#include "latdeg/lattice/rule.hpp"

namespace latdeg {

/// A genuinely zero denominator met while computing a cell.
class DegenerateDataError : public Error {
 public:
  explicit DegenerateDataError(CellIndex cell)
      : Error("zero denominator while computing cell " + to_string(cell) + "; the data is not generic"),
        cell_(cell) {}
  CellIndex cell() const { return cell_; }

 private:
  CellIndex cell_;
};

class HomogeneityError : public Error {
 public:
  using Error::Error;
};

/// Fills every planned cell in order. The algebra provides
/// datum(Variable) = v/q, coefficient(Coefficient), constant(mpz) and
/// add/sub/mul/div/neg; a ZeroDivisionError from it names the cell.
template <class Algebra>
auto run_lattice(const LatticeRule& rule, const LatticePlan& plan, const ResolvedCoefficients& coeffs,
                 Algebra& alg) {
  using Value = decltype(alg.constant(mpz_class(0)));
  std::map<CellIndex, Value> cells;
  for (const auto& [cell, var] : plan.initial) cells.emplace(cell, alg.datum(var));

  struct Env {
    Algebra& alg;
    const std::map<CellIndex, Value>& cells;
    const LatticePlan& plan;
    CellIndex source;
    const Coefficient& z;

    Value constant(const mpz_class& v) { return alg.constant(v); }
    Value cell(Placeholder p) { return cells.at(plan.placeholder_cell(source, p)); }
    Value coefficient() { return alg.coefficient(z); }
    Value add(const Value& a, const Value& b) { return alg.add(a, b); }
    Value sub(const Value& a, const Value& b) { return alg.sub(a, b); }
    Value mul(const Value& a, const Value& b) { return alg.mul(a, b); }
    Value div(const Value& a, const Value& b) { return alg.div(a, b); }
    Value neg(const Value& a) { return alg.neg(a); }
  };

  for (CellIndex target : plan.order) {
    CellIndex src = plan.source_of(target);
    Env env{alg, cells, plan, src, coeffs.at(src)};
    try {
      cells.emplace(target, evaluate(*rule.expr, env));
    } catch (const ZeroDivisionError&) {
      throw DegenerateDataError(target);
    }
  }
  return cells;
}

/// Exact arithmetic over the integer polynomial ring of the data and
/// coefficient symbols.
class ExactAlgebra : public FactoredAlgebra {
 public:
  explicit ExactAlgebra(std::shared_ptr<FactorPool> pool);
  Factored datum(const Variable& v);
  Factored coefficient(const Coefficient& z);

 private:
  Factored inv_q_;
};

/// Exact lattice of rational-function iterates.
class LatticeState {
 public:
  LatticeState(LatticeRule rule, InitialData init, CoefficientGrid coeffs);

  const LatticeRule& rule() const { return rule_; }
  const InitialData& init() const { return init_; }
  const CoefficientGrid& coeffs() const { return coeffs_; }
  const LatticePlan& plan() const { return plan_; }
  const ResolvedCoefficients& resolved() const { return resolved_; }
  const RingPtr& ring() const { return pool_->ring(); }

  bool contains(CellIndex c) const { return cells_.count(c) != 0; }
  /// Every cell held by the state, initial ones included, in index order.
  std::vector<CellIndex> cells() const;
  /// Numerator and denominator homogeneous of one common weighted degree.
  bool homogeneous(CellIndex c) const;
  bool is_initial(CellIndex c) const;
  const Factored& factored(CellIndex c) const;
  /// Canonical coprime form, expanded on first request.
  const RationalFunction& cell(CellIndex c) const;
  /// Weighted degree of the canonical numerator and denominator.
  long degree(CellIndex c) const;
  /// Value of a cell at a point given per ring variable.
  mpq_class evaluate(CellIndex c, std::span<const mpq_class> point) const;
  /// Distinct factors of the canonical denominator.
  std::vector<Polynomial> denominator_factors(CellIndex c) const;
  std::vector<Polynomial> numerator_factors(CellIndex c) const;

 private:
  LatticeRule rule_;
  InitialData init_;
  CoefficientGrid coeffs_;
  LatticePlan plan_;
  ResolvedCoefficients resolved_;
  std::shared_ptr<FactorPool> pool_;
  std::map<CellIndex, Factored> cells_;
  mutable std::map<CellIndex, RationalFunction> expanded_;
};

/// Iterates the rule over init.extent. Throws DegenerateDataError for a zero
/// denominator and HomogeneityError if a cell loses homogeneity.
LatticeState iterate(const LatticeRule& rule, const InitialData& init, const CoefficientGrid& coeffs);

}  // namespace latdeg

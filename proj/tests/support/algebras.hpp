#pragma once

#include <map>

#include "latdeg/lattice/engine.hpp"
#include "latdeg/symcore/rational_function.hpp"

namespace latdeg::testing {

/// Reference iteration with fully gcd-reduced rational functions.
struct RationalAlgebra {
  RingPtr ring;

  RationalFunction constant(const mpz_class& c) const { return RationalFunction(Polynomial::constant(ring, c)); }
  RationalFunction datum(const Variable& v) const {
    return RationalFunction(Polynomial::variable(ring, v), Polynomial::variable(ring, Variable::q()));
  }
  RationalFunction coefficient(const Coefficient& z) const {
    if (z.value) return constant(*z.value);
    return RationalFunction(Polynomial::variable(ring, z.symbol));
  }
  RationalFunction add(const RationalFunction& a, const RationalFunction& b) const { return a + b; }
  RationalFunction sub(const RationalFunction& a, const RationalFunction& b) const { return a - b; }
  RationalFunction mul(const RationalFunction& a, const RationalFunction& b) const { return a * b; }
  RationalFunction div(const RationalFunction& a, const RationalFunction& b) const { return a / b; }
  RationalFunction neg(const RationalFunction& a) const { return -a; }
};

/// Iteration over exact rationals at one point of the variable space.
struct NumericAlgebra {
  std::map<Variable, mpq_class> values;

  mpq_class constant(const mpz_class& c) const { return mpq_class(c); }
  mpq_class datum(const Variable& v) const { return div(values.at(v), values.at(Variable::q())); }
  mpq_class coefficient(const Coefficient& z) const { return z.value ? mpq_class(*z.value) : values.at(z.symbol); }
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return a + b; }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  mpq_class div(const mpq_class& a, const mpq_class& b) const {
    if (b == 0) throw ZeroDivisionError();
    return a / b;
  }
  mpq_class neg(const mpq_class& a) const { return -a; }
};

inline InitialData default_init(const LatticeRule& rule, int rows, int cols) {
  return {rule.stencil == Stencil::Tri ? InitScheme::Line : InitScheme::Corner, {rows, cols}};
}

}  // namespace latdeg::testing

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "latdeg/lattice/coefficients.hpp"
#include "latdeg/symcore/modular.hpp"

namespace latdeg {

/// Element of F_p(t): num/den with den monic and gcd(num, den) = 1.
struct UniRational {
  modp::UPoly num;
  modp::UPoly den{1};

  bool is_zero() const { return num.empty(); }
  /// max(deg num, deg den); the zero element has degree 0.
  long degree() const;
};

/// Arithmetic along a random line: every data variable becomes an affine
/// polynomial in t and every coefficient symbol a random residue.
class UniAlgebra {
 public:
  UniAlgebra(std::map<Variable, modp::UPoly> data, std::map<Variable, std::uint64_t> symbols);

  /// Draws distinct coefficients in [1, 2^31) for a + b t per data variable
  /// and residues for the symbols.
  static UniAlgebra random(const std::vector<Variable>& data_vars, const std::vector<Variable>& symbols,
                           std::mt19937_64& gen);

  UniRational datum(const Variable& v) const;
  UniRational coefficient(const Coefficient& z) const;
  UniRational constant(const mpz_class& c) const;
  UniRational add(const UniRational& a, const UniRational& b) const;
  UniRational sub(const UniRational& a, const UniRational& b) const { return add(a, neg(b)); }
  UniRational mul(const UniRational& a, const UniRational& b) const;
  UniRational div(const UniRational& a, const UniRational& b) const;
  UniRational neg(const UniRational& a) const;

 private:
  std::map<Variable, modp::UPoly> data_;
  std::map<Variable, std::uint64_t> symbols_;
  UniRational inv_q_;
};

}  // namespace latdeg

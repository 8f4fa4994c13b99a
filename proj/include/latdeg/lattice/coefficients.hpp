#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latdeg/lattice/initial_data.hpp"

namespace latdeg {

enum class CoeffMode { Constant, GenericSymbolic, GenericRandom, Sum, Product, RowOnly, Explicit };

std::string_view coeff_mode_name(CoeffMode m);
CoeffMode parse_coeff_mode(std::string_view s);

/// How z^m_n is chosen at every source corner.
///
/// Constant without a value means one symbol z (stored as z00) shared by all
/// cells. Sum, Product and RowOnly build z = f(n) + g(m), f(n) g(m) and g(m)
/// from integer sequences; entries not given explicitly are drawn from
/// [2, 97] with the seed.
struct CoefficientGrid {
  CoeffMode mode = CoeffMode::Constant;
  std::optional<mpz_class> value;
  std::uint64_t seed = 0;
  std::map<int, mpz_class> f;  // indexed by n
  std::map<int, mpz_class> g;  // indexed by m
  std::map<CellIndex, mpz_class> grid;

  static CoefficientGrid constant(std::optional<mpz_class> v = std::nullopt);
  static CoefficientGrid generic_symbolic();
  static CoefficientGrid generic_random(std::uint64_t seed);
  static CoefficientGrid sum(std::uint64_t seed);
  static CoefficientGrid product(std::uint64_t seed);
  static CoefficientGrid row_only(std::uint64_t seed);
  static CoefficientGrid explicit_grid(std::map<CellIndex, mpz_class> values);

  std::string describe() const;
};

/// One resolved coefficient: an integer or a weight-0 symbol.
struct Coefficient {
  std::optional<mpz_class> value;
  Variable symbol;
};

class ResolvedCoefficients {
 public:
  const Coefficient& at(CellIndex c) const;
  const std::map<CellIndex, Coefficient>& cells() const { return cells_; }
  /// Sorted symbols used by the grid (empty for purely numeric grids).
  const std::vector<Variable>& symbols() const { return symbols_; }

 private:
  friend ResolvedCoefficients resolve(const CoefficientGrid&, const std::vector<CellIndex>&);
  std::map<CellIndex, Coefficient> cells_;
  std::vector<Variable> symbols_;
};

ResolvedCoefficients resolve(const CoefficientGrid& grid, const std::vector<CellIndex>& cells);

/// The integer grid a numeric mode produces on `cells`, e.g. to perturb it
/// and feed it back as an explicit grid. Throws for symbolic modes.
std::map<CellIndex, mpz_class> materialize(const CoefficientGrid& grid, const std::vector<CellIndex>& cells);

}  // namespace latdeg

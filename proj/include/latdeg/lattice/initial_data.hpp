#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latdeg/lattice/rule.hpp"
#include "latdeg/symcore/variable.hpp"

namespace latdeg {

enum class InitScheme { Corner, Staircase, Line };

std::string_view scheme_name(InitScheme s);
InitScheme parse_scheme(std::string_view s);

/// Rows m in [0, rows), columns n in [0, cols).
struct Region {
  int rows = 0;
  int cols = 0;
  friend bool operator==(const Region&, const Region&) = default;
};

struct InitialData {
  InitScheme scheme = InitScheme::Corner;
  Region extent;
};

struct CellIndex {
  int m = 0;
  int n = 0;
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

std::string to_string(CellIndex c);

class InitError : public Error {
 public:
  using Error::Error;
};

/// Everything the engine needs to know about which cells exist, which carry
/// raw data and in which order the rest are computed.
///
/// Corner: x^0_n = p_n/q, x^m_0 = r_m/q (r_0 = p_0). Line: x^0_n = p_n/q on a
/// row long enough for the dependency cone. Staircase: x^{-n}_n = p_{n+s}/q
/// and x^{1-n}_n = r_{n+s}/q where the shift s = rows-1 keeps indices >= 0.
struct LatticePlan {
  Stencil stencil = Stencil::Quad;
  InitialData init;
  std::vector<std::pair<CellIndex, Variable>> initial;
  std::vector<CellIndex> order;               // computed cells, sources first
  std::vector<CellIndex> coefficient_cells;   // sorted source corners that read z
  std::vector<Variable> data_variables;       // p, r and q, sorted

  /// Source corner (m, n) of the stencil producing `target`.
  CellIndex source_of(CellIndex target) const;
  CellIndex placeholder_cell(CellIndex source, Placeholder p) const;
  bool in_region(CellIndex c) const {
    return c.m >= 0 && c.n >= 0 && c.m < init.extent.rows && c.n < init.extent.cols;
  }
};

LatticePlan make_plan(Stencil stencil, const InitialData& init);

}  // namespace latdeg

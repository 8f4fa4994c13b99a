#include "latdeg/lattice/initial_data.hpp"

#include <algorithm>

namespace latdeg {

std::string_view scheme_name(InitScheme s) {
  switch (s) {
    case InitScheme::Corner:
      return "corner";
    case InitScheme::Staircase:
      return "staircase";
    case InitScheme::Line:
      return "line";
  }
  return "?";
}

InitScheme parse_scheme(std::string_view s) {
  if (s == "corner") return InitScheme::Corner;
  if (s == "staircase") return InitScheme::Staircase;
  if (s == "line") return InitScheme::Line;
  throw InitError("unknown initial-data scheme '" + std::string(s) + "'");
}

std::string to_string(CellIndex c) { return "(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")"; }

CellIndex LatticePlan::source_of(CellIndex t) const {
  return stencil == Stencil::Quad ? CellIndex{t.m - 1, t.n - 1} : CellIndex{t.m - 1, t.n};
}

CellIndex LatticePlan::placeholder_cell(CellIndex s, Placeholder p) const {
  switch (p) {
    case Placeholder::X00:
      return s;
    case Placeholder::X10:
      return {s.m + 1, s.n};
    case Placeholder::X01:
      return {s.m, s.n + 1};
  }
  return s;
}

LatticePlan make_plan(Stencil stencil, const InitialData& init) {
  const int M = init.extent.rows, N = init.extent.cols;
  if (M < 1 || N < 1) throw InitError("region must have at least one row and one column");
  LatticePlan plan;
  plan.stencil = stencil;
  plan.init = init;

  switch (init.scheme) {
    case InitScheme::Corner:
      if (stencil != Stencil::Quad)
        throw InitError("corner data does not determine a tri-stencil lattice; use line data");
      for (int n = 0; n < N; ++n) plan.initial.push_back({{0, n}, Variable::p(n)});
      for (int m = 1; m < M; ++m) plan.initial.push_back({{m, 0}, Variable::r(m)});
      for (int m = 1; m < M; ++m)
        for (int n = 1; n < N; ++n) plan.order.push_back({m, n});
      break;

    case InitScheme::Line: {
      if (stencil != Stencil::Tri)
        throw InitError("line data leaves a quad-stencil lattice unreachable beyond row 0");
      // Cell (m, n) depends on x^0_n .. x^0_{n+m}.
      const int len = N + M - 1;
      for (int n = 0; n < len; ++n) plan.initial.push_back({{0, n}, Variable::p(n)});
      for (int m = 1; m < M; ++m)
        for (int n = 0; n < len - m; ++n) plan.order.push_back({m, n});
      break;
    }

    case InitScheme::Staircase: {
      if (stencil != Stencil::Quad) throw InitError("staircase data is only defined for quad stencils");
      const int s = M - 1;
      // Anti-diagonal 0: (-n, n); anti-diagonal 1: (1-n, n). Both clipped to
      // the cone of cells that can influence the output box.
      for (int n = -(M - 1); n <= N - 1; ++n) plan.initial.push_back({{-n, n}, Variable::p(n + s)});
      for (int n = 2 - M; n <= N - 1; ++n) plan.initial.push_back({{1 - n, n}, Variable::r(n + s)});
      for (int d = 2; d <= M + N - 2; ++d)
        for (int m = d - (N - 1); m <= M - 1; ++m) plan.order.push_back({m, d - m});
      break;
    }
  }

  for (const auto& [cell, var] : plan.initial) plan.data_variables.push_back(var);
  plan.data_variables.push_back(Variable::q());
  std::sort(plan.data_variables.begin(), plan.data_variables.end());
  plan.data_variables.erase(std::unique(plan.data_variables.begin(), plan.data_variables.end()),
                            plan.data_variables.end());

  for (CellIndex t : plan.order) plan.coefficient_cells.push_back(plan.source_of(t));
  std::sort(plan.coefficient_cells.begin(), plan.coefficient_cells.end());
  plan.coefficient_cells.erase(std::unique(plan.coefficient_cells.begin(), plan.coefficient_cells.end()),
                               plan.coefficient_cells.end());
  return plan;
}

}  // namespace latdeg

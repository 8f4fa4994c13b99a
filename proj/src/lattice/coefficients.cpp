#include "latdeg/lattice/coefficients.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace latdeg {

std::string_view coeff_mode_name(CoeffMode m) {
  switch (m) {
    case CoeffMode::Constant:
      return "constant";
    case CoeffMode::GenericSymbolic:
      return "generic-symbolic";
    case CoeffMode::GenericRandom:
      return "generic-random";
    case CoeffMode::Sum:
      return "sum";
    case CoeffMode::Product:
      return "product";
    case CoeffMode::RowOnly:
      return "row-only";
    case CoeffMode::Explicit:
      return "explicit";
  }
  return "?";
}

CoeffMode parse_coeff_mode(std::string_view s) {
  for (CoeffMode m : {CoeffMode::Constant, CoeffMode::GenericSymbolic, CoeffMode::GenericRandom, CoeffMode::Sum,
                      CoeffMode::Product, CoeffMode::RowOnly, CoeffMode::Explicit})
    if (coeff_mode_name(m) == s) return m;
  throw InitError("unknown coefficient mode '" + std::string(s) + "'");
}

CoefficientGrid CoefficientGrid::constant(std::optional<mpz_class> v) {
  CoefficientGrid g;
  g.mode = CoeffMode::Constant;
  g.value = std::move(v);
  return g;
}

CoefficientGrid CoefficientGrid::generic_symbolic() {
  CoefficientGrid g;
  g.mode = CoeffMode::GenericSymbolic;
  return g;
}

namespace {
CoefficientGrid seeded(CoeffMode m, std::uint64_t seed) {
  CoefficientGrid g;
  g.mode = m;
  g.seed = seed;
  return g;
}
}  // namespace

CoefficientGrid CoefficientGrid::generic_random(std::uint64_t seed) { return seeded(CoeffMode::GenericRandom, seed); }
CoefficientGrid CoefficientGrid::sum(std::uint64_t seed) { return seeded(CoeffMode::Sum, seed); }
CoefficientGrid CoefficientGrid::product(std::uint64_t seed) { return seeded(CoeffMode::Product, seed); }
CoefficientGrid CoefficientGrid::row_only(std::uint64_t seed) { return seeded(CoeffMode::RowOnly, seed); }

CoefficientGrid CoefficientGrid::explicit_grid(std::map<CellIndex, mpz_class> values) {
  CoefficientGrid g;
  g.mode = CoeffMode::Explicit;
  g.grid = std::move(values);
  return g;
}

std::string CoefficientGrid::describe() const {
  std::string s(coeff_mode_name(mode));
  if (mode == CoeffMode::Constant) s += value ? "(z=" + value->get_str() + ")" : "(symbolic z)";
  if (mode == CoeffMode::GenericRandom || mode == CoeffMode::Sum || mode == CoeffMode::Product ||
      mode == CoeffMode::RowOnly)
    s += "(seed=" + std::to_string(seed) + ")";
  return s;
}

const Coefficient& ResolvedCoefficients::at(CellIndex c) const {
  auto it = cells_.find(c);
  if (it == cells_.end()) throw InitError("no coefficient resolved for cell " + to_string(c));
  return it->second;
}

namespace {

// Draws one value in [2, 97] per index in [lo, hi], in increasing index
// order, then applies the explicitly given entries.
std::map<int, mpz_class> sequence(std::mt19937_64& gen, int lo, int hi, const std::map<int, mpz_class>& given) {
  std::uniform_int_distribution<int> d(2, 97);
  std::map<int, mpz_class> out;
  for (int i = lo; i <= hi; ++i) out[i] = d(gen);
  for (const auto& [i, v] : given) out[i] = v;
  return out;
}

}  // namespace

std::map<CellIndex, mpz_class> materialize(const CoefficientGrid& grid, const std::vector<CellIndex>& cells) {
  std::map<CellIndex, mpz_class> out;
  if (cells.empty()) return out;
  int mlo = cells.front().m, mhi = mlo, nlo = cells.front().n, nhi = nlo;
  for (CellIndex c : cells) {
    mlo = std::min(mlo, c.m), mhi = std::max(mhi, c.m);
    nlo = std::min(nlo, c.n), nhi = std::max(nhi, c.n);
  }
  std::mt19937_64 gen(grid.seed);
  switch (grid.mode) {
    case CoeffMode::Constant:
      if (!grid.value) throw InitError("symbolic constant coefficient has no integer values");
      for (CellIndex c : cells) out[c] = *grid.value;
      break;
    case CoeffMode::GenericSymbolic:
      throw InitError("generic-symbolic coefficients have no integer values");
    case CoeffMode::GenericRandom: {
      std::uniform_int_distribution<std::uint64_t> d(2, (std::uint64_t{1} << 31) - 1);
      std::set<std::uint64_t> used;
      std::vector<CellIndex> sorted = cells;
      std::sort(sorted.begin(), sorted.end());
      for (CellIndex c : sorted) {
        std::uint64_t v;
        do v = d(gen);
        while (!used.insert(v).second);
        out[c] = mpz_class(std::to_string(v));
      }
      break;
    }
    case CoeffMode::Sum:
    case CoeffMode::Product: {
      auto f = sequence(gen, nlo, nhi, grid.f);
      auto g = sequence(gen, mlo, mhi, grid.g);
      for (CellIndex c : cells)
        out[c] = grid.mode == CoeffMode::Sum ? mpz_class(f[c.n] + g[c.m]) : mpz_class(f[c.n] * g[c.m]);
      break;
    }
    case CoeffMode::RowOnly: {
      auto g = sequence(gen, mlo, mhi, grid.g);
      for (CellIndex c : cells) out[c] = g[c.m];
      break;
    }
    case CoeffMode::Explicit:
      for (CellIndex c : cells) {
        auto it = grid.grid.find(c);
        if (it == grid.grid.end()) throw InitError("explicit coefficient grid has no value at " + to_string(c));
        out[c] = it->second;
      }
      break;
  }
  return out;
}

ResolvedCoefficients resolve(const CoefficientGrid& grid, const std::vector<CellIndex>& cells) {
  ResolvedCoefficients r;
  if (grid.mode == CoeffMode::GenericSymbolic || (grid.mode == CoeffMode::Constant && !grid.value)) {
    for (CellIndex c : cells) {
      Variable v = grid.mode == CoeffMode::Constant ? Variable::z(0, 0) : Variable::z(c.m, c.n);
      r.cells_[c] = Coefficient{std::nullopt, v};
      r.symbols_.push_back(v);
    }
    std::sort(r.symbols_.begin(), r.symbols_.end());
    r.symbols_.erase(std::unique(r.symbols_.begin(), r.symbols_.end()), r.symbols_.end());
    return r;
  }
  for (auto& [c, v] : materialize(grid, cells)) r.cells_[c] = Coefficient{v, Variable::z(c.m, c.n)};
  return r;
}

}  // namespace latdeg

#include "latdeg/deauto/deauto.hpp"

#include <algorithm>
#include <random>

#include "latdeg/symcore/gcd.hpp"

namespace latdeg {

InitialData default_initial_data(const LatticeRule& rule, Region region) {
  return {rule.stencil == Stencil::Tri ? InitScheme::Line : InitScheme::Corner, region};
}

namespace {

DegreeTable table_for(const LatticeRule& rule, const InitialData& init, const CoefficientGrid& grid,
                      const VerifyOptions& opt) {
  if (opt.backend == Backend::Exact) return degree_table_exact(rule, init, grid);
  return degree_table_specialized(rule, init, grid, opt.specialized);
}

bool is_data(const Variable& v) { return v.kind == VarKind::P || v.kind == VarKind::R || v.kind == VarKind::Q; }

bool involves_data(const Polynomial& p) {
  for (std::size_t i : p.variables_used())
    if (is_data(p.ring()->var(i))) return true;
  return false;
}

// Same polynomial over another ring; z^m_n becomes `z` when given.
Polynomial into_ring(const Polynomial& p, const RingPtr& target, std::optional<Variable> z = std::nullopt) {
  const Ring& src = *p.ring();
  std::vector<std::size_t> where(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    Variable v = src.var(i);
    if (z && v.kind == VarKind::Z) v = *z;
    where[i] = target->index_or_throw(v);
  }
  std::vector<std::pair<std::vector<int>, mpz_class>> terms;
  for (std::size_t t = 0; t < p.size(); ++t) {
    std::vector<int> e(target->size(), 0);
    std::vector<int> src_e = p.exponents(t);
    for (std::size_t i = 0; i < src_e.size(); ++i) e[where[i]] += src_e[i];
    terms.emplace_back(std::move(e), p.coeff(t));
  }
  return Polynomial::from_terms(target, terms);
}

Polynomial monomial_of(const RingPtr& ring, const std::vector<int>& e) { return Polynomial::from_terms(ring, {{e, 1}}); }

// Numeric iteration where every initial cell carries a given value.
struct ValueAlgebra {
  std::map<Variable, mpq_class> data;

  mpq_class constant(const mpz_class& c) const { return mpq_class(c); }
  mpq_class datum(const Variable& v) const { return data.at(v); }
  mpq_class coefficient(const Coefficient& z) const {
    if (!z.value) throw DeautoError("numeric iteration needs numeric coefficients");
    return mpq_class(*z.value);
  }
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return a + b; }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  mpq_class div(const mpq_class& a, const mpq_class& b) const {
    if (b == 0) throw ZeroDivisionError();
    return a / b;
  }
  mpq_class neg(const mpq_class& a) const { return -a; }
};

std::map<CellIndex, mpq_class> iterate_values(const LatticeRule& rule, const LatticePlan& plan,
                                              const std::map<CellIndex, mpq_class>& initial,
                                              std::map<CellIndex, mpz_class> z) {
  ValueAlgebra alg;
  for (const auto& [cell, var] : plan.initial) alg.data[var] = initial.at(cell);
  ResolvedCoefficients rc = resolve(CoefficientGrid::explicit_grid(std::move(z)), plan.coefficient_cells);
  return run_lattice(rule, plan, rc, alg);
}

// Value of a z-polynomial with every z^a_b read at (a + dm, b + dn).
std::optional<mpz_class> evaluate_shifted(const Polynomial& p, const std::map<CellIndex, mpz_class>& z, int dm,
                                          int dn) {
  mpz_class sum = 0;
  for (std::size_t t = 0; t < p.size(); ++t) {
    mpz_class term = p.coeff(t);
    std::vector<int> e = p.exponents(t);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      const Variable& v = p.ring()->var(i);
      auto it = z.find({v.index + dm, v.index2 + dn});
      if (it == z.end()) return std::nullopt;
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), it->second.get_mpz_t(), e[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

}  // namespace

VerifyReport verify_constraint(const LatticeRule& rule, const CoefficientGrid& constrained, Region region,
                               const VerifyOptions& opt) {
  switch (constrained.mode) {
    case CoeffMode::Sum:
    case CoeffMode::Product:
    case CoeffMode::RowOnly:
    case CoeffMode::Explicit:
      break;
    default:
      throw DeautoError("verification needs a sum, product, row-only or explicit coefficient grid, not " +
                        std::string(coeff_mode_name(constrained.mode)));
  }
  if (opt.seeds < 1) throw DeautoError("verification needs at least one seed");
  InitialData init = default_initial_data(rule, region);
  VerifyReport report;
  report.autonomous = table_for(rule, init, CoefficientGrid::constant(), opt);
  for (int i = 0; i < opt.seeds; ++i) {
    CoefficientGrid grid = constrained;
    if (grid.mode != CoeffMode::Explicit) grid.seed = opt.base_seed + i;
    report.seeds.push_back(grid.seed);
    report.constrained.push_back(table_for(rule, init, grid, opt));
    report.comparisons.push_back(compare_tables(report.autonomous, report.constrained.back()));
    report.pass = report.pass && report.comparisons.back().equal;
  }
  return report;
}

ConstraintPolynomial derive_constraint(const LatticeRule& rule, CellIndex cell) {
  if (cell.m < 1 || cell.n < 0) throw DeautoError("no constraint can arise at " + to_string(cell));
  InitialData init = default_initial_data(rule, {cell.m + 1, cell.n + 1});
  LatticeState generic(rule, init, CoefficientGrid::generic_symbolic());
  if (!generic.contains(cell) || generic.is_initial(cell))
    throw DeautoError("cell " + to_string(cell) + " is not computed from the initial data");
  LatticeState autonomous(rule, init, CoefficientGrid::constant());
  const RingPtr& ring = generic.ring();
  const Polynomial q = Polynomial::variable(ring, Variable::q());

  std::vector<Polynomial> earlier;
  for (CellIndex c : generic.plan().order) {
    if (c == cell) break;
    // Poles and zeros both: a zero of an earlier cell is a pole of any cell
    // that divides by it.
    for (Polynomial& f : generic.denominator_factors(c)) earlier.push_back(std::move(f));
    for (Polynomial& f : generic.numerator_factors(c)) earlier.push_back(std::move(f));
  }
  const Polynomial& autonomous_den = autonomous.cell(cell).den();
  std::vector<Polynomial> candidates;
  for (const Polynomial& f : generic.denominator_factors(cell)) {
    if (f == q || !involves_data(f)) continue;
    if (std::find(earlier.begin(), earlier.end(), f) == earlier.end()) continue;
    if (autonomous_den.divide_exact(into_ring(f, autonomous.ring(), Variable::z(0, 0)))) continue;
    candidates.push_back(f);
  }
  if (candidates.empty())
    throw MovableFactorError("no movable factor loses its cancellation at " + to_string(cell), {});
  if (candidates.size() > 1) {
    std::string list;
    for (const auto& c : candidates) list += (list.empty() ? "" : ", ") + c.to_string();
    throw MovableFactorError("several movable factors at " + to_string(cell) + ": " + list, candidates);
  }
  const Polynomial& factor = candidates.front();

  // Eliminate the last p/r variable of the factor, which must occur linearly.
  std::optional<std::size_t> var;
  for (std::size_t i : factor.variables_used()) {
    VarKind k = ring->var(i).kind;
    if ((k == VarKind::P || k == VarKind::R) && factor.degree_in(i) == 1) var = i;
  }
  if (!var) throw DeautoError("movable factor " + factor.to_string() + " is not linear in any p or r variable");
  std::vector<Polynomial> fc = factor.coefficients_in(*var);
  const Polynomial& c = fc[1];
  const Polynomial minus_d = -fc[0];
  std::vector<Polynomial> nk = generic.cell(cell).num().coefficients_in(*var);
  const unsigned D = unsigned(nk.size()) - 1;
  Polynomial residue(ring);
  for (unsigned k = 0; k <= D; ++k)
    if (!nk[k].is_zero()) residue += nk[k] * minus_d.pow(k) * c.pow(D - k);
  if (residue.is_zero())
    throw DeautoError("movable factor " + factor.to_string() + " cancels for every coefficient grid");

  // Coefficients of the residue with respect to the data monomials.
  std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, mpz_class>>> groups;
  for (std::size_t t = 0; t < residue.size(); ++t) {
    std::vector<int> e = residue.exponents(t), key = e, zpart = e;
    for (std::size_t i = 0; i < e.size(); ++i) (ring->var(i).kind == VarKind::Z ? key : zpart)[i] = 0;
    groups[key].emplace_back(std::move(zpart), residue.coeff(t));
  }
  std::vector<Polynomial> coefficients;
  for (const auto& [key, terms] : groups) coefficients.push_back(Polynomial::from_terms(ring, terms));
  Polynomial g = gcd(std::span<const Polynomial>(coefficients));
  g = g.divide_exact(monomial_of(ring, g.monomial_gcd())).value();
  // A factor in a single z only pins that coefficient to a constant (often a
  // value where the equation degenerates), it does not relate grid values.
  for (std::size_t v : g.variables_used()) {
    std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, mpz_class>>> by_rest;
    for (std::size_t t = 0; t < g.size(); ++t) {
      std::vector<int> e = g.exponents(t), rest = e, own(e.size(), 0);
      rest[v] = 0;
      own[v] = e[v];
      by_rest[rest].emplace_back(std::move(own), g.coeff(t));
    }
    std::vector<Polynomial> parts;
    for (const auto& [rest, terms] : by_rest) parts.push_back(Polynomial::from_terms(ring, terms));
    Polynomial u = gcd(std::span<const Polynomial>(parts));
    if (!u.is_constant()) g = g.divide_exact(u).value();
  }
  g = g.canonical();
  if (g.is_constant())
    throw NonPrincipalConstraintError("the coefficients at " + to_string(cell) + " share no common factor",
                                      coefficients);
  return {g, cell, factor};
}

bool same_constraint(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.canonical() == b.canonical();
}

std::optional<CoeffMode> satisfying_generator(const ConstraintPolynomial& c, Region region, std::uint64_t seed) {
  std::vector<CellIndex> cells;
  for (int m = 0; m < region.rows; ++m)
    for (int n = 0; n < region.cols; ++n) cells.push_back({m, n});
  for (CoeffMode mode : {CoeffMode::Sum, CoeffMode::Product, CoeffMode::RowOnly}) {
    CoefficientGrid grid;
    grid.mode = mode;
    grid.seed = seed;
    std::map<CellIndex, mpz_class> z = materialize(grid, cells);
    bool ok = true;
    for (int dm = -region.rows; dm <= region.rows && ok; ++dm)
      for (int dn = -region.cols; dn <= region.cols && ok; ++dn) {
        auto v = evaluate_shifted(c.poly, z, dm, dn);
        if (v && *v != 0) ok = false;
      }
    if (ok) return mode;
  }
  return std::nullopt;
}

nlohmann::json to_json(const ConstraintPolynomial& c, std::optional<bool> verified) {
  nlohmann::json j{{"constraint", c.poly.to_string()},
                   {"cell", {c.cell.m, c.cell.n}},
                   {"movable_factor", c.movable_factor.to_string()}};
  j["verified"] = verified ? nlohmann::json(*verified) : nlohmann::json(nullptr);
  return j;
}

GaugeSpec GaugeSpec::random(Region region, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> d(2, 97);
  GaugeSpec s;
  for (int n = 0; n <= region.cols; ++n) s.alpha[n] = d(gen);
  for (int m = 0; m <= region.rows; ++m) s.beta[m] = d(gen);
  for (int n = 0; n < region.cols; ++n) s.f[n] = s.alpha[n] * s.alpha[n + 1];
  for (int m = 0; m < region.rows; ++m) s.g[m] = s.beta[m] * s.beta[m + 1];
  return s;
}

GaugeSpec GaugeSpec::identity(Region region) {
  GaugeSpec s;
  for (int n = 0; n <= region.cols; ++n) s.alpha[n] = 1;
  for (int m = 0; m <= region.rows; ++m) s.beta[m] = 1;
  for (int n = 0; n < region.cols; ++n) s.f[n] = 1;
  for (int m = 0; m < region.rows; ++m) s.g[m] = 1;
  return s;
}

bool GaugeSpec::relations_hold() const {
  for (const auto& [n, v] : f)
    if (!alpha.count(n) || !alpha.count(n + 1) || v != alpha.at(n) * alpha.at(n + 1)) return false;
  for (const auto& [m, v] : g)
    if (!beta.count(m) || !beta.count(m + 1) || v != beta.at(m) * beta.at(m + 1)) return false;
  return true;
}

bool gauge_holds(const GaugeSpec& spec, Region region, std::uint64_t seed) {
  const LatticeRule& rule = builtin("liouville");
  LatticePlan plan = make_plan(rule.stencil, {InitScheme::Corner, region});
  auto phi = [&](CellIndex c) { return mpq_class(spec.alpha.at(c.n) * spec.beta.at(c.m)); };

  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> d(1, 1000);
  std::map<CellIndex, mpq_class> X0, x0;
  for (const auto& [cell, var] : plan.initial) {
    X0[cell] = d(gen);
    x0[cell] = phi(cell) * X0[cell];
  }
  std::map<CellIndex, mpz_class> ones, fg;
  for (CellIndex c : plan.coefficient_cells) {
    ones[c] = 1;
    fg[c] = spec.f.at(c.n) * spec.g.at(c.m);
  }
  auto X = iterate_values(rule, plan, X0, ones);
  auto x = iterate_values(rule, plan, x0, fg);
  for (const auto& [c, v] : X)
    if (x.at(c) != phi(c) * v) return false;
  return true;
}

bool check_gauge(Region region, int seeds, std::uint64_t base_seed) {
  for (int i = 0; i < seeds; ++i) {
    std::uint64_t seed = base_seed + i;
    if (!gauge_holds(GaugeSpec::random(region, seed), region, seed)) return false;
  }
  return true;
}

bool burgers_linearization_holds(BurgersMode mode, Region region, std::uint64_t seed, const BurgersOptions& opt) {
  const int M = region.rows, N = region.cols, W = M + N;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> d(2, 97);
  using Grid = std::vector<std::vector<mpq_class>>;
  Grid phi(M + 1, std::vector<mpq_class>(W + 1, 1)), psi = phi, gamma = phi;
  std::vector<mpq_class> f(M + 1, 1), g(M + 1);
  for (int m = 0; m <= M; ++m) {
    if (!opt.unit_f) f[m] = d(gen);
    g[m] = d(gen);
  }
  for (int m = 0; m <= M; ++m)
    for (int n = 0; n <= W; ++n) {
      if (mode == BurgersMode::Simple) {
        psi[m][n] = f[m];
        gamma[m][n] = g[m];
      } else {
        phi[m][n] = d(gen);
        psi[m][n] = d(gen);
        gamma[m][n] = d(gen);
      }
    }

  // X^{m+1}_n = psi (X^m_n + gamma phi X^m_{n+1}); row m has W - m entries.
  Grid X(M + 1);
  for (int n = 0; n < W; ++n) X[0].push_back(std::uniform_int_distribution<int>(1, 1000)(gen));
  for (int m = 0; m < M; ++m)
    for (int n = 0; n + 1 < int(X[m].size()); ++n)
      X[m + 1].push_back(psi[m][n] * (X[m][n] + gamma[m][n] * phi[m][n] * X[m][n + 1]));
  Grid x(M + 1);
  for (int m = 0; m <= M; ++m)
    for (int n = 0; n + 1 < int(X[m].size()); ++n) x[m].push_back(phi[m][n] * X[m][n + 1] / X[m][n]);

  if (mode == BurgersMode::Simple) {
    const LatticeRule& rule = builtin("burgers");
    LatticePlan plan = make_plan(rule.stencil, {InitScheme::Line, region});
    std::map<CellIndex, mpq_class> init;
    for (const auto& [cell, var] : plan.initial) init[cell] = x[cell.m][cell.n];
    std::map<CellIndex, mpz_class> z;
    for (CellIndex c : plan.coefficient_cells) z[c] = g[c.m].get_num();
    for (const auto& [c, v] : iterate_values(rule, plan, init, z))
      if (v != x[c.m][c.n]) return false;
    return true;
  }

  for (int m = 0; m + 1 < M; ++m)
    for (int n = 0; n < N; ++n) {
      mpq_class alpha = psi[m][n + 1] * phi[m + 1][n] / (psi[m][n] * phi[m][n]);
      mpq_class beta = alpha * gamma[m][n + 1];
      if (opt.perturb_beta && *opt.perturb_beta == CellIndex{m, n}) beta += 1;
      mpq_class rhs = x[m][n] * (alpha + beta * x[m][n + 1]) / (1 + gamma[m][n] * x[m][n]);
      if (x[m + 1][n] != rhs) return false;
    }
  return true;
}

bool check_burgers_linearization(BurgersMode mode, Region region, int seeds, std::uint64_t base_seed,
                                 const BurgersOptions& opt) {
  for (int i = 0; i < seeds; ++i)
    if (!burgers_linearization_holds(mode, region, base_seed + i, opt)) return false;
  return true;
}

}  // namespace latdeg

#include "latdeg/degrees/backends.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <thread>

#include "latdeg/lattice/univariate_field.hpp"

namespace latdeg {

namespace {

TableMeta base_meta(const LatticeRule& rule, const InitialData& init, const CoefficientGrid& coeffs) {
  TableMeta meta;
  meta.rule = rule.name;
  meta.init = init.scheme;
  meta.coeff_mode = std::string(coeff_mode_name(coeffs.mode));
  return meta;
}

struct Trial {
  bool degenerate = false;
  std::vector<long> degrees;  // row-major over the region
};

Trial run_trial(const LatticeRule& rule, const LatticePlan& plan, const ResolvedCoefficients& rc,
                std::uint64_t seed, int index) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(index)};
  std::mt19937_64 gen(seq);
  UniAlgebra alg = UniAlgebra::random(plan.data_variables, rc.symbols(), gen);
  Trial out;
  try {
    auto cells = run_lattice(rule, plan, rc, alg);
    const Region r = plan.init.extent;
    for (int m = 0; m < r.rows; ++m)
      for (int n = 0; n < r.cols; ++n) out.degrees.push_back(cells.at({m, n}).degree());
  } catch (const DegenerateDataError&) {
    out.degenerate = true;
  } catch (const ZeroDivisionError&) {
    out.degenerate = true;  // q itself vanished on the line
  }
  return out;
}

}  // namespace

DegreeTable degree_table_exact(const LatticeState& state) {
  TableMeta meta = base_meta(state.rule(), state.init(), state.coeffs());
  meta.backend = Backend::Exact;
  if (state.coeffs().mode != CoeffMode::Constant && state.coeffs().mode != CoeffMode::GenericSymbolic &&
      state.coeffs().mode != CoeffMode::Explicit)
    meta.seeds = {state.coeffs().seed};
  DegreeTable t(state.init().extent, meta);
  for (int m = 0; m < t.rows(); ++m)
    for (int n = 0; n < t.cols(); ++n) t.set(m, n, state.degree({m, n}));
  return t;
}

DegreeTable degree_table_exact(const LatticeRule& rule, const InitialData& init, const CoefficientGrid& coeffs) {
  return degree_table_exact(iterate(rule, init, coeffs));
}

DegreeTable degree_table_specialized(const LatticeRule& rule, const InitialData& init,
                                     const CoefficientGrid& coeffs, const SpecializedOptions& opt) {
  if (opt.trials < 1) throw Error("the specialized backend needs at least one trial");
  LatticePlan plan = make_plan(rule.stencil, init);
  ResolvedCoefficients rc = resolve(coeffs, plan.coefficient_cells);

  std::vector<Trial> trials(opt.trials);
  unsigned workers = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, opt.trials);
  if (workers <= 1) {
    for (int i = 0; i < opt.trials; ++i) trials[i] = run_trial(rule, plan, rc, opt.seed, i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (int i = next++; i < opt.trials; i = next++) trials[i] = run_trial(rule, plan, rc, opt.seed, i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  TableMeta meta = base_meta(rule, init, coeffs);
  meta.backend = Backend::Specialized;
  meta.seeds = {opt.seed};
  meta.trials = opt.trials;
  DegreeTable t(init.extent, meta);
  bool any = false;
  for (const Trial& trial : trials) {
    if (trial.degenerate) continue;
    any = true;
    std::size_t k = 0;
    for (int m = 0; m < t.rows(); ++m)
      for (int n = 0; n < t.cols(); ++n, ++k) t.set(m, n, std::max(t.at(m, n), trial.degrees[k]));
  }
  if (!any)
    throw AllTrialsDegenerateError("every trial hit a zero denominator; the coefficient grid may be degenerate, "
                                   "or try another --seed");
  return t;
}

}  // namespace latdeg

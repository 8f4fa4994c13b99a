#pragma once

#include <random>
#include <vector>

#include "latdeg/symcore/polynomial.hpp"

namespace latdeg::testing {

inline RingPtr small_ring() {
  return make_ring({Variable::p(0), Variable::p(1), Variable::r(1), Variable::q(), Variable::z(0, 0)});
}

/// Sparse random polynomial with `terms` terms of total degree <= max_deg.
inline Polynomial random_poly(const RingPtr& ring, std::mt19937_64& gen, int terms, int max_deg,
                              int coeff_bound = 9) {
  std::uniform_int_distribution<int> var_dist(0, static_cast<int>(ring->size()) - 1);
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<int> coeff_dist(-coeff_bound, coeff_bound);
  std::vector<std::pair<std::vector<int>, mpz_class>> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(ring->size(), 0);
    int d = deg_dist(gen);
    for (int k = 0; k < d; ++k) ++e[var_dist(gen)];
    int c = coeff_dist(gen);
    if (c == 0) c = 1;
    out.emplace_back(e, c);
  }
  return Polynomial::from_terms(ring, out);
}

inline std::vector<mpq_class> random_point(const RingPtr& ring, std::mt19937_64& gen, int bound = 50) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<mpq_class> pt(ring->size());
  for (auto& x : pt) x = d(gen);
  return pt;
}

}  // namespace latdeg::testing

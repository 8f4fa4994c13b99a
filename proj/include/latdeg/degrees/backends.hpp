#pragma once

#include <cstdint>

#include "latdeg/degrees/degree_table.hpp"

namespace latdeg {

/// Reads d^m_n off the canonical denominator of every cell in the state's
/// region.
DegreeTable degree_table_exact(const LatticeState& state);
DegreeTable degree_table_exact(const LatticeRule& rule, const InitialData& init, const CoefficientGrid& coeffs);

class AllTrialsDegenerateError : public Error {
 public:
  using Error::Error;
};

struct SpecializedOptions {
  int trials = 3;
  std::uint64_t seed = 1;
  /// 0 picks the hardware concurrency. The table does not depend on it.
  unsigned threads = 0;
};

/// Restricts the data to a random line and iterates mod a 61-bit prime; the
/// entry is the largest t-degree seen over the trials. Never exceeds the
/// exact degree and equals it with high probability.
DegreeTable degree_table_specialized(const LatticeRule& rule, const InitialData& init,
                                     const CoefficientGrid& coeffs, const SpecializedOptions& opt = {});

}  // namespace latdeg

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "latdeg/degrees/degree_table.hpp"

namespace latdeg {

class GrowthError : public Error {
 public:
  using Error::Error;
};

enum class BasisTerm { One, M, N, MN, Min, Max, M2, N2, Sum, Sum2 };

/// "1", "m", "m*n", "min(m,n)", "N^2" and so on; N stands for m + n.
std::string_view term_name(BasisTerm t);
long evaluate_term(BasisTerm t, int m, int n);

/// d^m_n as an exact combination of basis terms. Fitted on the interior
/// cells with m, n <= training_limit and checked on every interior cell.
struct ClosedFormFit {
  std::vector<BasisTerm> basis;
  std::vector<mpq_class> coefficients;
  int training_limit = 0;
  Region validation_region;
  bool valid = false;

  mpq_class operator()(int m, int n) const;
  mpq_class coefficient(BasisTerm t) const;
  std::string to_string() const;
};

/// d^{m+1}_{n+1} = a d^{m+1}_n + b d^m_{n+1} + c d^m_n + e + delta [m = n]
/// on every interior target cell.
struct RecursionFit {
  mpq_class a, b, c, e;
  std::optional<mpq_class> delta;
  Region valid_region;
  bool valid = false;

  std::string to_string() const;
};

struct EntropyEstimate {
  double E = 0;
  double ratio = 1;
  std::string extrapolation;
};

enum class GrowthKind { Linear, Polynomial, Exponential, Indeterminate };
enum class Interpretation { Linearisable, ISTIntegrable, NonIntegrable, Unknown };

std::string_view growth_kind_name(GrowthKind k);
std::string_view interpretation_name(Interpretation i);
Interpretation interpretation_of(GrowthKind k);

struct GrowthClass {
  GrowthKind kind = GrowthKind::Indeterminate;
  Interpretation interpretation = Interpretation::Unknown;
};

/// Smallest subset of the basis that reproduces the table. Staircase tables
/// use {1, N, N^2} with N = m + n. Needs a 4x4 region.
ClosedFormFit fit_closed_form(const DegreeTable& table);

/// Smallest subset of {a, b, c, e, delta} that reproduces the table. Needs a
/// 4x4 region.
RecursionFit detect_recursion(const DegreeTable& table);

/// Growth rate per unit of m + n along the diagonal d^k_k. Zero whenever a
/// closed form fits; otherwise log d^k_k = 2 E k + alpha log k + const is
/// solved through the last three diagonal cells, which absorbs the usual
/// k^alpha prefactor. Needs k up to at least 4.
EntropyEstimate entropy_estimate(const DegreeTable& table);

/// Linear or Polynomial from the closed form; Exponential when there is none
/// and the last three diagonal ratios exceed 1.2 without decreasing.
GrowthClass classify(const DegreeTable& table);

struct GrowthReport {
  ClosedFormFit fit;
  RecursionFit recursion;
  std::optional<EntropyEstimate> entropy;  // absent when the diagonal is too short
  GrowthClass growth;
};

GrowthReport analyze(const DegreeTable& table);
nlohmann::json to_json(const ClosedFormFit& f);
nlohmann::json to_json(const RecursionFit& r);
nlohmann::json to_json(const GrowthReport& r);
/// k, d^k_k and log(d^k_k)/(2k), one line each after a header.
std::string diagonal_csv(const DegreeTable& table);

}  // namespace latdeg

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "latdeg/degrees/backends.hpp"

namespace latdeg {

class DeautoError : public Error {
 public:
  using Error::Error;
};

/// No candidate, or more than one, for the factor whose cancellation is lost.
class MovableFactorError : public DeautoError {
 public:
  MovableFactorError(const std::string& msg, std::vector<Polynomial> candidates)
      : DeautoError(msg), candidates_(std::move(candidates)) {}
  const std::vector<Polynomial>& candidates() const { return candidates_; }

 private:
  std::vector<Polynomial> candidates_;
};

/// The z-coefficients do not share one generator.
class NonPrincipalConstraintError : public DeautoError {
 public:
  NonPrincipalConstraintError(const std::string& msg, std::vector<Polynomial> coefficients)
      : DeautoError(msg), coefficients_(std::move(coefficients)) {}
  const std::vector<Polynomial>& coefficients() const { return coefficients_; }

 private:
  std::vector<Polynomial> coefficients_;
};

struct VerifyOptions {
  int seeds = 3;
  std::uint64_t base_seed = 1;
  Backend backend = Backend::Exact;
  SpecializedOptions specialized;  // used by the specialized backend
};

struct VerifyReport {
  bool pass = true;
  DegreeTable autonomous;
  std::vector<std::uint64_t> seeds;
  std::vector<DegreeTable> constrained;
  std::vector<TableComparison> comparisons;
};

/// Default data on a region: a corner for quad rules, a line for Burgers-type
/// rules.
InitialData default_initial_data(const LatticeRule& rule, Region region);

/// Compares the constrained table for every seed against the table with one
/// symbolic constant z.
VerifyReport verify_constraint(const LatticeRule& rule, const CoefficientGrid& constrained, Region region,
                               const VerifyOptions& opt = {});

/// A polynomial in the z-variables only, content-normalized with a positive
/// leading coefficient.
struct ConstraintPolynomial {
  Polynomial poly;
  CellIndex cell;
  Polynomial movable_factor;

  std::string to_string() const { return poly.to_string(); }
};

/// Iterates with a fully symbolic z-grid, finds the factor that cancels at
/// `cell` in the autonomous lattice but not in the generic one, sets it to
/// zero in the numerator and returns the common z-factor of what remains.
ConstraintPolynomial derive_constraint(const LatticeRule& rule, CellIndex cell);

/// Equal up to a nonzero constant factor.
bool same_constraint(const Polynomial& a, const Polynomial& b);

/// First builtin generator (sum, product, row-only) whose grids satisfy the
/// constraint on the region.
std::optional<CoeffMode> satisfying_generator(const ConstraintPolynomial& c, Region region, std::uint64_t seed = 1);

nlohmann::json to_json(const ConstraintPolynomial& c, std::optional<bool> verified);

/// x = alpha(n) beta(m) X on the Liouville lattice with
/// f(n) = alpha(n) alpha(n+1) and g(m) = beta(m) beta(m+1).
struct GaugeSpec {
  std::map<int, mpz_class> alpha, beta, f, g;

  static GaugeSpec random(Region region, std::uint64_t seed);
  static GaugeSpec identity(Region region);
  bool relations_hold() const;
};

/// Iterates z = 1 from random data X and z = f g from phi X, and checks that
/// the second lattice is phi times the first everywhere. check_gauge draws a
/// fresh spec per seed.
bool gauge_holds(const GaugeSpec& spec, Region region, std::uint64_t seed);
bool check_gauge(Region region, int seeds, std::uint64_t base_seed = 1);

enum class BurgersMode { Simple, General };

struct BurgersOptions {
  bool unit_f = false;                   // simple mode: f(m) = 1
  std::optional<CellIndex> perturb_beta;  // general mode: break beta = alpha gamma at one cell
};

/// Builds a solution X of the linear lattice, maps it through
/// x = phi X^m_{n+1} / X^m_n and checks the nonlinear lattice at every cell:
/// the builtin Burgers rule with z = g(m) in simple mode, the general rule
/// with alpha, beta, gamma in general mode.
bool burgers_linearization_holds(BurgersMode mode, Region region, std::uint64_t seed,
                                 const BurgersOptions& opt = {});
bool check_burgers_linearization(BurgersMode mode, Region region, int seeds, std::uint64_t base_seed = 1,
                                 const BurgersOptions& opt = {});

}  // namespace latdeg

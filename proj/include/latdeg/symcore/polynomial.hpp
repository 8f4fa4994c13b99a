#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latdeg/symcore/errors.hpp"
#include "latdeg/symcore/variable.hpp"

namespace latdeg {

/// Sparse multivariate polynomial over the integers.
///
/// Terms are kept in strictly decreasing lexicographic order of their
/// exponent vectors (ring variable 0 most significant) with no zero
/// coefficients, so structural equality is mathematical equality. Monomials
/// are packed into 64-bit words holding four 16-bit exponent fields each.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const mpz_class& c);
  static Polynomial variable(RingPtr ring, const Variable& v);
  /// Builds from (exponent vector, coefficient) pairs in any order; equal
  /// monomials are combined. Exponent vectors are indexed by ring position.
  static Polynomial from_terms(RingPtr ring,
                               const std::vector<std::pair<std::vector<int>, mpz_class>>& terms);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return coeffs_.size() == 1; }

  const mpz_class& coeff(std::size_t i) const { return coeffs_[i]; }
  std::span<const std::uint64_t> mono(std::size_t i) const {
    return {monos_.data() + i * words(), words()};
  }
  int exponent(std::size_t term, std::size_t var) const;
  std::vector<int> exponents(std::size_t term) const;
  std::size_t words() const { return ring_->words(); }

  const mpz_class& leading_coeff() const;
  /// Integer constant value; throws unless is_constant().
  mpz_class constant_value() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const mpz_class& c);
  friend Polynomial operator*(const mpz_class& c, const Polynomial& a) { return a * c; }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;

  /// Exact quotient a / b, or nullopt when b does not divide a.
  /// Throws ZeroDivisionError for b == 0.
  std::optional<Polynomial> divide_exact(const Polynomial& b) const;
  /// Exact division by an integer that must divide every coefficient.
  Polynomial divide_exact(const mpz_class& c) const;
  /// Multiplies by the monomial with the given exponent vector.
  Polynomial shift(const std::vector<int>& exps) const;

  /// Positive gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  /// Divides by the content and makes the leading coefficient positive.
  Polynomial canonical() const;
  /// Sign (+1/-1) of the leading coefficient, 0 for zero.
  int leading_sign() const;

  /// Max over terms of the weighted exponent sum. Throws for zero.
  long weighted_degree() const;
  long min_weighted_degree() const;
  bool is_homogeneous() const;
  int degree_in(std::size_t var) const;
  std::vector<int> degrees() const;
  /// Ring indices of the variables that occur.
  std::vector<std::size_t> variables_used() const;
  /// Exponentwise minimum over all terms (the monomial content).
  std::vector<int> monomial_gcd() const;

  /// Coefficients with respect to one variable: result[k] multiplies var^k.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  static Polynomial from_coefficients_in(const RingPtr& ring, std::size_t var,
                                         const std::vector<Polynomial>& coeffs);

  Polynomial substitute(const std::map<Variable, Polynomial>& bindings) const;
  mpq_class evaluate(std::span<const mpq_class> values) const;
  /// Evaluation modulo the fixed 61-bit prime of the modular toolkit.
  std::uint64_t evaluate_mod(std::span<const std::uint64_t> values) const;

  std::string to_string() const;
  std::size_t hash() const;

  // Internal construction from already sorted, combined data.
  Polynomial(RingPtr ring, std::vector<std::uint64_t> monos, std::vector<mpz_class> coeffs);

 private:
  RingPtr ring_;
  std::vector<std::uint64_t> monos_;
  std::vector<mpz_class> coeffs_;
};

/// Accumulates terms in arbitrary order, then sorts and combines them.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(RingPtr ring) : ring_(std::move(ring)) {}
  void add(std::span<const std::uint64_t> mono, const mpz_class& c);
  void add(const std::vector<int>& exps, const mpz_class& c);
  Polynomial build();

 private:
  RingPtr ring_;
  std::vector<std::uint64_t> monos_;
  std::vector<mpz_class> coeffs_;
};

namespace monomial {

inline constexpr std::uint64_t kGuard = 0x8000800080008000ULL;

int compare(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
/// out = a + b, throws ExponentOverflowError.
void multiply(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
              std::span<std::uint64_t> out);
/// out = a - b when b divides a; returns false otherwise.
bool divide(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
            std::span<std::uint64_t> out);
int exponent(std::span<const std::uint64_t> m, std::size_t var);
void set_exponent(std::span<std::uint64_t> m, std::size_t var, int e);

}  // namespace monomial

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace latdeg

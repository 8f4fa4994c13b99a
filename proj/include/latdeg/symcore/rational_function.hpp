#pragma once

#include <string>

#include "latdeg/symcore/gcd.hpp"
#include "latdeg/symcore/polynomial.hpp"

namespace latdeg {

/// Quotient of two integer polynomials in reduced form: gcd(num, den) is
/// constant, the integer contents share no common factor and the leading
/// coefficient of den is positive.
class RationalFunction {
 public:
  explicit RationalFunction(const Polynomial& num);
  /// Reduces num/den; throws ZeroDivisionError when den is zero.
  RationalFunction(const Polynomial& num, const Polynomial& den, GcdMethod method = GcdMethod::Auto);

  /// Wraps a pair already known to be reduced; only normalizes sign/content.
  static RationalFunction from_coprime(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  /// Canonical forms are unique, so this is mathematical equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Common weighted degree of numerator and denominator; throws for zero.
  long degree() const;
  bool is_reduced(GcdMethod method = GcdMethod::Prs) const;
  std::string to_string() const;

 private:
  RationalFunction(Polynomial num, Polynomial den, int);
  Polynomial num_;
  Polynomial den_;
};

}  // namespace latdeg

#include "latdeg/symcore/rational_function.hpp"

#include <cassert>

namespace latdeg {

namespace {

void normalize_scale(Polynomial& num, Polynomial& den) {
  mpz_class cd = den.content();
  mpz_class cn = num.content();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), cd.get_mpz_t(), cn.get_mpz_t());
  if (num.is_zero()) g = cd;
  if (den.leading_sign() < 0) g = -g;
  if (g != 1) {
    num = num.divide_exact(g);
    den = den.divide_exact(g);
  }
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den, int)
    : num_(std::move(num)), den_(std::move(den)) {}

RationalFunction::RationalFunction(const Polynomial& num)
    : num_(num), den_(Polynomial::constant(num.ring(), 1)) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den, GcdMethod method)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw ZeroDivisionError();
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.ring(), 1);
    return;
  }
  Polynomial g = gcd(num_, den_, method);
  if (!g.is_constant()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  normalize_scale(num_, den_);
#ifndef NDEBUG
  assert(gcd(num_, den_, GcdMethod::Auto).is_constant());
#endif
}

RationalFunction RationalFunction::from_coprime(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw ZeroDivisionError();
  Polynomial n = num, d = den;
  if (n.is_zero()) d = Polynomial::constant(n.ring(), 1);
  normalize_scale(n, d);
  return RationalFunction(std::move(n), std::move(d), 0);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, 0); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Polynomial g = gcd(a.den_, b.den_);
  Polynomial ad = *a.den_.divide_exact(g);
  Polynomial bd = *b.den_.divide_exact(g);
  Polynomial num = a.num_ * bd + b.num_ * ad;
  return RationalFunction(num, ad * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(Polynomial(a.ring()));
  Polynomial g1 = gcd(a.num_, b.den_);
  Polynomial g2 = gcd(b.num_, a.den_);
  Polynomial n = *a.num_.divide_exact(g1) * *b.num_.divide_exact(g2);
  Polynomial d = *a.den_.divide_exact(g2) * *b.den_.divide_exact(g1);
  return RationalFunction::from_coprime(n, d);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ZeroDivisionError("division by the zero rational function");
  return a * RationalFunction::from_coprime(b.den_, b.num_);
}

long RationalFunction::degree() const {
  if (num_.is_zero()) throw UndefinedDegreeError();
  return std::max(num_.weighted_degree(), den_.weighted_degree());
}

bool RationalFunction::is_reduced(GcdMethod method) const {
  return gcd(num_, den_, method).is_constant();
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace latdeg

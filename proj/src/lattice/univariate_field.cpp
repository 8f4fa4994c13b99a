#include "latdeg/lattice/univariate_field.hpp"

#include <algorithm>
#include <set>

#include "latdeg/symcore/errors.hpp"

namespace latdeg {

using modp::UPoly;

long UniRational::degree() const {
  return std::max<long>(std::max(modp::degree(num), modp::degree(den)), 0);
}

namespace {

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  modp::divmod(a, b, q, r);
  return q;
}

// Makes den monic, moving its leading coefficient into num.
UniRational normalize(UPoly num, UPoly den) {
  if (den.empty()) throw ZeroDivisionError();
  if (num.empty()) return UniRational{};
  std::uint64_t lc = den.back();
  if (lc != 1) {
    std::uint64_t inv = modp::inv(lc);
    num = modp::scale(num, inv);
    den = modp::scale(den, inv);
  }
  return UniRational{std::move(num), std::move(den)};
}

bool is_one(const UPoly& p) { return p.size() == 1 && p[0] == 1; }

}  // namespace

UniAlgebra::UniAlgebra(std::map<Variable, UPoly> data, std::map<Variable, std::uint64_t> symbols)
    : data_(std::move(data)), symbols_(std::move(symbols)) {
  auto it = data_.find(Variable::q());
  if (it == data_.end()) throw Error("line substitution needs a value for q");
  inv_q_ = div(constant(1), UniRational{it->second, UPoly{1}});
}

UniAlgebra UniAlgebra::random(const std::vector<Variable>& data_vars, const std::vector<Variable>& symbols,
                              std::mt19937_64& gen) {
  std::uniform_int_distribution<std::uint64_t> d(1, (std::uint64_t{1} << 31) - 1);
  std::set<std::uint64_t> used;
  auto draw = [&] {
    std::uint64_t v;
    do v = d(gen);
    while (!used.insert(v).second);
    return v;
  };
  std::map<Variable, UPoly> data;
  for (const Variable& v : data_vars) {
    std::uint64_t a = draw(), b = draw();
    data[v] = UPoly{a, b};
  }
  std::map<Variable, std::uint64_t> syms;
  for (const Variable& v : symbols) syms[v] = draw();
  return UniAlgebra(std::move(data), std::move(syms));
}

UniRational UniAlgebra::constant(const mpz_class& c) const {
  UPoly n{modp::from_mpz(c)};
  modp::trim(n);
  return UniRational{std::move(n), UPoly{1}};
}

UniRational UniAlgebra::datum(const Variable& v) const {
  auto it = data_.find(v);
  if (it == data_.end()) throw Error("no line value for " + v.name());
  return mul(UniRational{it->second, UPoly{1}}, inv_q_);
}

UniRational UniAlgebra::coefficient(const Coefficient& z) const {
  if (z.value) return constant(*z.value);
  auto it = symbols_.find(z.symbol);
  if (it == symbols_.end()) throw Error("no line value for " + z.symbol.name());
  UPoly n{it->second};
  modp::trim(n);
  return UniRational{std::move(n), UPoly{1}};
}

UniRational UniAlgebra::neg(const UniRational& a) const {
  return UniRational{modp::scale(a.num, modp::kPrime - 1), a.den};
}

UniRational UniAlgebra::add(const UniRational& a, const UniRational& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // With g = gcd(da, db): n = na (db/g) + nb (da/g) is coprime to both
  // cofactors, so only gcd(n, g) remains to cancel.
  UPoly g = modp::gcd(a.den, b.den);
  UPoly da = a.den, db = b.den;
  if (!is_one(g)) {
    da = exact_quotient(a.den, g);
    db = exact_quotient(b.den, g);
  }
  UPoly n = modp::add(modp::mul(a.num, db), modp::mul(b.num, da));
  if (n.empty()) return UniRational{};
  UPoly den = modp::mul(modp::mul(da, db), g);
  if (!is_one(g)) {
    UPoly h = modp::gcd(n, g);
    if (!is_one(h)) {
      n = exact_quotient(n, h);
      den = exact_quotient(den, h);
    }
  }
  return normalize(std::move(n), std::move(den));
}

UniRational UniAlgebra::mul(const UniRational& a, const UniRational& b) const {
  if (a.is_zero() || b.is_zero()) return UniRational{};
  UPoly g1 = modp::gcd(a.num, b.den), g2 = modp::gcd(b.num, a.den);
  UPoly an = a.num, bd = b.den, bn = b.num, ad = a.den;
  if (!is_one(g1)) {
    an = exact_quotient(an, g1);
    bd = exact_quotient(bd, g1);
  }
  if (!is_one(g2)) {
    bn = exact_quotient(bn, g2);
    ad = exact_quotient(ad, g2);
  }
  return normalize(modp::mul(an, bn), modp::mul(ad, bd));
}

UniRational UniAlgebra::div(const UniRational& a, const UniRational& b) const {
  if (b.is_zero()) throw ZeroDivisionError();
  return mul(a, normalize(b.den, b.num));
}

}  // namespace latdeg

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace latdeg {
class Polynomial;
}

namespace latdeg::modp {

/// The Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t neg(std::uint64_t a) { return a == 0 ? 0 : kPrime - a; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(x) & kPrime;
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
/// Inverse of a nonzero residue.
std::uint64_t inv(std::uint64_t a);
std::uint64_t from_mpz(const mpz_class& c);
std::uint64_t from_int(long long c);

/// Dense univariate polynomial over Z/p, coefficient k multiplies x^k.
/// Normalized: no trailing zeros; the zero polynomial is empty.
using UPoly = std::vector<std::uint64_t>;

void trim(UPoly& a);
inline long degree(const UPoly& a) { return static_cast<long>(a.size()) - 1; }
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, std::uint64_t c);
/// Quotient and remainder; b must be nonzero.
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
/// Monic gcd (empty when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly make_monic(const UPoly& a);
std::uint64_t eval(const UPoly& a, std::uint64_t x);

/// Image of a multivariate integer polynomial in Z/p[x_var] obtained by
/// substituting point[i] for every other variable i.
UPoly univariate_image(const Polynomial& p, std::size_t var, std::span<const std::uint64_t> point);

}  // namespace latdeg::modp

#include "latdeg/symcore/modular.hpp"

#include <algorithm>
#include <stdexcept>

#include "latdeg/symcore/polynomial.hpp"

namespace latdeg::modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw std::domain_error("inverse of zero modulo p");
  return pow(a, kPrime - 2);
}

std::uint64_t from_mpz(const mpz_class& c) {
  return static_cast<std::uint64_t>(mpz_fdiv_ui(c.get_mpz_t(), kPrime));
}

std::uint64_t from_int(long long c) {
  long long r = c % static_cast<long long>(kPrime);
  if (r < 0) r += static_cast<long long>(kPrime);
  return static_cast<std::uint64_t>(r);
}

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
  trim(r);
  return r;
}

namespace {

// Schoolbook product with delayed reduction: 128-bit accumulators absorb up
// to 64 products of 61-bit residues before they must be folded.
void mul_basecase(const std::uint64_t* a, std::size_t na, const std::uint64_t* b, std::size_t nb,
                  std::uint64_t* out) {
  for (std::size_t k = 0; k < na + nb - 1; ++k) {
    std::size_t lo = k >= nb - 1 ? k - (nb - 1) : 0;
    std::size_t hi = std::min(k, na - 1);
    unsigned __int128 acc = 0;
    std::uint64_t folded = 0;
    int pending = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
      acc += static_cast<unsigned __int128>(a[i]) * b[k - i];
      if (++pending == 60) {
        std::uint64_t l = static_cast<std::uint64_t>(acc) & kPrime;
        std::uint64_t m = static_cast<std::uint64_t>(acc >> 61) & kPrime;
        std::uint64_t h = static_cast<std::uint64_t>(acc >> 122);
        folded = add(folded, add(add(l, m), h));
        acc = 0;
        pending = 0;
      }
    }
    std::uint64_t l = static_cast<std::uint64_t>(acc) & kPrime;
    std::uint64_t m = static_cast<std::uint64_t>(acc >> 61) & kPrime;
    std::uint64_t h = static_cast<std::uint64_t>(acc >> 122);
    out[k] = add(folded, add(add(l, m), h));
  }
}

void karatsuba(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t* out) {
  // a, b have n coefficients; out receives 2n-1.
  if (n <= 48) {
    mul_basecase(a, n, b, n, out);
    return;
  }
  std::size_t h = n / 2, u = n - h;
  std::vector<std::uint64_t> z0(2 * h - 1), z2(2 * u - 1), z1(2 * u - 1), sa(u), sb(u);
  karatsuba(a, b, h, z0.data());
  karatsuba(a + h, b + h, u, z2.data());
  for (std::size_t i = 0; i < u; ++i) {
    sa[i] = a[h + i];
    sb[i] = b[h + i];
    if (i < h) {
      sa[i] = add(sa[i], a[i]);
      sb[i] = add(sb[i], b[i]);
    }
  }
  karatsuba(sa.data(), sb.data(), u, z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = sub(z1[i], z2[i]);
  std::fill(out, out + 2 * n - 1, 0);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] = add(out[i + h], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] = add(out[i + 2 * h], z2[i]);
}

}  // namespace

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  std::size_t small = std::min(a.size(), b.size());
  if (small <= 48) {
    mul_basecase(a.data(), a.size(), b.data(), b.size(), r.data());
  } else {
    std::size_t n = std::max(a.size(), b.size());
    UPoly pa(a), pb(b);
    pa.resize(n, 0);
    pb.resize(n, 0);
    UPoly full(2 * n - 1);
    karatsuba(pa.data(), pb.data(), n, full.data());
    std::copy(full.begin(), full.begin() + static_cast<long>(r.size()), r.begin());
  }
  trim(r);
  return r;
}

UPoly scale(const UPoly& a, std::uint64_t c) {
  if (c == 0) return {};
  UPoly r(a);
  for (auto& x : r) x = mul(x, c);
  return r;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero modulo p");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  std::uint64_t lead_inv = inv(b.back());
  std::size_t db = b.size() - 1;
  for (std::size_t k = a.size(); k-- > db;) {
    std::uint64_t c = r[k];
    if (c == 0) continue;
    c = mul(c, lead_inv);
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = sub(r[k - db + j], mul(c, b[j]));
  }
  trim(q);
  r.resize(db);
  trim(r);
}

UPoly make_monic(const UPoly& a) {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

UPoly gcd(const UPoly& a0, const UPoly& b0) {
  UPoly a = a0, b = b0, q, r;
  trim(a);
  trim(b);
  while (!b.empty()) {
    divmod(a, b, q, r);
    a.swap(b);
    b.swap(r);
  }
  return make_monic(a);
}

std::uint64_t eval(const UPoly& a, std::uint64_t x) {
  std::uint64_t r = 0;
  for (std::size_t k = a.size(); k-- > 0;) r = add(mul(r, x), a[k]);
  return r;
}

UPoly univariate_image(const Polynomial& p, std::size_t var, std::span<const std::uint64_t> point) {
  const std::size_t nv = p.ring()->size();
  std::vector<std::vector<std::uint64_t>> powers(nv);
  std::vector<int> maxdeg = p.size() ? p.degrees() : std::vector<int>(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    if (v == var || maxdeg[v] == 0) continue;
    auto& pw = powers[v];
    pw.resize(static_cast<std::size_t>(maxdeg[v]) + 1);
    pw[0] = 1;
    for (int e = 1; e <= maxdeg[v]; ++e) pw[e] = mul(pw[e - 1], point[v]);
  }
  UPoly out(static_cast<std::size_t>(maxdeg.empty() ? 0 : maxdeg[var]) + 1, 0);
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto m = p.mono(t);
    std::uint64_t c = from_mpz(p.coeff(t));
    int ev = 0;
    for (std::size_t v = 0; v < nv && c != 0; ++v) {
      int e = monomial::exponent(m, v);
      if (e == 0) continue;
      if (v == var)
        ev = e;
      else
        c = mul(c, powers[v][e]);
    }
    out[ev] = add(out[ev], c);
  }
  trim(out);
  return out;
}

}  // namespace latdeg::modp

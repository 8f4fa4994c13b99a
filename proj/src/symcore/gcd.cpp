#include "latdeg/symcore/gcd.hpp"

#include <algorithm>
#include <random>

#include "latdeg/symcore/modular.hpp"

namespace latdeg {

namespace {

using Coeffs = std::vector<Polynomial>;

bool is_zero(const Coeffs& a) { return a.empty(); }
long deg(const Coeffs& a) { return static_cast<long>(a.size()) - 1; }

void trim(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Coeffs to_coeffs(const Polynomial& p, std::size_t v) {
  Coeffs c = p.coefficients_in(v);
  trim(c);
  return c;
}

// lc(B)^(deg A - deg B + 1) * A mod B, all in R[v].
Coeffs prem(Coeffs a, const Coeffs& b) {
  const long n = deg(b);
  const Polynomial& lcb = b.back();
  long e = deg(a) - n + 1;
  while (!a.empty() && deg(a) >= n) {
    Polynomial lead = a.back();
    const long shift = deg(a) - n;
    for (auto& c : a) c = c * lcb;
    for (long j = 0; j <= n; ++j) a[j + shift] -= lead * b[j];
    trim(a);
    --e;
  }
  if (e > 0) {
    Polynomial f = lcb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

Polynomial exact(const Polynomial& a, const Polynomial& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("internal: inexact division in subresultant sequence");
  return *q;
}

Polynomial content_in(const Coeffs& c, GcdMethod method) {
  Polynomial g(c.front().ring());
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    g = gcd(g, x, method);
    if (g.is_constant()) break;
  }
  return g;
}

// Subresultant PRS of two primitive polynomials in R[v]; returns the last
// nonzero remainder as a polynomial (not yet made primitive).
Polynomial subresultant_last(Coeffs a, Coeffs b, const RingPtr& ring, std::size_t v) {
  if (deg(a) < deg(b)) std::swap(a, b);
  Polynomial g = Polynomial::constant(ring, 1);
  Polynomial h = Polynomial::constant(ring, 1);
  while (true) {
    const long delta = deg(a) - deg(b);
    Coeffs r = prem(a, b);
    if (is_zero(r)) break;
    if (deg(r) == 0) return Polynomial::constant(ring, 1);
    a = std::move(b);
    Polynomial div = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = exact(c, div);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  return Polynomial::from_coefficients_in(ring, v, b);
}

Polynomial primitive_in(const Polynomial& p, std::size_t v, GcdMethod method) {
  Coeffs c = to_coeffs(p, v);
  Polynomial cont = content_in(c, method);
  return exact(p, cont);
}

Polynomial monomial_poly(const RingPtr& ring, const std::vector<int>& exps) {
  return Polynomial::constant(ring, 1).shift(exps);
}

bool has_positive(const std::vector<int>& e) {
  return std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
}

// gcd of two nonzero, non-constant polynomials free of monomial factors.
Polynomial gcd_core(const Polynomial& a, const Polynomial& b, GcdMethod method) {
  const RingPtr& ring = a.ring();
  auto da = a.degrees(), db = b.degrees();
  for (std::size_t v = 0; v < da.size(); ++v) {
    if (da[v] > 0 && db[v] == 0) return gcd(content_in(to_coeffs(a, v), method), b, method);
    if (db[v] > 0 && da[v] == 0) return gcd(a, content_in(to_coeffs(b, v), method), method);
  }
  std::size_t best = da.size();
  for (std::size_t v = 0; v < da.size(); ++v) {
    if (da[v] == 0) continue;
    if (best == da.size() || std::max(da[v], db[v]) < std::max(da[best], db[best])) best = v;
  }
  const std::size_t v = best;
  Coeffs ca = to_coeffs(a, v), cb = to_coeffs(b, v);
  Polynomial conta = content_in(ca, method), contb = content_in(cb, method);
  Polynomial c = gcd(conta, contb, method);
  Polynomial pa = exact(a, conta), pb = exact(b, contb);
  Polynomial last = subresultant_last(to_coeffs(pa, v), to_coeffs(pb, v), ring, v);
  Polynomial g = last.is_constant() ? Polynomial::constant(ring, 1) : primitive_in(last, v, method);
  return (c * g).canonical();
}

}  // namespace

std::vector<std::uint64_t> default_point(std::size_t nvars, std::uint64_t salt) {
  std::mt19937_64 gen(0x5eed5eed1234ULL ^ (salt * 0x9e3779b97f4a7c15ULL));
  std::uniform_int_distribution<std::uint64_t> dist(2, modp::kPrime - 1);
  std::vector<std::uint64_t> pt(nvars);
  for (auto& x : pt) x = dist(gen);
  return pt;
}

bool certify_coprime(const Polynomial& a, const Polynomial& b, std::span<const std::uint64_t> point) {
  auto da = a.degrees(), db = b.degrees();
  for (std::size_t v = 0; v < da.size(); ++v) {
    if (da[v] == 0 || db[v] == 0) continue;
    modp::UPoly ia = modp::univariate_image(a, v, point);
    modp::UPoly ib = modp::univariate_image(b, v, point);
    if (modp::degree(ia) != da[v] || modp::degree(ib) != db[v]) return false;
    if (modp::degree(modp::gcd(ia, ib)) > 0) return false;
  }
  return true;
}

bool may_divide(const Polynomial& d, const Polynomial& a, std::span<const std::uint64_t> point) {
  if (a.is_zero()) return true;
  auto dd = d.degrees(), dA = a.degrees();
  std::size_t pick = dd.size();
  for (std::size_t v = 0; v < dd.size(); ++v) {
    if (dd[v] > dA[v]) return false;
    if (dd[v] > 0 && pick == dd.size()) pick = v;
  }
  if (pick == dd.size()) return true;
  modp::UPoly id = modp::univariate_image(d, pick, point);
  if (id.empty()) return true;
  modp::UPoly ia = modp::univariate_image(a, pick, point);
  modp::UPoly q, r;
  modp::divmod(ia, id, q, r);
  return r.empty();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b, GcdMethod method) {
  const RingPtr& ring = a.ring();
  if (a.is_zero()) return b.canonical();
  if (b.is_zero()) return a.canonical();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(ring, 1);

  auto ma = a.monomial_gcd(), mb = b.monomial_gcd();
  std::vector<int> m(ma.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(ma[i], mb[i]);
  Polynomial A = a, B = b;
  if (has_positive(ma)) A = exact(a, monomial_poly(ring, ma));
  if (has_positive(mb)) B = exact(b, monomial_poly(ring, mb));
  A = A.canonical();
  B = B.canonical();
  Polynomial mono = monomial_poly(ring, m);
  if (A.is_constant() || B.is_constant()) return mono;

  if (method == GcdMethod::Auto) {
    if (A == B) return mono * A;
    auto pt = default_point(ring->size());
    const Polynomial& small = A.size() <= B.size() ? A : B;
    const Polynomial& large = A.size() <= B.size() ? B : A;
    if (may_divide(small, large, pt) && large.divide_exact(small)) return mono * small;
    if (certify_coprime(A, B, pt)) return mono;
  }
  return mono * gcd_core(A, B, method);
}

Polynomial gcd(std::span<const Polynomial> polys, GcdMethod method) {
  if (polys.empty()) throw std::invalid_argument("gcd of an empty list");
  Polynomial g(polys.front().ring());
  for (const auto& p : polys) {
    g = gcd(g, p, method);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

}  // namespace latdeg

#include "latdeg/lattice/factored.hpp"

#include <algorithm>

#include "latdeg/symcore/gcd.hpp"

namespace latdeg {

namespace {

std::uint64_t pair_key(FactorId a, FactorId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

void add_power(std::vector<std::pair<FactorId, int>>& powers, FactorId id, int e) {
  if (e == 0) return;
  auto it = std::lower_bound(powers.begin(), powers.end(), id,
                             [](const std::pair<FactorId, int>& p, FactorId x) { return p.first < x; });
  if (it != powers.end() && it->first == id) {
    it->second += e;
    if (it->second == 0) powers.erase(it);
  } else {
    powers.insert(it, {id, e});
  }
}

mpq_class power(const mpq_class& x, int e) {
  mpq_class r = 1;
  mpq_class b = e < 0 ? mpq_class(1) / x : x;
  for (int k = 0; k < std::abs(e); ++k) r *= b;
  return r;
}

}  // namespace

FactorPool::FactorPool(RingPtr ring) : ring_(std::move(ring)), point_(default_point(ring_->size(), 17)) {}

FactorId FactorPool::intern(const Polynomial& p) {
  std::size_t h = p.hash();
  auto range = by_hash_.equal_range(h);
  for (auto it = range.first; it != range.second; ++it)
    if (entries_[it->second].poly == p) return it->second;
  Entry e{p, 0, true, {}, {}, {}};
  e.degree = p.weighted_degree();
  e.homogeneous = p.is_homogeneous();
  e.degrees = p.degrees();
  e.images.resize(ring_->size());
  e.have_image.assign(ring_->size(), false);
  auto id = static_cast<FactorId>(entries_.size());
  entries_.push_back(std::move(e));
  by_hash_.emplace(h, id);
  return id;
}

const modp::UPoly& FactorPool::image(FactorId f, std::size_t var) {
  Entry& e = entries_[f];
  if (!e.have_image[var]) {
    e.images[var] = modp::univariate_image(e.poly, var, point_);
    e.have_image[var] = true;
  }
  return e.images[var];
}

bool FactorPool::certify(FactorId a, FactorId b) {
  // Same argument as certify_coprime, with the images cached per factor.
  for (std::size_t v = 0; v < ring_->size(); ++v) {
    int da = entries_[a].degrees[v], db = entries_[b].degrees[v];
    if (da == 0 || db == 0) continue;
    const modp::UPoly& ia = image(a, v);
    const modp::UPoly& ib = image(b, v);
    if (modp::degree(ia) != da || modp::degree(ib) != db) return false;
    if (modp::degree(modp::gcd(ia, ib)) > 0) return false;
  }
  return true;
}

bool FactorPool::coprime(FactorId a, FactorId b) {
  if (a == b) return false;
  std::uint64_t key = pair_key(a, b);
  if (auto it = coprime_memo_.find(key); it != coprime_memo_.end()) return it->second;
  bool result = certify(a, b);
  if (!result) {
    Polynomial g = gcd(entries_[a].poly, entries_[b].poly);
    result = g.is_constant();
    if (!result) gcd_memo_.emplace(key, std::move(g));
  }
  coprime_memo_.emplace(key, result);
  return result;
}

Polynomial FactorPool::common_factor(FactorId a, FactorId b) {
  if (a == b) return entries_[a].poly;
  std::uint64_t key = pair_key(a, b);
  if (auto it = gcd_memo_.find(key); it != gcd_memo_.end()) return it->second;
  Polynomial g = gcd(entries_[a].poly, entries_[b].poly);
  gcd_memo_.emplace(key, g);
  return g;
}

Polynomial FactorPool::refine(Polynomial p, std::vector<std::pair<FactorId, int>>& found) {
  std::vector<int> deg = p.degrees();
  long wdeg = p.weighted_degree();
  std::vector<modp::UPoly> img(ring_->size());
  std::vector<bool> have(ring_->size(), false);
  const std::size_t known = entries_.size();
  for (FactorId f = 0; f < known; ++f) {
    const Entry& e = entries_[f];
    if (e.degree >= wdeg) continue;
    int count = 0;
    while (true) {
      std::size_t pick = deg.size();
      bool fits = true;
      for (std::size_t v = 0; v < deg.size() && fits; ++v) {
        if (e.degrees[v] > deg[v]) fits = false;
        if (e.degrees[v] > 0 && pick == deg.size()) pick = v;
      }
      if (!fits || pick == deg.size()) break;
      const modp::UPoly& fi = image(f, pick);
      if (!have[pick]) {
        img[pick] = modp::univariate_image(p, pick, point_);
        have[pick] = true;
      }
      if (!fi.empty()) {
        modp::UPoly q, r;
        modp::divmod(img[pick], fi, q, r);
        if (!r.empty()) break;
      }
      auto quotient = p.divide_exact(entries_[f].poly);
      if (!quotient) break;
      p = std::move(*quotient);
      ++count;
      deg = p.degrees();
      wdeg = p.weighted_degree();
      std::fill(have.begin(), have.end(), false);
      if (p.is_constant()) break;
    }
    if (count > 0) found.push_back({f, count});
    if (p.is_constant()) break;
  }
  return p;
}

Factored FactoredAlgebra::constant(const mpz_class& c) const { return Factored{mpq_class(c), {}}; }

void FactoredAlgebra::attach(Factored& out, const Polynomial& p) {
  // out *= p, splitting off the integer content and every variable power.
  mpz_class c = p.content() * p.leading_sign();
  out.unit *= c;
  Polynomial rest = p.divide_exact(c);
  std::vector<int> mono = rest.monomial_gcd();
  const RingPtr& ring = pool_->ring();
  bool has_mono = false;
  for (std::size_t v = 0; v < mono.size(); ++v) {
    if (mono[v] == 0) continue;
    has_mono = true;
    add_power(out.powers, pool_->intern(Polynomial::variable(ring, ring->var(v))), mono[v]);
  }
  if (has_mono) {
    rest = *rest.divide_exact(Polynomial::constant(ring, 1).shift(mono));
  }
  if (rest.is_constant()) return;
  std::vector<std::pair<FactorId, int>> found;
  rest = pool_->refine(std::move(rest), found);
  for (auto [id, e] : found) add_power(out.powers, id, e);
  if (!rest.is_constant()) add_power(out.powers, pool_->intern(rest), 1);
}

Factored FactoredAlgebra::from_polynomial(const Polynomial& p) {
  Factored out{mpq_class(p.is_zero() ? 0 : 1), {}};
  if (!p.is_zero()) attach(out, p);
  return out;
}

void FactoredAlgebra::reduce(Factored& v) {
  // Split any numerator/denominator pair sharing a factor until all such
  // pairs are coprime. Each split replaces factors by strictly smaller ones.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < v.powers.size() && !changed; ++i) {
      if (v.powers[i].second < 0) continue;
      for (std::size_t j = 0; j < v.powers.size() && !changed; ++j) {
        if (v.powers[j].second > 0) continue;
        FactorId a = v.powers[i].first, b = v.powers[j].first;
        if (pool_->coprime(a, b)) continue;
        int ea = v.powers[i].second, eb = v.powers[j].second;
        Polynomial h = pool_->common_factor(a, b);
        Polynomial ra = *pool_->poly(a).divide_exact(h);
        Polynomial rb = *pool_->poly(b).divide_exact(h);
        add_power(v.powers, a, -ea);
        add_power(v.powers, b, -eb);
        add_power(v.powers, pool_->intern(h), ea + eb);
        // ra and rb are primitive with positive leading coefficient, but may
        // still carry variable powers; attach handles the general case.
        for (auto [r, e] : {std::pair{ra, ea}, std::pair{rb, eb}}) {
          if (r.is_constant()) continue;
          Factored part{mpq_class(1), {}};
          attach(part, r);
          for (auto [id, k] : part.powers) add_power(v.powers, id, k * e);
          v.unit *= power(part.unit, e);
        }
        changed = true;
      }
    }
  }
}

Factored FactoredAlgebra::neg(const Factored& a) const {
  Factored r = a;
  r.unit = -r.unit;
  return r;
}

Factored FactoredAlgebra::inverse(const Factored& a) const {
  if (a.is_zero()) throw ZeroDivisionError();
  Factored r;
  r.unit = 1 / a.unit;
  r.powers = a.powers;
  for (auto& p : r.powers) p.second = -p.second;
  return r;
}

Factored FactoredAlgebra::mul(const Factored& a, const Factored& b) {
  if (a.is_zero() || b.is_zero()) return Factored{mpq_class(0), {}};
  Factored r{a.unit * b.unit, a.powers};
  for (auto [id, e] : b.powers) add_power(r.powers, id, e);
  reduce(r);
  return r;
}

Factored FactoredAlgebra::div(const Factored& a, const Factored& b) { return mul(a, inverse(b)); }

Polynomial FactoredAlgebra::product(const std::vector<std::pair<FactorId, int>>& powers) const {
  const RingPtr& ring = pool_->ring();
  std::vector<Polynomial> parts;
  for (auto [id, e] : powers) parts.push_back(pool_->poly(id).pow(static_cast<unsigned>(e)));
  std::sort(parts.begin(), parts.end(), [](const Polynomial& x, const Polynomial& y) { return x.size() < y.size(); });
  Polynomial r = Polynomial::constant(ring, 1);
  for (const auto& p : parts) r *= p;
  return r;
}

Factored FactoredAlgebra::add(const Factored& a, const Factored& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Pull out prod f^min(e_a, e_b) and expand only the cofactors.
  std::vector<std::pair<FactorId, int>> common, ra, rb;
  std::size_t i = 0, j = 0;
  while (i < a.powers.size() || j < b.powers.size()) {
    FactorId id;
    int ea = 0, eb = 0;
    if (j == b.powers.size() || (i < a.powers.size() && a.powers[i].first < b.powers[j].first)) {
      id = a.powers[i].first, ea = a.powers[i++].second;
    } else if (i == a.powers.size() || b.powers[j].first < a.powers[i].first) {
      id = b.powers[j].first, eb = b.powers[j++].second;
    } else {
      id = a.powers[i].first, ea = a.powers[i++].second, eb = b.powers[j++].second;
    }
    int c = std::min(ea, eb);
    if (c != 0) common.push_back({id, c});
    if (ea > c) ra.push_back({id, ea - c});
    if (eb > c) rb.push_back({id, eb - c});
  }
  mpz_class ka = a.unit.get_num() * b.unit.get_den();
  mpz_class kb = b.unit.get_num() * a.unit.get_den();
  Polynomial s = product(ra) * ka + product(rb) * kb;
  if (s.is_zero()) return Factored{mpq_class(0), {}};

  Factored out;
  out.unit = mpq_class(1, 1);
  out.unit /= a.unit.get_den() * b.unit.get_den();
  out.powers = std::move(common);
  // Cancel denominator factors that divide the new numerator outright.
  for (std::size_t k = 0; k < out.powers.size(); ++k) {
    auto& [id, e] = out.powers[k];
    const Polynomial& f = pool_->poly(id);
    while (e < 0 && may_divide(f, s, pool_->point())) {
      auto q = s.divide_exact(f);
      if (!q) break;
      s = std::move(*q);
      ++e;
    }
  }
  std::erase_if(out.powers, [](const std::pair<FactorId, int>& p) { return p.second == 0; });
  attach(out, s);
  reduce(out);
  return out;
}

Polynomial FactoredAlgebra::expand(const Factored& a, int sign) const {
  std::vector<std::pair<FactorId, int>> sel;
  for (auto [id, e] : a.powers)
    if (e * sign > 0) sel.push_back({id, e * sign});
  return product(sel);
}

Polynomial FactoredAlgebra::numerator_part(const Factored& a) const { return expand(a, 1); }
Polynomial FactoredAlgebra::denominator_part(const Factored& a) const { return expand(a, -1); }

RationalFunction FactoredAlgebra::to_rational(const Factored& a) const {
  const RingPtr& ring = pool_->ring();
  if (a.is_zero()) return RationalFunction(Polynomial(ring));
  return RationalFunction::from_coprime(numerator_part(a) * a.unit.get_num(), denominator_part(a) * a.unit.get_den());
}

mpq_class FactoredAlgebra::evaluate(const Factored& a, std::span<const mpq_class> point) const {
  mpq_class r = a.unit;
  for (auto [id, e] : a.powers) {
    mpq_class v = pool_->poly(id).evaluate(point);
    if (e < 0 && v == 0) throw ZeroDivisionError();
    r *= power(v, e);
  }
  return r;
}

long FactoredAlgebra::numerator_degree(const Factored& a) const {
  if (a.is_zero()) throw UndefinedDegreeError();
  long d = 0;
  for (auto [id, e] : a.powers)
    if (e > 0) d += e * pool_->degree(id);
  return d;
}

long FactoredAlgebra::denominator_degree(const Factored& a) const {
  if (a.is_zero()) throw UndefinedDegreeError();
  long d = 0;
  for (auto [id, e] : a.powers)
    if (e < 0) d -= e * pool_->degree(id);
  return d;
}

bool FactoredAlgebra::homogeneous(const Factored& a) const {
  for (auto [id, e] : a.powers)
    if (!pool_->homogeneous(id)) return false;
  return true;
}

}  // namespace latdeg

#include "latdeg/symcore/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "latdeg/symcore/modular.hpp"

namespace latdeg {

namespace monomial {

int compare(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void multiply(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
              std::span<std::uint64_t> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t s = a[i] + b[i];
    if (s & kGuard) throw ExponentOverflowError();
    out[i] = s;
  }
}

bool divide(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
            std::span<std::uint64_t> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t d = (a[i] | kGuard) - b[i];
    if ((d & kGuard) != kGuard) return false;
    out[i] = d & ~kGuard;
  }
  return true;
}

int exponent(std::span<const std::uint64_t> m, std::size_t var) {
  return static_cast<int>((m[var / 4] >> (48 - 16 * (var % 4))) & 0xFFFF);
}

void set_exponent(std::span<std::uint64_t> m, std::size_t var, int e) {
  if (e < 0 || e > 0x7FFF) throw ExponentOverflowError();
  const unsigned shift = 48 - 16 * (var % 4);
  m[var / 4] = (m[var / 4] & ~(std::uint64_t{0xFFFF} << shift)) |
               (static_cast<std::uint64_t>(e) << shift);
}

}  // namespace monomial

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() == b.ring()) return;
  if (a.ring()->vars() == b.ring()->vars()) return;
  throw RingMismatchError();
}

// Min-heap ordering is inverted: the heap top is the largest monomial.
struct HeapCmp {
  const std::vector<std::uint64_t>* prods;
  std::size_t w;
  bool operator()(std::uint32_t x, std::uint32_t y) const {
    const std::uint64_t* a = prods->data() + x * w;
    const std::uint64_t* b = prods->data() + y * w;
    for (std::size_t i = 0; i < w; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<std::uint64_t> monos, std::vector<mpz_class> coeffs)
    : ring_(std::move(ring)), monos_(std::move(monos)), coeffs_(std::move(coeffs)) {}

Polynomial Polynomial::constant(RingPtr ring, const mpz_class& c) {
  Polynomial p(std::move(ring));
  if (c != 0) {
    p.monos_.assign(p.words(), 0);
    p.coeffs_.push_back(c);
  }
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const Variable& v) {
  std::size_t i = ring->index_or_throw(v);
  Polynomial p(std::move(ring));
  p.monos_.assign(p.words(), 0);
  monomial::set_exponent(p.monos_, i, 1);
  p.coeffs_.emplace_back(1);
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring,
                                  const std::vector<std::pair<std::vector<int>, mpz_class>>& terms) {
  PolynomialBuilder b(ring);
  for (const auto& [e, c] : terms) b.add(e, c);
  return b.build();
}

void PolynomialBuilder::add(std::span<const std::uint64_t> mono, const mpz_class& c) {
  if (c == 0) return;
  monos_.insert(monos_.end(), mono.begin(), mono.end());
  coeffs_.push_back(c);
}

void PolynomialBuilder::add(const std::vector<int>& exps, const mpz_class& c) {
  if (exps.size() != ring_->size()) throw std::invalid_argument("exponent vector length mismatch");
  std::vector<std::uint64_t> m(ring_->words(), 0);
  for (std::size_t i = 0; i < exps.size(); ++i) monomial::set_exponent(m, i, exps[i]);
  add(m, c);
}

Polynomial PolynomialBuilder::build() {
  const std::size_t w = ring_->words();
  const std::size_t n = coeffs_.size();
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t x, std::uint32_t y) {
    return monomial::compare({monos_.data() + x * w, w}, {monos_.data() + y * w, w}) > 0;
  });
  std::vector<std::uint64_t> monos;
  std::vector<mpz_class> coeffs;
  monos.reserve(monos_.size());
  coeffs.reserve(n);
  for (std::size_t k = 0; k < n;) {
    std::span<const std::uint64_t> m{monos_.data() + idx[k] * w, w};
    mpz_class acc = coeffs_[idx[k]];
    std::size_t j = k + 1;
    while (j < n && monomial::compare(m, {monos_.data() + idx[j] * w, w}) == 0) {
      acc += coeffs_[idx[j]];
      ++j;
    }
    if (acc != 0) {
      monos.insert(monos.end(), m.begin(), m.end());
      coeffs.push_back(std::move(acc));
    }
    k = j;
  }
  monos_.clear();
  coeffs_.clear();
  return Polynomial(ring_, std::move(monos), std::move(coeffs));
}

bool Polynomial::is_constant() const {
  if (coeffs_.empty()) return true;
  if (coeffs_.size() != 1) return false;
  return std::all_of(monos_.begin(), monos_.end(), [](std::uint64_t w) { return w == 0; });
}

int Polynomial::exponent(std::size_t term, std::size_t var) const {
  return monomial::exponent(mono(term), var);
}

std::vector<int> Polynomial::exponents(std::size_t term) const {
  std::vector<int> e(ring_->size());
  for (std::size_t v = 0; v < e.size(); ++v) e[v] = exponent(term, v);
  return e;
}

const mpz_class& Polynomial::leading_coeff() const {
  if (coeffs_.empty()) throw UndefinedDegreeError();
  return coeffs_.front();
}

mpz_class Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant: " + to_string());
  return coeffs_.empty() ? mpz_class(0) : coeffs_.front();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  require_same_ring(a, b);
  const std::size_t w = a.words();
  std::vector<std::uint64_t> monos;
  std::vector<mpz_class> coeffs;
  monos.reserve((a.size() + b.size()) * w);
  coeffs.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto push = [&](std::span<const std::uint64_t> m, mpz_class c) {
    monos.insert(monos.end(), m.begin(), m.end());
    coeffs.push_back(std::move(c));
  };
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size())
      cmp = -1;
    else if (j == b.size())
      cmp = 1;
    else
      cmp = monomial::compare(a.mono(i), b.mono(j));
    if (cmp > 0) {
      push(a.mono(i), a.coeff(i));
      ++i;
    } else if (cmp < 0) {
      push(b.mono(j), subtract ? mpz_class(-b.coeff(j)) : b.coeff(j));
      ++j;
    } else {
      mpz_class c = subtract ? mpz_class(a.coeff(i) - b.coeff(j)) : mpz_class(a.coeff(i) + b.coeff(j));
      if (c != 0) push(a.mono(i), std::move(c));
      ++i;
      ++j;
    }
  }
  return Polynomial(a.ring(), std::move(monos), std::move(coeffs));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

Polynomial operator*(const Polynomial& a, const mpz_class& c) {
  if (c == 0) return Polynomial(a.ring());
  Polynomial r(a);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  require_same_ring(x, y);
  if (x.is_zero() || y.is_zero()) return Polynomial(x.ring());
  const Polynomial& a = x.size() <= y.size() ? x : y;
  const Polynomial& b = x.size() <= y.size() ? y : x;
  const std::size_t w = a.words();
  const std::size_t na = a.size(), nb = b.size();
  std::vector<std::uint64_t> monos;
  std::vector<mpz_class> coeffs;
  if (na == 1) {
    monos.resize(nb * w);
    coeffs.resize(nb);
    for (std::size_t j = 0; j < nb; ++j) {
      monomial::multiply(a.mono(0), b.mono(j), {monos.data() + j * w, w});
      coeffs[j] = a.coeff(0) * b.coeff(j);
    }
    return Polynomial(a.ring(), std::move(monos), std::move(coeffs));
  }
  // Johnson's heap multiplication; row i holds the stream a_i * b_j.
  std::vector<std::uint64_t> prods(na * w);
  std::vector<std::uint32_t> col(na, 0);
  std::vector<std::uint32_t> heap;
  std::vector<std::uint32_t> popped;
  heap.reserve(na);
  HeapCmp cmp{&prods, w};
  auto set_prod = [&](std::uint32_t i) {
    monomial::multiply(a.mono(i), b.mono(col[i]), {prods.data() + i * w, w});
  };
  set_prod(0);
  heap.push_back(0);
  std::vector<std::uint64_t> cur(w);
  mpz_class acc;
  while (!heap.empty()) {
    std::copy_n(prods.data() + heap.front() * w, w, cur.begin());
    acc = 0;
    popped.clear();
    while (!heap.empty() && std::equal(cur.begin(), cur.end(), prods.data() + heap.front() * w)) {
      std::uint32_t i = heap.front();
      std::pop_heap(heap.begin(), heap.end(), cmp);
      heap.pop_back();
      mpz_addmul(acc.get_mpz_t(), a.coeff(i).get_mpz_t(), b.coeff(col[i]).get_mpz_t());
      popped.push_back(i);
    }
    if (acc != 0) {
      monos.insert(monos.end(), cur.begin(), cur.end());
      coeffs.push_back(acc);
    }
    for (std::uint32_t i : popped) {
      if (col[i] == 0 && i + 1 < na) {
        set_prod(i + 1);
        heap.push_back(i + 1);
        std::push_heap(heap.begin(), heap.end(), cmp);
      }
      if (col[i] + 1 < nb) {
        ++col[i];
        set_prod(i);
        heap.push_back(i);
        std::push_heap(heap.begin(), heap.end(), cmp);
      }
    }
  }
  return Polynomial(a.ring(), std::move(monos), std::move(coeffs));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return false;
  if (a.is_zero()) return true;
  require_same_ring(a, b);
  return a.monos_ == b.monos_ && a.coeffs_ == b.coeffs_;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& b) const {
  require_same_ring(*this, b);
  if (b.is_zero()) throw ZeroDivisionError();
  if (is_zero()) return Polynomial(ring_);
  const std::size_t w = words();
  if (b.is_constant()) {
    const mpz_class& c = b.coeff(0);
    for (const auto& x : coeffs_)
      if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    return divide_exact(c);
  }
  const std::size_t na = size(), nb = b.size();
  std::vector<std::uint64_t> qmonos;
  std::vector<mpz_class> qcoeffs;
  std::vector<std::uint64_t> prods;
  std::vector<std::uint32_t> col;
  std::vector<std::uint32_t> heap;
  HeapCmp cmp{&prods, w};
  std::vector<std::uint64_t> cur(w), qm(w);
  mpz_class acc, qc;
  std::size_t k = 0;
  auto top_mono = [&]() -> const std::uint64_t* { return prods.data() + heap.front() * w; };
  while (k < na || !heap.empty()) {
    if (heap.empty()) {
      std::copy_n(mono(k).data(), w, cur.begin());
    } else if (k == na) {
      std::copy_n(top_mono(), w, cur.begin());
    } else {
      std::span<const std::uint64_t> h{top_mono(), w};
      if (monomial::compare(mono(k), h) >= 0)
        std::copy_n(mono(k).data(), w, cur.begin());
      else
        std::copy_n(h.data(), w, cur.begin());
    }
    acc = 0;
    if (k < na && std::equal(cur.begin(), cur.end(), mono(k).begin())) {
      acc = coeffs_[k];
      ++k;
    }
    while (!heap.empty() && std::equal(cur.begin(), cur.end(), top_mono())) {
      std::uint32_t i = heap.front();
      std::pop_heap(heap.begin(), heap.end(), cmp);
      heap.pop_back();
      mpz_submul(acc.get_mpz_t(), qcoeffs[i].get_mpz_t(), b.coeff(col[i]).get_mpz_t());
      if (col[i] + 1 < nb) {
        ++col[i];
        monomial::multiply({qmonos.data() + i * w, w}, b.mono(col[i]), {prods.data() + i * w, w});
        heap.push_back(i);
        std::push_heap(heap.begin(), heap.end(), cmp);
      }
    }
    if (acc == 0) continue;
    if (!monomial::divide(cur, b.mono(0), qm)) return std::nullopt;
    if (!mpz_divisible_p(acc.get_mpz_t(), b.coeff(0).get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), acc.get_mpz_t(), b.coeff(0).get_mpz_t());
    auto i = static_cast<std::uint32_t>(qcoeffs.size());
    qmonos.insert(qmonos.end(), qm.begin(), qm.end());
    qcoeffs.push_back(qc);
    col.push_back(1);
    prods.resize(prods.size() + w);
    if (nb > 1) {
      monomial::multiply(qm, b.mono(1), {prods.data() + i * w, w});
      heap.push_back(i);
      std::push_heap(heap.begin(), heap.end(), cmp);
    }
  }
  return Polynomial(ring_, std::move(qmonos), std::move(qcoeffs));
}

Polynomial Polynomial::divide_exact(const mpz_class& c) const {
  if (c == 0) throw ZeroDivisionError();
  Polynomial r(*this);
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw std::logic_error("integer does not divide polynomial exactly");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

Polynomial Polynomial::shift(const std::vector<int>& exps) const {
  std::vector<std::uint64_t> m(words(), 0);
  for (std::size_t i = 0; i < exps.size(); ++i) monomial::set_exponent(m, i, exps[i]);
  Polynomial r(*this);
  for (std::size_t t = 0; t < size(); ++t)
    monomial::multiply(mono(t), m, {r.monos_.data() + t * words(), words()});
  return r;
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::canonical() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (coeffs_.front() < 0) g = -g;
  if (g == 1) return *this;
  return divide_exact(g);
}

int Polynomial::leading_sign() const { return coeffs_.empty() ? 0 : sgn(coeffs_.front()); }

long Polynomial::weighted_degree() const {
  if (is_zero()) throw UndefinedDegreeError();
  long best = -1;
  for (std::size_t t = 0; t < size(); ++t) {
    long d = 0;
    for (std::size_t v = 0; v < ring_->size(); ++v) d += static_cast<long>(ring_->weight(v)) * exponent(t, v);
    best = std::max(best, d);
  }
  return best;
}

long Polynomial::min_weighted_degree() const {
  if (is_zero()) throw UndefinedDegreeError();
  long best = -1;
  for (std::size_t t = 0; t < size(); ++t) {
    long d = 0;
    for (std::size_t v = 0; v < ring_->size(); ++v) d += static_cast<long>(ring_->weight(v)) * exponent(t, v);
    best = best < 0 ? d : std::min(best, d);
  }
  return best;
}

bool Polynomial::is_homogeneous() const { return weighted_degree() == min_weighted_degree(); }

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (std::size_t t = 0; t < size(); ++t) d = std::max(d, exponent(t, var));
  return d;
}

std::vector<int> Polynomial::degrees() const {
  std::vector<int> d(ring_->size(), 0);
  for (std::size_t t = 0; t < size(); ++t)
    for (std::size_t v = 0; v < d.size(); ++v) d[v] = std::max(d[v], exponent(t, v));
  return d;
}

std::vector<std::size_t> Polynomial::variables_used() const {
  std::vector<std::size_t> out;
  auto d = degrees();
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] > 0) out.push_back(v);
  return out;
}

std::vector<int> Polynomial::monomial_gcd() const {
  std::vector<int> g(ring_->size(), 0);
  if (is_zero()) return g;
  g = exponents(0);
  for (std::size_t t = 1; t < size(); ++t)
    for (std::size_t v = 0; v < g.size(); ++v) g[v] = std::min(g[v], exponent(t, v));
  return g;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  const std::size_t w = words();
  int deg = degree_in(var);
  std::vector<std::vector<std::uint64_t>> monos(static_cast<std::size_t>(deg) + 1);
  std::vector<std::vector<mpz_class>> coeffs(static_cast<std::size_t>(deg) + 1);
  std::vector<std::uint64_t> m(w);
  // Removing the var exponent preserves the relative order of terms that
  // share the same var degree, so each bucket stays sorted.
  for (std::size_t t = 0; t < size(); ++t) {
    int e = exponent(t, var);
    std::copy_n(mono(t).data(), w, m.begin());
    monomial::set_exponent(m, var, 0);
    monos[e].insert(monos[e].end(), m.begin(), m.end());
    coeffs[e].push_back(coeffs_[t]);
  }
  std::vector<Polynomial> out;
  out.reserve(monos.size());
  for (std::size_t e = 0; e < monos.size(); ++e)
    out.emplace_back(ring_, std::move(monos[e]), std::move(coeffs[e]));
  return out;
}

Polynomial Polynomial::from_coefficients_in(const RingPtr& ring, std::size_t var,
                                            const std::vector<Polynomial>& coeffs) {
  PolynomialBuilder b(ring);
  std::vector<std::uint64_t> m(ring->words());
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    for (std::size_t t = 0; t < coeffs[e].size(); ++t) {
      std::copy_n(coeffs[e].mono(t).data(), m.size(), m.begin());
      monomial::set_exponent(m, var, monomial::exponent(m, var) + static_cast<int>(e));
      b.add(m, coeffs[e].coeff(t));
    }
  }
  return b.build();
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& bindings) const {
  const std::size_t nv = ring_->size();
  std::vector<const Polynomial*> bound(nv, nullptr);
  for (const auto& [v, p] : bindings) {
    auto i = ring_->index_of(v);
    if (!i) continue;
    require_same_ring(*this, p);
    bound[*i] = &p;
  }
  std::vector<std::vector<Polynomial>> powers(nv);
  auto power = [&](std::size_t v, int e) -> const Polynomial& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(constant(ring_, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * *bound[v]);
    return pw[e];
  };
  // Group terms by the exponents of the bound variables so each distinct
  // bound-part product is expanded once.
  std::map<std::vector<int>, PolynomialBuilder> groups;
  std::vector<std::uint64_t> m(words());
  for (std::size_t t = 0; t < size(); ++t) {
    std::vector<int> key;
    std::copy_n(mono(t).data(), m.size(), m.begin());
    for (std::size_t v = 0; v < nv; ++v) {
      if (!bound[v]) continue;
      key.push_back(monomial::exponent(m, v));
      monomial::set_exponent(m, v, 0);
    }
    auto it = groups.try_emplace(key, ring_).first;
    it->second.add(m, coeffs_[t]);
  }
  Polynomial result(ring_);
  for (auto& [key, builder] : groups) {
    Polynomial part = builder.build();
    std::size_t k = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      if (!bound[v]) continue;
      if (key[k] > 0) part = part * power(v, key[k]);
      ++k;
    }
    result += part;
  }
  return result;
}

mpq_class Polynomial::evaluate(std::span<const mpq_class> values) const {
  if (values.size() != ring_->size()) throw std::invalid_argument("evaluation point has wrong arity");
  if (is_zero()) return 0;
  // Power tables per variable; integer points stay in mpz throughout.
  const std::vector<int> maxdeg = degrees();
  const bool integral = std::all_of(values.begin(), values.end(), [](const mpq_class& x) { return x.get_den() == 1; });
  if (integral) {
    std::vector<std::vector<mpz_class>> pw(values.size());
    for (std::size_t v = 0; v < values.size(); ++v) {
      pw[v].resize(maxdeg[v] + 1);
      pw[v][0] = 1;
      for (int k = 1; k <= maxdeg[v]; ++k) pw[v][k] = pw[v][k - 1] * values[v].get_num();
    }
    mpz_class sum = 0, term;
    for (std::size_t t = 0; t < size(); ++t) {
      term = coeffs_[t];
      for (std::size_t v = 0; v < values.size(); ++v)
        if (int e = exponent(t, v)) term *= pw[v][e];
      sum += term;
    }
    return mpq_class(sum);
  }
  std::vector<std::vector<mpq_class>> pw(values.size());
  for (std::size_t v = 0; v < values.size(); ++v) {
    pw[v].resize(maxdeg[v] + 1);
    pw[v][0] = 1;
    for (int k = 1; k <= maxdeg[v]; ++k) pw[v][k] = pw[v][k - 1] * values[v];
  }
  mpq_class sum = 0, term;
  for (std::size_t t = 0; t < size(); ++t) {
    term = coeffs_[t];
    for (std::size_t v = 0; v < values.size(); ++v)
      if (int e = exponent(t, v)) term *= pw[v][e];
    sum += term;
  }
  return sum;
}

std::uint64_t Polynomial::evaluate_mod(std::span<const std::uint64_t> values) const {
  if (values.size() != ring_->size()) throw std::invalid_argument("evaluation point has wrong arity");
  std::uint64_t sum = 0;
  for (std::size_t t = 0; t < size(); ++t) {
    std::uint64_t term = modp::from_mpz(coeffs_[t]);
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      int e = exponent(t, v);
      if (e) term = modp::mul(term, modp::pow(values[v], static_cast<std::uint64_t>(e)));
    }
    sum = modp::add(sum, term);
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < size(); ++t) {
    mpz_class c = coeffs_[t];
    if (t == 0) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    std::string mono_str;
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      int e = exponent(t, v);
      if (e == 0) continue;
      if (!mono_str.empty()) mono_str += "*";
      mono_str += ring_->var(v).name();
      if (e > 1) mono_str += "^" + std::to_string(e);
    }
    if (mono_str.empty()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << mono_str;
    }
  }
  return os.str();
}

std::size_t Polynomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (std::uint64_t w : monos_) mix(w);
  for (const auto& c : coeffs_) mix(static_cast<std::uint64_t>(mpz_fdiv_ui(c.get_mpz_t(), 4294967291ul)) ^
                                    (c < 0 ? 0xABCDull : 0));
  return h;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace latdeg

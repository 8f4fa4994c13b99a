#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latdeg/symcore/modular.hpp"
#include "latdeg/symcore/rational_function.hpp"

namespace latdeg {

using FactorId = std::uint32_t;

/// Hash-consed store of the polynomial factors used by one lattice run.
/// Every stored factor is non-constant, primitive and has a positive leading
/// coefficient. Coprimality verdicts are memoized per pair.
class FactorPool {
 public:
  explicit FactorPool(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return entries_.size(); }

  FactorId intern(const Polynomial& p);
  const Polynomial& poly(FactorId f) const { return entries_[f].poly; }
  long degree(FactorId f) const { return entries_[f].degree; }
  bool homogeneous(FactorId f) const { return entries_[f].homogeneous; }

  /// Exact: a modular certificate first, a real gcd when it is inconclusive.
  bool coprime(FactorId a, FactorId b);
  /// Non-constant common factor of two factors known not to be coprime.
  Polynomial common_factor(FactorId a, FactorId b);
  /// Divides out every stored factor dividing p, with multiplicity, and
  /// returns the cofactor. Keeps composite factors from entering the pool
  /// when their pieces are already known.
  Polynomial refine(Polynomial p, std::vector<std::pair<FactorId, int>>& found);

  std::span<const std::uint64_t> point() const { return point_; }

 private:
  struct Entry {
    Polynomial poly;
    long degree = 0;
    bool homogeneous = true;
    std::vector<int> degrees;
    std::vector<modp::UPoly> images;  // per variable, filled lazily
    std::vector<bool> have_image;
  };

  const modp::UPoly& image(FactorId f, std::size_t var);
  bool certify(FactorId a, FactorId b);

  RingPtr ring_;
  std::vector<std::uint64_t> point_;
  std::vector<Entry> entries_;
  std::unordered_multimap<std::size_t, FactorId> by_hash_;
  std::unordered_map<std::uint64_t, bool> coprime_memo_;
  std::unordered_map<std::uint64_t, Polynomial> gcd_memo_;
};

/// unit * prod f_i^{e_i} with the numerator factors (e > 0) coprime to the
/// denominator factors (e < 0). The value is zero exactly when unit is 0.
struct Factored {
  mpq_class unit;
  std::vector<std::pair<FactorId, int>> powers;  // sorted by id, no zero exponents

  bool is_zero() const { return unit == 0; }
};

/// Field operations on Factored values over one pool.
class FactoredAlgebra {
 public:
  explicit FactoredAlgebra(std::shared_ptr<FactorPool> pool) : pool_(std::move(pool)) {}

  FactorPool& pool() { return *pool_; }
  const std::shared_ptr<FactorPool>& pool_ptr() const { return pool_; }

  Factored constant(const mpz_class& c) const;
  Factored from_polynomial(const Polynomial& p);

  Factored add(const Factored& a, const Factored& b);
  Factored sub(const Factored& a, const Factored& b) { return add(a, neg(b)); }
  Factored mul(const Factored& a, const Factored& b);
  Factored div(const Factored& a, const Factored& b);
  Factored neg(const Factored& a) const;
  Factored inverse(const Factored& a) const;

  /// Expanded numerator and denominator without the unit.
  Polynomial numerator_part(const Factored& a) const;
  Polynomial denominator_part(const Factored& a) const;
  RationalFunction to_rational(const Factored& a) const;
  /// Value at a point (one rational per ring variable) without expanding;
  /// throws ZeroDivisionError when a denominator factor vanishes there.
  mpq_class evaluate(const Factored& a, std::span<const mpq_class> point) const;
  long numerator_degree(const Factored& a) const;
  long denominator_degree(const Factored& a) const;
  bool homogeneous(const Factored& a) const;

 private:
  Polynomial expand(const Factored& a, int sign) const;
  Polynomial product(const std::vector<std::pair<FactorId, int>>& powers) const;
  void attach(Factored& out, const Polynomial& p);
  void reduce(Factored& v);

  std::shared_ptr<FactorPool> pool_;
};

}  // namespace latdeg

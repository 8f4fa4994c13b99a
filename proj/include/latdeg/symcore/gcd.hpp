#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "latdeg/symcore/polynomial.hpp"

namespace latdeg {

enum class GcdMethod {
  // Monomial/content splitting, divisibility shortcuts and a modular
  // coprimality certificate before falling back to the PRS recursion.
  Auto,
  // Plain recursive subresultant PRS; slow, used as the reference.
  Prs,
};

/// Greatest common divisor with content 1 and positive leading coefficient.
/// gcd(a, 0) = canonical(a); gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b, GcdMethod method = GcdMethod::Auto);
Polynomial gcd(std::span<const Polynomial> polys, GcdMethod method = GcdMethod::Auto);

/// Proves gcd(a, b) is constant using univariate images modulo p at the
/// given point (one residue per ring variable). Returns false when the
/// images cannot decide; it never returns true for non-coprime inputs.
bool certify_coprime(const Polynomial& a, const Polynomial& b, std::span<const std::uint64_t> point);

/// Cheap necessary condition for d | a via one univariate image; false
/// means d certainly does not divide a.
bool may_divide(const Polynomial& d, const Polynomial& a, std::span<const std::uint64_t> point);

/// Deterministic evaluation point used by the gcd fast paths.
std::vector<std::uint64_t> default_point(std::size_t nvars, std::uint64_t salt = 0);

}  // namespace latdeg

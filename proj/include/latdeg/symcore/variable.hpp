#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace latdeg {

/// Variable families. P, R and Q carry the homogeneous initial data; Z are
/// lattice coefficients; T is the line parameter of the specialized backend.
enum class VarKind : std::uint8_t { P, R, Q, Z, T, Aux };

struct Variable {
  VarKind kind = VarKind::Aux;
  int index = 0;   // n for P, m for R and Z, free index for Aux
  int index2 = 0;  // n for Z
  int aux_weight = 1;

  static Variable p(int n) { return {VarKind::P, n, 0, 0}; }
  static Variable r(int m) { return {VarKind::R, m, 0, 0}; }
  static Variable q() { return {VarKind::Q, 0, 0, 0}; }
  static Variable z(int m, int n) { return {VarKind::Z, m, n, 0}; }
  static Variable t() { return {VarKind::T, 0, 0, 0}; }
  static Variable aux(int i, int weight = 1) { return {VarKind::Aux, i, 0, weight}; }

  int weight() const;
  bool is_coefficient() const { return kind == VarKind::Z; }
  std::string name() const;

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.kind == b.kind && a.index == b.index && a.index2 == b.index2;
  }
  // P < R < Q < Z < T < Aux. Z variables run from the highest (m,n) down so
  // that coefficient constraints print with the most advanced cell first.
  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b);
};

struct VariableHash {
  std::size_t operator()(const Variable& v) const noexcept;
};

/// An ordered, immutable variable universe. The order fixes the lexicographic
/// term order of every polynomial built over it.
class Ring {
 public:
  explicit Ring(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& var(std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& vars() const { return vars_; }
  int weight(std::size_t i) const { return weights_[i]; }
  std::optional<std::size_t> index_of(const Variable& v) const;
  std::size_t index_or_throw(const Variable& v) const;

  // Packed monomial layout: 16-bit exponent fields, four per word.
  std::size_t words() const { return words_; }

 private:
  std::vector<Variable> vars_;
  std::vector<int> weights_;
  std::unordered_map<Variable, std::size_t, VariableHash> lookup_;
  std::size_t words_ = 0;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Variable> vars);

}  // namespace latdeg

#include "latdeg/symcore/variable.hpp"

#include <algorithm>
#include <stdexcept>

namespace latdeg {

int Variable::weight() const {
  switch (kind) {
    case VarKind::P:
    case VarKind::R:
    case VarKind::Q:
      return 1;
    case VarKind::Z:
    case VarKind::T:
      return 0;
    case VarKind::Aux:
      return aux_weight;
  }
  return 0;
}

namespace {

std::string signed_index(int i) { return i < 0 ? "m" + std::to_string(-i) : std::to_string(i); }

}  // namespace

std::string Variable::name() const {
  switch (kind) {
    case VarKind::P:
      return "p" + signed_index(index);
    case VarKind::R:
      return "r" + signed_index(index);
    case VarKind::Q:
      return "q";
    case VarKind::T:
      return "t";
    case VarKind::Z:
      if (index >= 0 && index < 10 && index2 >= 0 && index2 < 10)
        return "z" + std::to_string(index) + std::to_string(index2);
      return "z" + signed_index(index) + "_" + signed_index(index2);
    case VarKind::Aux:
      return "u" + signed_index(index);
  }
  return "?";
}

std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
  if (a.kind != b.kind) return a.kind <=> b.kind;
  if (a.kind == VarKind::Z) {
    if (a.index != b.index) return b.index <=> a.index;
    return b.index2 <=> a.index2;
  }
  if (a.index != b.index) return a.index <=> b.index;
  return a.index2 <=> b.index2;
}

std::size_t VariableHash::operator()(const Variable& v) const noexcept {
  std::size_t h = static_cast<std::size_t>(v.kind);
  h = h * 1000003u ^ static_cast<std::size_t>(static_cast<unsigned>(v.index));
  h = h * 1000003u ^ static_cast<std::size_t>(static_cast<unsigned>(v.index2));
  return h;
}

Ring::Ring(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  weights_.reserve(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].weight() < 0) throw std::invalid_argument("negative variable weight");
    weights_.push_back(vars_[i].weight());
    lookup_.emplace(vars_[i], i);
  }
  words_ = (vars_.size() + 3) / 4;
}

std::optional<std::size_t> Ring::index_of(const Variable& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ring::index_or_throw(const Variable& v) const {
  auto i = index_of(v);
  if (!i) throw std::invalid_argument("variable " + v.name() + " is not in the ring");
  return *i;
}

RingPtr make_ring(std::vector<Variable> vars) { return std::make_shared<const Ring>(std::move(vars)); }

}  // namespace latdeg

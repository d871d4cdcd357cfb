#pragma once

#include <cstdint>
#include <vector>

#include "wps/polynomial.hpp"

namespace wps {

/// One term m * e_comp with coefficient c of a free-module element.
struct ModTerm {
  Monomial monomial;
  std::uint32_t comp = 0;
  Rational coefficient;
};

/// Sparse element of S^r, terms sorted descending in a ModuleOrder.
using ModVec = std::vector<ModTerm>;

/// Term order on S^r built from the ring's monomial order.
///
/// Components below `prefix` are eliminated: any term there exceeds every
/// term outside, and inside the prefix position beats monomial. Elsewhere the
/// monomials are compared first and the higher component index wins ties.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  explicit ModuleOrder(MonomialOrder ring_order, std::uint32_t prefix = 0)
      : ring_(std::move(ring_order)), prefix_(prefix) {}

  const MonomialOrder& ring_order() const { return ring_; }
  std::uint32_t prefix() const { return prefix_; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    bool pa = ca < prefix_, pb = cb < prefix_;
    if (pa != pb) return pa ? 1 : -1;
    if (pa && ca != cb) return ca < cb ? 1 : -1;
    if (int c = ring_.compare(a, b)) return c;
    return ca == cb ? 0 : (ca > cb ? 1 : -1);
  }
  int compare(const ModTerm& a, const ModTerm& b) const { return compare(a.monomial, a.comp, b.monomial, b.comp); }
  bool greater(const ModTerm& a, const ModTerm& b) const { return compare(a, b) > 0; }

  friend bool operator==(const ModuleOrder& a, const ModuleOrder& b) {
    return a.ring_ == b.ring_ && a.prefix_ == b.prefix_;
  }

 private:
  MonomialOrder ring_;
  std::uint32_t prefix_ = 0;
};

/// Sorts, merges equal terms, drops zeros.
void canonicalize(ModVec& v, const ModuleOrder& order);

/// a + c * m * b in one merge pass.
ModVec add_scaled(const ModVec& a, const Rational& c, const Monomial& m, const ModVec& b, const ModuleOrder& order);

ModVec scale(const ModVec& v, const Rational& c);
ModVec multiply(const ModVec& v, const Polynomial& p, const ModuleOrder& order);
void make_monic(ModVec& v);

/// f * e_comp.
ModVec embed(const Polynomial& f, std::uint32_t comp);
/// Coefficient polynomial of e_comp.
Polynomial component(const ModVec& v, std::uint32_t comp, const RingPtr& ring);

/// Twisted degree deg(m) + shift[comp] of every term if they agree.
std::optional<int> homogeneous_degree(const ModVec& v, const std::vector<int>& shifts);

/// Human-readable form "[comp] poly + ...", one block per component.
std::string to_string(const ModVec& v, const RingPtr& ring);

}  // namespace wps

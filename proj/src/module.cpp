#include "wps/module.hpp"

#include <algorithm>
#include <map>

namespace wps {

void canonicalize(ModVec& v, const ModuleOrder& order) {
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) { return order.greater(a, b); });
  ModVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
      if (out.back().coefficient.is_zero()) out.pop_back();
    } else if (!t.coefficient.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

ModVec add_scaled(const ModVec& a, const Rational& c, const Monomial& m, const ModVec& b, const ModuleOrder& order) {
  if (c.is_zero() || b.empty()) return a;
  ModVec out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end()) {
      out.push_back(*i++);
      continue;
    }
    Monomial mj = m * j->monomial;
    int cmp = i == a.end() ? -1 : order.compare(i->monomial, i->comp, mj, j->comp);
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.push_back({mj, j->comp, c * j->coefficient});
      ++j;
    } else {
      Rational s = i->coefficient + c * j->coefficient;
      if (!s.is_zero()) out.push_back({mj, j->comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

ModVec scale(const ModVec& v, const Rational& c) {
  if (c.is_zero()) return {};
  ModVec r(v);
  for (auto& t : r) t.coefficient *= c;
  return r;
}

ModVec multiply(const ModVec& v, const Polynomial& p, const ModuleOrder& order) {
  ModVec acc;
  for (const auto& t : p.terms()) acc = add_scaled(acc, t.coefficient, t.monomial, v, order);
  return acc;
}

void make_monic(ModVec& v) {
  if (v.empty() || v.front().coefficient.is_one()) return;
  Rational inv = Rational(1) / v.front().coefficient;
  for (auto& t : v) t.coefficient *= inv;
}

ModVec embed(const Polynomial& f, std::uint32_t comp) {
  ModVec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.monomial, comp, t.coefficient});
  return v;
}

Polynomial component(const ModVec& v, std::uint32_t comp, const RingPtr& ring) {
  std::vector<Polynomial::Term> terms;
  for (const auto& t : v)
    if (t.comp == comp) terms.push_back({t.monomial, t.coefficient});
  return Polynomial::from_terms(ring, std::move(terms));
}

std::optional<int> homogeneous_degree(const ModVec& v, const std::vector<int>& shifts) {
  if (v.empty()) return std::nullopt;
  auto deg = [&](const ModTerm& t) {
    if (t.comp >= shifts.size()) throw UsageError("module term refers to a component beyond the rank");
    return t.monomial.degree() + shifts[t.comp];
  };
  int d = deg(v.front());
  for (const auto& t : v)
    if (deg(t) != d) return std::nullopt;
  return d;
}

std::string to_string(const ModVec& v, const RingPtr& ring) {
  if (v.empty()) return "0";
  std::map<std::uint32_t, std::vector<Polynomial::Term>> by_comp;
  for (const auto& t : v) by_comp[t.comp].push_back({t.monomial, t.coefficient});
  std::string out;
  for (auto& [c, terms] : by_comp) {
    if (!out.empty()) out += " + ";
    out += "[" + std::to_string(c) + "] (" + Polynomial::from_terms(ring, std::move(terms)).to_string() + ")";
  }
  return out;
}

}  // namespace wps

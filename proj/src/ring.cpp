#include "wps/ring.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace wps {

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<int> weights) {
  MonomialOrder o;
  o.kind_ = Kind::WeightedGrevlex;
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::block_elimination(std::vector<int> weights, std::size_t block) {
  if (block > weights.size()) throw UsageError("elimination block larger than the variable set");
  MonomialOrder o;
  o.kind_ = block == 0 ? Kind::WeightedGrevlex : Kind::BlockElimination;
  o.block_ = block;
  o.weights_ = std::move(weights);
  return o;
}

WeightedRing::WeightedRing(std::vector<Variable> variables) : WeightedRing(std::move(variables), 0) {}

WeightedRing::WeightedRing(std::vector<Variable> variables, std::size_t eliminate)
    : variables_(std::move(variables)) {
  if (variables_.empty()) throw UsageError("a ring needs at least one variable");
  if (variables_.size() > kMaxVariables)
    throw UsageError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.name.empty()) throw UsageError("variable names must be non-empty");
    if (v.degree < 1) throw UsageError("variable '" + v.name + "' must have positive degree");
    if (!seen.insert(v.name).second) throw UsageError("duplicate variable name '" + v.name + "'");
    degrees_.push_back(v.degree);
  }
  sorted_ = degrees_;
  std::sort(sorted_.begin(), sorted_.end());
  total_weight_ = std::accumulate(degrees_.begin(), degrees_.end(), 0);
  order_ = MonomialOrder::block_elimination(degrees_, eliminate);
}

std::shared_ptr<const WeightedRing> WeightedRing::make(std::vector<Variable> variables) {
  return std::make_shared<const WeightedRing>(std::move(variables));
}

std::shared_ptr<const WeightedRing> WeightedRing::from_degrees(std::span<const int> degrees, std::string_view prefix) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < degrees.size(); ++i) vars.push_back({std::string(prefix) + std::to_string(i), degrees[i]});
  return make(std::move(vars));
}

std::optional<std::size_t> WeightedRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return i;
  return std::nullopt;
}

Monomial WeightedRing::rebuild(std::array<Monomial::Exponent, kMaxVariables> exps) const {
  Monomial m;
  m.exp_ = exps;
  for (std::size_t i = 0; i < size(); ++i) {
    if (exps[i] == 0) continue;
    m.mask_ |= (1u << i);
    m.degree_ += exps[i] * degrees_[i];
  }
  return m;
}

Monomial WeightedRing::variable(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("variable index out of range");
  std::array<Monomial::Exponent, kMaxVariables> e{};
  e[i] = 1;
  return rebuild(e);
}

Monomial WeightedRing::monomial(std::span<const int> exponents) const {
  if (exponents.size() != size()) throw UsageError("exponent vector length does not match the ring");
  std::array<Monomial::Exponent, kMaxVariables> e{};
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 0xffff) throw UsageError("exponent out of range");
    e[i] = static_cast<Monomial::Exponent>(exponents[i]);
  }
  return rebuild(e);
}

Monomial WeightedRing::lcm(const Monomial& a, const Monomial& b) const {
  std::array<Monomial::Exponent, kMaxVariables> e{};
  for (std::size_t i = 0; i < size(); ++i) e[i] = std::max(a[i], b[i]);
  return rebuild(e);
}

Monomial WeightedRing::gcd(const Monomial& a, const Monomial& b) const {
  std::array<Monomial::Exponent, kMaxVariables> e{};
  for (std::size_t i = 0; i < size(); ++i) e[i] = std::min(a[i], b[i]);
  return rebuild(e);
}

std::vector<int> WeightedRing::exponents(const Monomial& m) const {
  std::vector<int> e(size());
  for (std::size_t i = 0; i < size(); ++i) e[i] = m[i];
  return e;
}

KoszulWeights koszul_weights(const WeightedRing& ring, int i) {
  const auto& d = ring.sorted_degrees();
  if (i < 0 || static_cast<std::size_t>(i) > d.size())
    throw std::out_of_range("koszul_weights: index " + std::to_string(i) + " outside [0, " +
                            std::to_string(d.size()) + "]");
  KoszulWeights w;
  for (int k = 0; k < i; ++k) {
    w.lowest += d[static_cast<std::size_t>(k)];
    w.highest += d[d.size() - 1 - static_cast<std::size_t>(k)];
  }
  return w;
}

std::vector<Monomial> homogeneous_component_basis(const WeightedRing& ring, int j) {
  std::vector<Monomial> out;
  if (j < 0) return out;
  std::vector<int> e(ring.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == ring.size()) {
      if (left % ring.degree(i) != 0) return;
      e[i] = left / ring.degree(i);
      out.push_back(ring.monomial(e));
      e[i] = 0;
      return;
    }
    for (int k = 0; k * ring.degree(i) <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k * ring.degree(i));
    }
    e[i] = 0;
  };
  rec(rec, 0, j);
  const auto& ord = ring.order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return out;
}

}  // namespace wps

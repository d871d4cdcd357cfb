#include "wps/hilbert.hpp"

#include <vector>

namespace wps {

long dimension_of_component(const WeightedRing& ring, int e) {
  if (e < 0) return 0;
  std::vector<long> c(static_cast<std::size_t>(e) + 1, 0);
  c[0] = 1;
  for (int d : ring.degrees())
    for (int k = d; k <= e; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - d)];
  return c[static_cast<std::size_t>(e)];
}

namespace {

long count_standard(const WeightedRing& ring, int e, const std::vector<Monomial>& leads) {
  long n = 0;
  for (const auto& m : homogeneous_component_basis(ring, e)) {
    bool standard = true;
    for (const auto& l : leads)
      if (l.divides(m)) {
        standard = false;
        break;
      }
    n += standard;
  }
  return n;
}

}  // namespace

long hilbert_function(const GroebnerBasis& gb, int e) {
  if (e < 0) return 0;
  if (gb.truncated_at() && *gb.truncated_at() < e)
    throw UsageError("hilbert_function: the basis is only complete through degree " + std::to_string(*gb.truncated_at()));
  return count_standard(*gb.ring(), e, gb.leading_monomials());
}

long hilbert_function(const ModuleGroebnerBasis& gb, int e) {
  std::vector<std::vector<Monomial>> leads(gb.twists().size());
  for (const auto& g : gb.elements()) leads[g.front().comp].push_back(g.front().monomial);
  long n = 0;
  for (std::size_t c = 0; c < leads.size(); ++c) n += count_standard(*gb.ring(), e - gb.twists()[c], leads[c]);
  return n;
}

std::map<int, long> k_polynomial(const BettiTable& table) {
  std::map<int, long> k;
  for (const auto& [ij, v] : table.entries()) k[ij.second] += (ij.first % 2 ? -v : v);
  std::erase_if(k, [](const auto& kv) { return kv.second == 0; });
  return k;
}

long hilbert_from_betti(const BettiTable& table, int e) {
  long h = 0;
  for (const auto& [j, c] : k_polynomial(table)) h += c * dimension_of_component(*table.ring(), e - j);
  return h;
}

std::optional<int> codimension(const BettiTable& table) {
  auto k = k_polynomial(table);
  if (k.empty()) return std::nullopt;
  // Dense coefficients of t^{lo} * p(t); divide p by (t - 1) while p(1) = 0.
  int lo = k.begin()->first, hi = k.rbegin()->first;
  std::vector<__int128> p(static_cast<std::size_t>(hi - lo) + 1, 0);
  for (const auto& [j, c] : k) p[static_cast<std::size_t>(j - lo)] = c;
  int mult = 0;
  for (;;) {
    __int128 at_one = 0;
    for (auto c : p) at_one += c;
    if (at_one != 0 || p.size() == 1) break;
    // Synthetic division from the top coefficient down.
    std::vector<__int128> q(p.size() - 1);
    __int128 carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
      carry += p[i];
      q[i - 1] = carry;
    }
    p = std::move(q);
    ++mult;
  }
  return mult;
}

}  // namespace wps

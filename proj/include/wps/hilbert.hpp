#pragma once

#include <map>
#include <optional>

#include "wps/betti.hpp"
#include "wps/groebner.hpp"

namespace wps {

/// dim_k S_e, from the series prod 1/(1 - t^{d_i}); zero for e < 0.
long dimension_of_component(const WeightedRing& ring, int e);

/// dim_k (S/I)_e: standard monomials of degree e for the basis `gb`.
long hilbert_function(const GroebnerBasis& gb, int e);
/// dim_k (S^r/N)_e with N given by a module basis and S^r twisted by gb.twists().
long hilbert_function(const ModuleGroebnerBasis& gb, int e);

/// sum_i (-1)^i beta_{i,j} t^j, keyed by j (zero coefficients dropped).
std::map<int, long> k_polynomial(const BettiTable& table);
/// sum_{i,j} (-1)^i beta_{i,j} dim S_{e-j}.
long hilbert_from_betti(const BettiTable& table, int e);
/// Codimension of the module, read off as the multiplicity of t = 1 as a
/// root of the K-polynomial; empty for the zero module.
std::optional<int> codimension(const BettiTable& table);

}  // namespace wps

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wps/betti.hpp"
#include "wps/ext.hpp"

namespace wps {

/// w^{i} for 1 <= i <= number of variables; empty beyond that, where no
/// bound is imposed.
std::optional<int> upper_koszul_weight(const WeightedRing& ring, int i);

/// A column whose largest twist exceeds its bound.
struct ColumnWitness {
  int column = 0;
  int twist = 0;
  int bound = 0;
  friend bool operator==(const ColumnWitness&, const ColumnWitness&) = default;
};

struct LinearityVerdict {
  bool holds = true;
  std::optional<ColumnWitness> violation;  // first offending column
};

/// beta_{i,j} != 0 implies j < w^{i+1} + a, for 0 <= i <= through_column
/// (all columns when empty). The witness bound is w^{i+1} + a - 1, the
/// largest twist allowed.
LinearityVerdict koszul_a_linear(const BettiTable& table, int a, std::optional<int> through_column = std::nullopt);

struct NpColumn {
  int column = 0;
  std::optional<int> max_twist;  // empty when F_i = 0
  std::optional<int> bound;      // w^{i+1}
  bool ok = true;
};

struct NpReport {
  bool normally_generated = false;
  /// Largest p with the weighted N_p condition; -1 without normal
  /// generation. Capped at the table length.
  int max_sharp_p = -1;
  /// Every column satisfies its bound, so N_p holds for every p.
  bool holds_for_all_p = false;
  std::vector<NpColumn> columns;  // 1..length
  std::optional<ColumnWitness> first_violation;
};

/// Requires a complete minimal resolution of S/I.
bool normally_generated(const FreeResolution& res);

NpReport check_weighted_np(const FreeResolution& res);
/// For bare tables: normal generation is supplied by the caller.
NpReport check_weighted_np(const BettiTable& table, bool normally_generated);

/// max_i (a_i(M) + i) over nonvanishing local cohomology; empty for M = 0.
std::optional<int> weighted_regularity(const FreeResolution& res, const ExtOptions& options = {});

/// Every beta_{j,k} != 0 has k <= r + j + sum (d_i - 1).
LinearityVerdict symonds_row_bound(const BettiTable& table, int r);

/// Largest degree of a minimal generator; empty for the zero ideal.
std::optional<int> max_generator_degree(const RingPtr& ring, const std::vector<Polynomial>& ideal);
/// 2d in the sense of max_{i != j} deg(x_i x_j) = w^2.
int quadric_degree_bound(const WeightedRing& ring);

struct VirtualNpVerdict {
  bool applicable = false;  // dim S_1 > g
  bool holds = false;
  int through_column = -1;  // dim W - g - 2
  std::optional<ColumnWitness> violation;
  std::string note;
};

/// Twists of F_i bounded by w^{i+1} for every i <= dim_w - g - 2.
VirtualNpVerdict virtual_np_check(const FreeResolution& section_module_res, int g, int dim_w);
VirtualNpVerdict virtual_np_check(const BettiResult& section_module_betti, int g, int dim_w);

}  // namespace wps

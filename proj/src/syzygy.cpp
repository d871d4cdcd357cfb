#include "wps/syzygy.hpp"

#include <algorithm>

namespace wps {

std::optional<int> upper_koszul_weight(const WeightedRing& ring, int i) {
  if (i < 0 || static_cast<std::size_t>(i) > ring.size()) return std::nullopt;
  return koszul_weights(ring, i).highest;
}

LinearityVerdict koszul_a_linear(const BettiTable& table, int a, std::optional<int> through_column) {
  LinearityVerdict v;
  const int last = through_column ? std::min(*through_column, table.length()) : table.length();
  for (int i = 0; i <= last; ++i) {
    auto top = table.max_twist(i);
    auto w = upper_koszul_weight(*table.ring(), i + 1);
    if (!top || !w) continue;
    if (*top >= *w + a) {
      v.holds = false;
      v.violation = ColumnWitness{i, *top, *w + a - 1};
      return v;
    }
  }
  return v;
}

bool normally_generated(const FreeResolution& res) {
  if (!res.complete()) throw UsageError("normally_generated: the resolution is truncated");
  if (!res.minimal()) throw UsageError("normally_generated: the resolution is not minimal");
  if (res.module(0).rank() != 1) throw UsageError("normally_generated: expects a cyclic quotient S/I");
  const auto n = res.ring()->size();
  return n >= 2 && res.projective_dimension() + 2 <= n;
}

NpReport check_weighted_np(const BettiTable& table, bool ng) {
  NpReport r;
  r.normally_generated = ng;
  const int len = std::max(table.length(), 0);
  int sharp = len;
  for (int i = 1; i <= len; ++i) {
    NpColumn c;
    c.column = i;
    c.max_twist = table.max_twist(i);
    c.bound = upper_koszul_weight(*table.ring(), i + 1);
    c.ok = !c.max_twist || !c.bound || *c.max_twist <= *c.bound;
    if (!c.ok && !r.first_violation) {
      r.first_violation = ColumnWitness{i, *c.max_twist, *c.bound};
      sharp = i - 1;
    }
    r.columns.push_back(c);
  }
  r.holds_for_all_p = ng && !r.first_violation;
  r.max_sharp_p = ng ? sharp : -1;
  return r;
}

NpReport check_weighted_np(const FreeResolution& res) {
  return check_weighted_np(betti(res), normally_generated(res));
}

std::optional<int> weighted_regularity(const FreeResolution& res, const ExtOptions& options) {
  std::optional<int> reg;
  for (const auto& [i, a] : local_cohomology_top_degrees(res, options)) reg = reg ? std::max(*reg, a + i) : a + i;
  return reg;
}

LinearityVerdict symonds_row_bound(const BettiTable& table, int r) {
  int excess = 0;
  for (int d : table.ring()->degrees()) excess += d - 1;
  LinearityVerdict v;
  for (int i = 0; i <= table.length(); ++i) {
    auto top = table.max_twist(i);
    if (top && *top > r + i + excess) {
      v.holds = false;
      v.violation = ColumnWitness{i, *top, r + i + excess};
      return v;
    }
  }
  return v;
}

std::optional<int> max_generator_degree(const RingPtr& ring, const std::vector<Polynomial>& ideal) {
  std::optional<int> m;
  for (const auto& g : minimal_generators(ring, ideal)) {
    int d = *g.homogeneous_degree();
    m = m ? std::max(*m, d) : d;
  }
  return m;
}

int quadric_degree_bound(const WeightedRing& ring) {
  if (ring.size() < 2) throw UsageError("quadric_degree_bound: needs at least two variables");
  return koszul_weights(ring, 2).highest;
}

VirtualNpVerdict virtual_np_check(const BettiResult& res, int g, int dim_w) {
  VirtualNpVerdict v;
  long linear = 0;
  for (int d : res.table.ring()->degrees()) linear += (d == 1);
  v.through_column = dim_w - g - 2;
  if (linear <= g) {
    v.note = "precondition dim S_1 > g fails (dim S_1 = " + std::to_string(linear) + ", g = " + std::to_string(g) +
             "); check skipped";
    return v;
  }
  v.applicable = true;
  v.holds = true;
  for (int i = 0; i <= v.through_column && static_cast<std::size_t>(i) <= res.length; ++i) {
    auto w = upper_koszul_weight(*res.table.ring(), i + 1);
    auto top = res.table.max_twist(i);
    if (w && top && *top > *w) {
      v.holds = false;
      v.violation = ColumnWitness{i, *top, *w};
      return v;
    }
  }
  const bool covered = res.complete() || (res.truncation == FreeResolution::Truncation::MaxLength &&
                                          res.length >= static_cast<std::size_t>(std::max(v.through_column, 0)));
  if (!covered) {
    v.holds = false;
    v.note = "resolution truncated (" + to_string(res.truncation) + ") before column " +
             std::to_string(v.through_column);
  }
  return v;
}

VirtualNpVerdict virtual_np_check(const FreeResolution& res, int g, int dim_w) {
  if (!res.minimal()) throw UsageError("virtual_np_check: the resolution is not minimal");
  return virtual_np_check(BettiResult{betti(res), res.truncation(), res.length()}, g, dim_w);
}

}  // namespace wps

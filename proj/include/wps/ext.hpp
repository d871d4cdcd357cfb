#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wps/resolution.hpp"

namespace wps {

struct ExtOptions {
  /// Skip the vanishing and last-index shortcuts and always take homology.
  bool force_general = false;
};

/// Minimal presentation of Ext^i(M, S(-|d|)) for M = coker(res.map(1)),
/// taken from the dual complex Hom(F, S(-|d|)). Requires a complete
/// minimal resolution.
GradedFreeMap ext_presentation(const FreeResolution& res, int i, const ExtOptions& options = {});

/// Degrees of a minimal generating set, ascending; empty for the zero module.
std::vector<int> ext_min_degrees(const FreeResolution& res, int i, const ExtOptions& options = {});

/// a_i(M) = -(lowest generator degree of Ext^{n+1-i}(M, S(-|d|))) for each
/// i with nonzero local cohomology.
std::map<int, int> local_cohomology_top_degrees(const FreeResolution& res, const ExtOptions& options = {});

}  // namespace wps

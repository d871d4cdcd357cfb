#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wps/curves.hpp"

namespace wps {

/// A hard-coded input: a series to embed, or a bare Betti table.
struct Demo {
  std::string id;
  std::string summary;
  std::optional<LogCompleteSeries> log_complete;
  std::optional<WeightedSeries> series;
  std::optional<BettiTable> table;  // with normal generation assumed
  int genus = 0;
  std::optional<int> predicted_np;  // for table demos, from the curve data
};

const std::vector<std::string>& demo_ids();
/// Throws UsageError for an unknown id, listing the known ones.
Demo find_demo(const std::string& id);

/// The genus 2 table in P(1^8,2^2), in the text layout of BettiTable::render.
const char* genus_two_table_text();

}  // namespace wps

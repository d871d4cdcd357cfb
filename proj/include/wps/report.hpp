#pragma once

#include <optional>
#include <string>

#include "wps/io.hpp"

namespace wps {

struct SeriesReport {
  WeightedSeries series;
  std::vector<Polynomial> ideal;
  FreeResolution resolution;
  BettiTable table;
  bool nondegenerate = false;
  std::optional<int> max_generator_degree;
  int quadric_bound = 0;
  std::optional<NpReport> np;            // when the resolution is complete
  std::optional<int> regularity;         // likewise
  std::optional<int> predicted_np;       // log complete series with e - deg D >= 1
  std::optional<BettiTable> section_betti;
  std::optional<VirtualNpVerdict> virtual_np;
};

struct ReportOptions {
  ResolveOptions resolve;
  bool section_module = true;
};

/// Embedding ideal, resolution and every checker that applies.
SeriesReport analyze_series(const WeightedSeries& series, const std::optional<LogCompleteSeries>& log_complete,
                            const ReportOptions& options = {});

io::Json report_to_json(const SeriesReport& r);
std::string report_to_text(const SeriesReport& r);

std::string np_report_text(const NpReport& r);

}  // namespace wps

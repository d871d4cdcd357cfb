#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wps/curves.hpp"
#include "wps/syzygy.hpp"

namespace wps::io {

using Json = nlohmann::ordered_json;

/// Parses text as JSON; syntax errors become UsageError naming `what`.
Json parse_json(const std::string& text, const std::string& what);
std::string read_text_file(const std::string& path);

/// {"variables": [{"name": "x0", "degree": 1}, ...]}
Json ring_to_json(const WeightedRing& ring);
RingPtr ring_from_json(const Json& j);

struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

/// {"ring": ..., "generators": ["x0*x2 - x1^3", ...]}
Json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const Json& j);

/// Either a log complete series {"e", "d", "divisor": [{"point": ["0","1"], "mult": 1}]}
/// or explicit sections {"e", "base_variables": ["s","t"], "sections": [{"target": "x0", "poly": "s^2"}]},
/// where each weight is deg(poly) / e.
struct SeriesInput {
  WeightedSeries series;
  std::optional<LogCompleteSeries> log_complete;
};

SeriesInput series_from_json(const Json& j);
Json series_to_json(const LogCompleteSeries& s);
Json series_to_json(const WeightedSeries& s);

/// {"betti": [[i, j, value], ...], "ring": ...}
Json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j);

/// Ring, F_0 twists and each differential as a matrix of polynomial strings.
Json resolution_to_json(const FreeResolution& res);
FreeResolution resolution_from_json(const Json& j);

FreeResolution::Truncation truncation_from_string(const std::string& s);

Json np_report_to_json(const NpReport& r);
Json witness_to_json(const ColumnWitness& w);
Json virtual_np_to_json(const VirtualNpVerdict& v);

}  // namespace wps::io

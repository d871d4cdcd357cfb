#include "wps/report.hpp"

#include <sstream>

namespace wps {

SeriesReport analyze_series(const WeightedSeries& series, const std::optional<LogCompleteSeries>& log_complete,
                            const ReportOptions& options) {
  auto ideal = embedding_ideal(series);
  auto res = resolve(presentation(series.ring, ideal), options.resolve);
  SeriesReport r{series, ideal, res, betti(res), false, std::nullopt, 0, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  r.nondegenerate = nondegenerate(ideal);
  r.max_generator_degree = max_generator_degree(series.ring, ideal);
  r.quadric_bound = quadric_degree_bound(*series.ring);
  if (res.complete()) {
    r.np = check_weighted_np(res);
    r.regularity = weighted_regularity(res);
  }
  if (log_complete) r.predicted_np = predicted_np(log_complete->e, log_complete->divisor.degree(), log_complete->d);
  if (options.section_module && log_complete) {
    auto sm = section_module(series);
    r.section_betti = sm.betti;
    r.virtual_np = virtual_np_check(BettiResult{sm.betti, FreeResolution::Truncation::None,
                                                static_cast<std::size_t>(std::max(sm.betti.length(), 0))},
                                    0, static_cast<int>(series.ring->size()));
  }
  return r;
}

io::Json report_to_json(const SeriesReport& r) {
  io::Json gens = io::Json::array();
  for (const auto& g : r.ideal) gens.push_back(g.to_string());
  io::Json out{{"series", io::series_to_json(r.series)},
               {"ring", io::ring_to_json(*r.series.ring)},
               {"ideal", std::move(gens)},
               {"betti", io::betti_to_json(r.table)["betti"]},
               {"truncation", to_string(r.resolution.truncation())},
               {"nondegenerate", r.nondegenerate}};
  out["max_generator_degree"] = r.max_generator_degree ? io::Json(*r.max_generator_degree) : io::Json(nullptr);
  out["quadric_bound"] = r.quadric_bound;
  if (r.np) {
    auto np = io::np_report_to_json(*r.np);
    for (auto it = np.begin(); it != np.end(); ++it) out[it.key()] = it.value();
  }
  out["regularity"] = r.regularity ? io::Json(*r.regularity) : io::Json(nullptr);
  if (r.predicted_np) out["predicted_np"] = *r.predicted_np;
  if (r.section_betti) out["section_module_betti"] = io::betti_to_json(*r.section_betti)["betti"];
  if (r.virtual_np) out["virtual_np"] = io::virtual_np_to_json(*r.virtual_np);
  return out;
}

std::string np_report_text(const NpReport& r) {
  std::ostringstream os;
  os << "normally generated: " << (r.normally_generated ? "yes" : "no") << "\n";
  if (r.normally_generated) {
    os << "max sharp p: " << r.max_sharp_p;
    if (r.holds_for_all_p) os << " (every column within its bound)";
    os << "\n";
  }
  for (const auto& c : r.columns) {
    os << "  F_" << c.column << ": max twist " << (c.max_twist ? std::to_string(*c.max_twist) : "-") << ", bound "
       << (c.bound ? std::to_string(*c.bound) : "none") << (c.ok ? "" : "  VIOLATED") << "\n";
  }
  return os.str();
}

std::string report_to_text(const SeriesReport& r) {
  std::ostringstream os;
  os << "ring degrees:";
  for (int d : r.series.ring->degrees()) os << " " << d;
  os << "\nsections:";
  for (std::size_t k = 0; k < r.series.sections.size(); ++k) os << " " << r.series.ring->name(k) << "=" << r.series.sections[k].to_string();
  os << "\nideal (" << r.ideal.size() << " minimal generators)";
  os << (r.nondegenerate ? ", nondegenerate" : ", degenerate") << "\n";
  if (r.max_generator_degree)
    os << "max generator degree " << *r.max_generator_degree << " (2d bound " << r.quadric_bound << ")\n";
  os << "\n" << r.table.render();
  if (!r.resolution.complete()) os << "resolution truncated (" << to_string(r.resolution.truncation()) << ")\n";
  if (r.np) os << "\n" << np_report_text(*r.np);
  if (r.predicted_np) os << "predicted N_p: p = " << *r.predicted_np << "\n";
  if (r.regularity) os << "weighted regularity: " << *r.regularity << "\n";
  if (r.section_betti) os << "\nsection module R:\n" << r.section_betti->render();
  if (r.virtual_np) {
    os << "virtual bound through F_" << r.virtual_np->through_column << ": " << (r.virtual_np->holds ? "holds" : "fails");
    if (r.virtual_np->violation)
      os << " (F_" << r.virtual_np->violation->column << " twist " << r.virtual_np->violation->twist << " > "
         << r.virtual_np->violation->bound << ")";
    if (!r.virtual_np->note.empty()) os << " [" << r.virtual_np->note << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace wps

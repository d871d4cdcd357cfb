#include "wps/io.hpp"

#include <fstream>
#include <sstream>

namespace wps::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw UsageError(where + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw UsageError(where + ": missing field '" + key + "'");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw UsageError(where + ": expected an integer, found " + j.dump());
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw UsageError(where + ": expected a string, found " + j.dump());
  return j.get<std::string>();
}

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  try {
    return Rational::parse(as_string(j, where));
  } catch (const UsageError& e) {
    throw UsageError(where + ": " + e.what());
  }
}

Polynomial as_poly(const RingPtr& ring, const Json& j, const std::string& where) {
  try {
    return Polynomial::parse(ring, as_string(j, where));
  } catch (const UsageError& e) {
    throw UsageError(where + ": " + e.what());
  }
}

std::vector<int> as_ints(const Json& j, const std::string& where) {
  if (!j.is_array()) throw UsageError(where + ": expected an array");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_int(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

Json map_to_json(const GradedFreeMap& m) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < m.target().rank(); ++k) {
    Json row = Json::array();
    for (std::size_t l = 0; l < m.source().rank(); ++l) row.push_back(m.entry(k, l).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"source", m.source().twists()}, {"target", m.target().twists()}, {"matrix", std::move(rows)}};
}

GradedFreeMap map_from_json(const RingPtr& ring, const Json& j, const std::string& where) {
  GradedFreeModule source(as_ints(field(j, "source", where), where + ".source"));
  GradedFreeModule target(as_ints(field(j, "target", where), where + ".target"));
  const Json& mat = field(j, "matrix", where);
  if (!mat.is_array() || mat.size() != target.rank())
    throw UsageError(where + ".matrix: expected " + std::to_string(target.rank()) + " rows");
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t k = 0; k < mat.size(); ++k) {
    const std::string rw = where + ".matrix[" + std::to_string(k) + "]";
    if (!mat[k].is_array() || mat[k].size() != source.rank())
      throw UsageError(rw + ": expected " + std::to_string(source.rank()) + " entries");
    std::vector<Polynomial> row;
    for (std::size_t l = 0; l < mat[k].size(); ++l) row.push_back(as_poly(ring, mat[k][l], rw + "[" + std::to_string(l) + "]"));
    rows.push_back(std::move(row));
  }
  try {
    return GradedFreeMap::from_rows(ring, source, target, rows);
  } catch (const UsageError& e) {
    throw UsageError(where + ": " + e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(what + ": invalid JSON (" + e.what() + ")");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json ring_to_json(const WeightedRing& ring) {
  Json vars = Json::array();
  for (const auto& v : ring.variables()) vars.push_back({{"name", v.name}, {"degree", v.degree}});
  return Json{{"variables", std::move(vars)}};
}

RingPtr ring_from_json(const Json& j) {
  const Json& vars = field(j, "variables", "ring");
  if (!vars.is_array() || vars.empty()) throw UsageError("ring.variables: expected a nonempty array");
  std::vector<WeightedRing::Variable> out;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const std::string where = "ring.variables[" + std::to_string(k) + "]";
    out.push_back({as_string(field(vars[k], "name", where), where + ".name"), as_int(field(vars[k], "degree", where), where + ".degree")});
  }
  return WeightedRing::make(std::move(out));
}

Json ideal_to_json(const Ideal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.to_string());
  return Json{{"ring", ring_to_json(*ideal.ring)}, {"generators", std::move(gens)}};
}

Ideal ideal_from_json(const Json& j) {
  Ideal out;
  out.ring = ring_from_json(field(j, "ring", "ideal"));
  const Json& gens = field(j, "generators", "ideal");
  if (!gens.is_array()) throw UsageError("ideal.generators: expected an array");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string where = "ideal generator " + std::to_string(k);
    auto p = as_poly(out.ring, gens[k], where);
    if (!p.is_zero() && !p.homogeneous_degree()) throw UsageError(where + " (" + p.to_string() + ") is not homogeneous");
    out.generators.push_back(std::move(p));
  }
  return out;
}

SeriesInput series_from_json(const Json& j) {
  const int e = as_int(field(j, "e", "series"), "series.e");
  if (j.contains("sections")) {
    if (j.contains("base_variables")) {
      const Json& bv = j["base_variables"];
      if (bv != Json::array({"s", "t"})) throw UsageError("series.base_variables: only [\"s\", \"t\"] is supported");
    }
    const Json& secs = j["sections"];
    if (!secs.is_array()) throw UsageError("series.sections: expected an array");
    std::vector<std::pair<int, Polynomial>> pairs;
    for (std::size_t k = 0; k < secs.size(); ++k) {
      const std::string where = "series.sections[" + std::to_string(k) + "]";
      auto f = as_poly(binary_ring(), field(secs[k], "poly", where), where + ".poly");
      auto deg = f.homogeneous_degree();
      if (f.is_zero() || !deg || e <= 0 || *deg % e != 0)
        throw UsageError(where + ": '" + f.to_string() + "' is not a form of degree a multiple of e = " + std::to_string(e));
      if (secs[k].contains("target")) {
        const std::string want = "x" + std::to_string(k);
        if (as_string(secs[k]["target"], where + ".target") != want)
          throw UsageError(where + ".target: sections are numbered in order, expected '" + want + "'");
      }
      pairs.push_back({*deg / e, std::move(f)});
    }
    return SeriesInput{weighted_series(e, pairs), std::nullopt};
  }
  const int d = as_int(field(j, "d", "series"), "series.d");
  std::vector<DivisorPoint> pts;
  if (j.contains("divisor")) {
    const Json& div = j["divisor"];
    if (!div.is_array()) throw UsageError("series.divisor: expected an array");
    for (std::size_t k = 0; k < div.size(); ++k) {
      const std::string where = "series.divisor[" + std::to_string(k) + "]";
      const Json& pt = field(div[k], "point", where);
      if (!pt.is_array() || pt.size() != 2) throw UsageError(where + ".point: expected [a, b]");
      int mult = div[k].contains("mult") ? as_int(div[k]["mult"], where + ".mult") : 1;
      pts.push_back({{as_rational(pt[0], where + ".point[0]"), as_rational(pt[1], where + ".point[1]")}, mult});
    }
  }
  auto lc = log_complete_series(e, RationalDivisor(std::move(pts)), d);
  return SeriesInput{lc.series(), lc};
}

Json series_to_json(const LogCompleteSeries& s) {
  Json div = Json::array();
  for (const auto& p : s.divisor.points())
    div.push_back({{"point", {p.point.a.to_string(), p.point.b.to_string()}}, {"mult", p.multiplicity}});
  return Json{{"e", s.e}, {"d", s.d}, {"divisor", std::move(div)}};
}

Json series_to_json(const WeightedSeries& s) {
  Json secs = Json::array();
  for (std::size_t k = 0; k < s.sections.size(); ++k)
    secs.push_back({{"target", s.ring->name(k)}, {"poly", s.sections[k].to_string()}});
  return Json{{"e", s.e}, {"base_variables", {"s", "t"}}, {"sections", std::move(secs)}};
}

Json betti_to_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [ij, v] : t.entries()) entries.push_back({ij.first, ij.second, v});
  return Json{{"betti", std::move(entries)}, {"ring", ring_to_json(*t.ring())}};
}

BettiTable betti_from_json(const Json& j) {
  BettiTable t(ring_from_json(field(j, "ring", "betti table")));
  const Json& entries = field(j, "betti", "betti table");
  if (!entries.is_array()) throw UsageError("betti table.betti: expected an array");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string where = "betti entry " + std::to_string(k);
    const Json& e = entries[k];
    if (!e.is_array() || e.size() != 3) throw UsageError(where + ": expected [i, j, value]");
    int i = as_int(e[0], where), jj = as_int(e[1], where);
    if (!e[2].is_number_integer() || e[2].get<long>() < 0) throw UsageError(where + ": value must be a nonnegative integer");
    if (t.value(i, jj)) throw UsageError(where + ": entry (" + std::to_string(i) + ", " + std::to_string(jj) + ") repeated");
    t.set(i, jj, e[2].get<long>());
  }
  return t;
}

Json resolution_to_json(const FreeResolution& res) {
  Json maps = Json::array();
  for (const auto& m : res.maps()) maps.push_back(map_to_json(m));
  return Json{{"ring", ring_to_json(*res.ring())},
              {"f0", res.module(0).twists()},
              {"minimal", res.minimal()},
              {"truncation", to_string(res.truncation())},
              {"maps", std::move(maps)}};
}

FreeResolution resolution_from_json(const Json& j) {
  auto ring = ring_from_json(field(j, "ring", "resolution"));
  GradedFreeModule f0(as_ints(field(j, "f0", "resolution"), "resolution.f0"));
  const Json& maps = field(j, "maps", "resolution");
  if (!maps.is_array()) throw UsageError("resolution.maps: expected an array");
  std::vector<GradedFreeMap> out;
  for (std::size_t k = 0; k < maps.size(); ++k) out.push_back(map_from_json(ring, maps[k], "resolution.maps[" + std::to_string(k) + "]"));
  const Json& minimal = field(j, "minimal", "resolution");
  if (!minimal.is_boolean()) throw UsageError("resolution.minimal: expected true or false");
  auto trunc = truncation_from_string(as_string(field(j, "truncation", "resolution"), "resolution.truncation"));
  try {
    return FreeResolution(ring, f0, std::move(out), minimal.get<bool>(), trunc);
  } catch (const UsageError& e) {
    throw UsageError(std::string("resolution: ") + e.what());
  }
}

FreeResolution::Truncation truncation_from_string(const std::string& s) {
  for (auto t : {FreeResolution::Truncation::None, FreeResolution::Truncation::MaxLength,
                 FreeResolution::Truncation::MaxTwist, FreeResolution::Truncation::TimeBudget})
    if (to_string(t) == s) return t;
  throw UsageError("unknown truncation '" + s + "'");
}

Json witness_to_json(const ColumnWitness& w) { return Json{{"column", w.column}, {"max_twist", w.twist}, {"bound", w.bound}}; }

Json np_report_to_json(const NpReport& r) {
  Json cols = Json::array();
  for (const auto& c : r.columns) {
    Json x{{"column", c.column}};
    x["max_twist"] = c.max_twist ? Json(*c.max_twist) : Json(nullptr);
    x["bound"] = c.bound ? Json(*c.bound) : Json(nullptr);
    x["ok"] = c.ok;
    cols.push_back(std::move(x));
  }
  Json out{{"normally_generated", r.normally_generated},
           {"max_sharp_p", r.max_sharp_p},
           {"holds_for_all_p", r.holds_for_all_p},
           {"witnesses", std::move(cols)}};
  out["first_violation"] = r.first_violation ? witness_to_json(*r.first_violation) : Json(nullptr);
  return out;
}

Json virtual_np_to_json(const VirtualNpVerdict& v) {
  Json out{{"applicable", v.applicable}, {"holds", v.holds}, {"through_column", v.through_column}};
  out["violation"] = v.violation ? witness_to_json(*v.violation) : Json(nullptr);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

}  // namespace wps::io

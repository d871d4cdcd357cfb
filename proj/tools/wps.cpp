// wps: command-line front end for the weighted syzygy engine.
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "wps/demos.hpp"
#include "wps/report.hpp"

using namespace wps;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kTruncated = 3 };

struct Args {
  std::string ring, ideal, series, table, degrees;
  std::optional<int> max_length, max_twist;
  bool json = false;
  bool assume_ng = false;
  std::vector<std::string> expect;
  std::string demo;
};

ResolveOptions resolve_options(const Args& a) {
  ResolveOptions o;
  o.max_length = a.max_length;
  o.max_twist = a.max_twist;
  if (const char* env = std::getenv("WPS_TIME_BUDGET_SECS")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || v < 0) throw UsageError(std::string("WPS_TIME_BUDGET_SECS='") + env + "' is not a nonnegative number");
    o.time_budget_secs = v;
  }
  return o;
}

std::vector<int> parse_degrees(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument("bad");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("--degrees: '" + item + "' is not a positive integer");
    }
  }
  if (out.empty()) throw UsageError("--degrees: empty list");
  return out;
}

io::Json load(const std::string& path) { return io::parse_json(io::read_text_file(path), path); }

// Input for the ideal-based commands: --ideal, or --series (its embedding ideal).
struct IdealSource {
  io::Ideal ideal;
  std::optional<io::SeriesInput> series;
};

IdealSource ideal_source(const Args& a) {
  int given = !a.ideal.empty() + !a.series.empty();
  if (given != 1) throw UsageError("give exactly one of --ideal or --series");
  if (!a.ideal.empty()) {
    auto j = load(a.ideal);
    if (!a.ring.empty()) {
      if (j.contains("ring")) throw UsageError("--ring given but " + a.ideal + " already names a ring");
      j["ring"] = load(a.ring);
    }
    return {io::ideal_from_json(j), std::nullopt};
  }
  auto s = io::series_from_json(load(a.series));
  return {io::Ideal{s.series.ring, embedding_ideal(s.series)}, s};
}

// KEY=VAL checks against the values a command produced.
class Expectations {
 public:
  explicit Expectations(const std::vector<std::string>& raw) {
    for (const auto& e : raw) {
      auto eq = e.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("--expect '" + e + "': expected KEY=VAL");
      want_[e.substr(0, eq)] = e.substr(eq + 1);
    }
  }

  void offer(const std::string& key, const std::string& got) { got_[key] = got; }
  void offer_np(const NpReport& r) {
    offer("normally_generated", r.normally_generated ? "true" : "false");
    offer("max_sharp_p", std::to_string(r.max_sharp_p));
    np_ = r;
  }

  // Failure messages; UsageError for keys the command does not produce.
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : want_) {
      if (k == "np") {
        if (!np_) throw UsageError("--expect np: this command produces no N_p report");
        int p = 0;
        try {
          p = std::stoi(v);
        } catch (const std::logic_error&) {
          throw UsageError("--expect np=" + v + ": not an integer");
        }
        bool ok = np_->normally_generated && (np_->holds_for_all_p || np_->max_sharp_p >= p);
        if (!ok) out.push_back("N_" + v + " fails (max sharp p = " + std::to_string(np_->max_sharp_p) + ")");
        continue;
      }
      auto it = got_.find(k);
      if (it == got_.end()) throw UsageError("--expect " + k + ": this command does not report '" + k + "'");
      if (it->second != v) out.push_back(k + " = " + it->second + ", expected " + v);
    }
    return out;
  }

 private:
  std::map<std::string, std::string> want_, got_;
  std::optional<NpReport> np_;
};

void emit(const Args& a, const io::Json& j, const std::string& text) {
  if (a.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int finish(const Expectations& ex, bool truncated) {
  auto fails = ex.failures();
  for (const auto& f : fails) std::cerr << "wps: check failed: " << f << "\n";
  if (truncated) {
    std::cerr << "wps: resolution truncated by a resource limit\n";
    return kTruncated;
  }
  return fails.empty() ? kOk : kCheckFailed;
}

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

int cmd_embed(const Args& a, Expectations& ex) {
  if (a.series.empty()) throw UsageError("embed needs --series");
  auto s = io::series_from_json(load(a.series));
  io::Ideal ideal{s.series.ring, embedding_ideal(s.series)};
  bool nd = nondegenerate(ideal.generators);
  ex.offer("nondegenerate", nd ? "true" : "false");
  ex.offer("max_generator_degree", opt_text(max_generator_degree(ideal.ring, ideal.generators)));
  auto j = io::ideal_to_json(ideal);
  j["series"] = io::series_to_json(s.series);
  j["nondegenerate"] = nd;
  std::ostringstream os;
  for (std::size_t k = 0; k < s.series.sections.size(); ++k)
    os << s.series.ring->name(k) << " (degree " << s.series.ring->degree(k) << ") = " << s.series.sections[k].to_string() << "\n";
  os << "ideal:\n";
  for (const auto& g : ideal.generators) os << "  " << g.to_string() << "\n";
  os << (nd ? "nondegenerate\n" : "degenerate\n");
  emit(a, j, os.str());
  return finish(ex, false);
}

int cmd_resolve(const Args& a, Expectations& ex, bool table_only) {
  auto src = ideal_source(a);
  auto res = resolve(presentation(src.ideal.ring, src.ideal.generators), resolve_options(a));
  auto t = betti(res);
  ex.offer("projective_dimension", std::to_string(res.projective_dimension()));
  ex.offer("truncation", to_string(res.truncation()));
  io::Json j = table_only ? io::betti_to_json(t) : io::resolution_to_json(res);
  if (table_only) j["truncation"] = to_string(res.truncation());
  std::ostringstream os;
  os << t.render();
  if (!table_only)
    for (std::size_t i = 1; i <= res.length(); ++i) {
      os << "\nd_" << i << ": F_" << i << " -> F_" << (i - 1) << "\n";
      const auto& m = res.map(i);
      for (std::size_t l = 0; l < m.source().rank(); ++l)
        os << "  [" << l << "] (twist " << m.source().twist(l) << ") " << to_string(m.column(l), res.ring()) << "\n";
    }
  if (!res.complete()) os << "truncated: " << to_string(res.truncation()) << "\n";
  emit(a, j, os.str());
  return finish(ex, !res.complete());
}

int cmd_np(const Args& a, Expectations& ex) {
  NpReport r;
  bool truncated = false;
  if (!a.table.empty()) {
    if (!a.ideal.empty() || !a.series.empty()) throw UsageError("give exactly one of --table, --ideal or --series");
    if (a.degrees.empty() && a.ring.empty()) throw UsageError("--table needs --degrees or --ring");
    auto ring = a.degrees.empty() ? io::ring_from_json(load(a.ring)) : WeightedRing::from_degrees(parse_degrees(a.degrees));
    auto text = io::read_text_file(a.table);
    auto first = text.find_first_not_of(" \t\r\n");
    BettiTable t = first != std::string::npos && text[first] == '{' ? io::betti_from_json(io::parse_json(text, a.table))
                                                                 : BettiTable::parse(text, ring);
    if (!a.degrees.empty() && t.ring()->degrees() != ring->degrees())
      throw UsageError("--degrees disagrees with the ring stored in " + a.table);
    r = check_weighted_np(t, a.assume_ng);
  } else {
    auto src = ideal_source(a);
    auto res = resolve(presentation(src.ideal.ring, src.ideal.generators), resolve_options(a));
    if (!res.complete()) {
      truncated = true;
      auto t = betti(res);
      emit(a, io::betti_to_json(t), t.render());
      return finish(ex, true);
    }
    r = a.assume_ng ? check_weighted_np(betti(res), true) : check_weighted_np(res);
  }
  ex.offer_np(r);
  emit(a, io::np_report_to_json(r), np_report_text(r));
  return finish(ex, truncated);
}

int cmd_regularity(const Args& a, Expectations& ex) {
  auto src = ideal_source(a);
  auto res = resolve(presentation(src.ideal.ring, src.ideal.generators), resolve_options(a));
  if (!res.complete()) {
    std::cerr << "wps: regularity needs a complete resolution\n";
    return finish(ex, true);
  }
  auto reg = weighted_regularity(res);
  ex.offer("regularity", opt_text(reg));
  io::Json j{{"regularity", reg ? io::Json(*reg) : io::Json(nullptr)}};
  io::Json a_i = io::Json::object();
  for (const auto& [i, v] : local_cohomology_top_degrees(res)) a_i[std::to_string(i)] = v;
  j["a"] = a_i;
  std::ostringstream os;
  os << "weighted regularity: " << opt_text(reg) << "\n";
  for (const auto& [i, v] : local_cohomology_top_degrees(res)) os << "  a_" << i << " = " << v << "\n";
  emit(a, j, os.str());
  return finish(ex, false);
}

int cmd_section_module(const Args& a, Expectations& ex) {
  if (a.series.empty()) throw UsageError("section-module needs --series");
  auto s = io::series_from_json(load(a.series));
  auto sm = section_module(s.series);
  auto v = virtual_np_check(BettiResult{sm.betti, FreeResolution::Truncation::None,
                                        static_cast<std::size_t>(std::max(sm.betti.length(), 0))},
                            0, static_cast<int>(s.series.ring->size()));
  ex.offer("virtual_np", v.holds ? "true" : "false");
  io::Json gens = io::Json::array();
  for (std::size_t k = 0; k < sm.generators.size(); ++k)
    gens.push_back({{"form", sm.generators[k].to_string()}, {"degree", sm.degrees[k]}});
  io::Json j{{"generators", gens}, {"betti", io::betti_to_json(sm.betti)["betti"]}, {"virtual_np", io::virtual_np_to_json(v)}};
  std::ostringstream os;
  os << "generators:";
  for (std::size_t k = 0; k < sm.generators.size(); ++k) os << " " << sm.generators[k].to_string() << " (degree " << sm.degrees[k] << ")";
  os << "\n" << sm.betti.render();
  os << "virtual bound through F_" << v.through_column << ": " << (v.holds ? "holds" : "fails") << "\n";
  if (v.violation)
    os << "  F_" << v.violation->column << " has twist " << v.violation->twist << " > " << v.violation->bound << "\n";
  if (!v.note.empty()) os << "  " << v.note << "\n";
  emit(a, j, os.str());
  return finish(ex, false);
}

int cmd_demo(const Args& a, Expectations& ex) {
  auto demo = find_demo(a.demo);
  if (demo.table) {
    auto r = check_weighted_np(*demo.table, true);
    ex.offer_np(r);
    io::Json j = io::np_report_to_json(r);
    j["betti"] = io::betti_to_json(*demo.table)["betti"];
    j["ring"] = io::ring_to_json(*demo.table->ring());
    j["demo"] = demo.id;
    std::string text = demo.summary + "\n\n" + demo.table->render() + "\nnormal generation assumed\n" + np_report_text(r);
    if (demo.predicted_np) {
      j["predicted_np"] = *demo.predicted_np;
      text += "predicted N_p: p = " + std::to_string(*demo.predicted_np) + "\n";
    }
    emit(a, j, text);
    return finish(ex, false);
  }
  ReportOptions opt;
  opt.resolve = resolve_options(a);
  auto r = analyze_series(*demo.series, demo.log_complete, opt);
  if (r.np) ex.offer_np(*r.np);
  if (r.regularity) ex.offer("regularity", std::to_string(*r.regularity));
  ex.offer("nondegenerate", r.nondegenerate ? "true" : "false");
  ex.offer("max_generator_degree", opt_text(r.max_generator_degree));
  if (r.virtual_np) ex.offer("virtual_np", r.virtual_np->holds ? "true" : "false");
  auto j = report_to_json(r);
  j["demo"] = demo.id;
  emit(a, j, demo.summary + "\n\n" + report_to_text(r));
  return finish(ex, !r.resolution.complete());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syzygies of curves in weighted projective space"};
  app.require_subcommand(1);
  Args a;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--ring", a.ring, "ring JSON file");
    sub->add_option("--ideal", a.ideal, "ideal JSON file");
    sub->add_option("--series", a.series, "series JSON file");
    sub->add_option("--max-length", a.max_length, "highest homological degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-twist", a.max_twist, "drop generators above this degree");
    sub->add_flag("--json", a.json, "machine-readable output");
    sub->add_option("--expect", a.expect, "KEY=VAL checks; a mismatch exits with status 1");
  };
  auto* embed = app.add_subcommand("embed", "defining ideal of a weighted series");
  auto* res = app.add_subcommand("resolve", "minimal free resolution of S/I");
  auto* bet = app.add_subcommand("betti", "Betti table of S/I");
  auto* np = app.add_subcommand("np", "weighted N_p report");
  auto* reg = app.add_subcommand("regularity", "weighted regularity of S/I");
  auto* sm = app.add_subcommand("section-module", "section ring R as an S-module and the virtual bound");
  auto* demo = app.add_subcommand("demo", "built-in examples");
  for (auto* s : {embed, res, bet, np, reg, sm, demo}) add_common(s);
  np->add_option("--table", a.table, "Betti table file (text layout or JSON)");
  np->add_option("--degrees", a.degrees, "variable degrees for --table, comma separated");
  np->add_flag("--assume-normally-generated", a.assume_ng, "skip the depth test");
  demo->add_option("id", a.demo, "demo id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Expectations ex(a.expect);
    if (*embed) return cmd_embed(a, ex);
    if (*res) return cmd_resolve(a, ex, false);
    if (*bet) return cmd_resolve(a, ex, true);
    if (*np) return cmd_np(a, ex);
    if (*reg) return cmd_regularity(a, ex);
    if (*sm) return cmd_section_module(a, ex);
    if (*demo) return cmd_demo(a, ex);
  } catch (const UsageError& e) {
    std::cerr << "wps: error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::bad_alloc&) {
    std::cerr << "wps: out of memory\n";
    return kTruncated;
  }
  return kInputError;
}

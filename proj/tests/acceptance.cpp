// End-to-end acceptance run: prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "wps/curves.hpp"
#include "wps/ext.hpp"
#include "wps/groebner.hpp"
#include "wps/hilbert.hpp"
#include "wps/syzygy.hpp"

using namespace wps;
using namespace wps::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failed checks; a criterion passes when the list stays empty.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// Every resolution built here goes through this audit; criterion 9 reports it.
struct ResolutionAudit {
  int resolutions = 0;
  int maps = 0;
  std::vector<std::string> failures;

  void audit(const FreeResolution& res, const std::string& label) {
    ++resolutions;
    if (!res.complete()) failures.push_back(label + ": truncated (" + to_string(res.truncation()) + ")");
    if (!res.minimal()) failures.push_back(label + ": not flagged minimal");
    for (std::size_t i = 1; i <= res.length(); ++i) {
      ++maps;
      if (!res.map(i).is_minimal()) failures.push_back(label + ": map " + std::to_string(i) + " has a unit entry");
      if (i < res.length() && !res.map(i).compose(res.map(i + 1)).is_zero())
        failures.push_back(label + ": d" + std::to_string(i) + " d" + std::to_string(i + 1) + " != 0");
    }
  }
};

ResolutionAudit g_audit;

FreeResolution audited_resolve(const GradedFreeMap& start, const std::string& label) {
  auto res = resolve(start);
  g_audit.audit(res, label);
  return res;
}

// A named ideal used by the engine-property checks.
struct Fixture {
  std::string name;
  RingPtr ring;
  std::vector<Polynomial> ideal;
};

std::vector<Fixture> g_fixtures;

std::vector<int> twists(const FreeResolution& res, std::size_t i) {
  auto t = res.module(i).twists();
  std::sort(t.begin(), t.end());
  return t;
}

BettiTable table_from_rows(const RingPtr& ring, const std::vector<std::vector<long>>& rows) {
  BettiTable t(ring);
  t.set(0, 0, 1);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] != 0) t.set(static_cast<int>(c + 1), static_cast<int>(c + 1 + r + 1), rows[r][c]);
  return t;
}

// Shared by the three end-to-end examples: the embedding ideal equals the
// printed determinantal ideal and the resolution reproduces the printed table.
struct CurveRun {
  WeightedSeries series;
  std::vector<Polynomial> ideal;
  FreeResolution res;
  BettiTable table;
};

CurveRun run_curve(int e, int deg_d, int d, const std::string& label) {
  auto lc = log_complete_series(e, RationalDivisor::coordinate_points(deg_d), d);
  auto series = lc.series();
  auto ideal = embedding_ideal(series);
  auto res = audited_resolve(presentation(series.ring, ideal), label);
  auto table = betti(res);
  g_fixtures.push_back({label, series.ring, ideal});
  return {series, ideal, res, table};
}

Outcome criterion_1() {
  Outcome o;
  auto c = run_curve(2, 1, 2, "e=2 D=[0:1] d=2");
  const auto& r = c.series.ring;
  o.check(buchberger(r, c.ideal) == buchberger(r, small_curve(r)), "ideal differs from the minors of [[x0,x1^2,x2],[x1,x2,x3]]");
  o.check(c.res.length() == 2, "length " + std::to_string(c.res.length()) + " != 2");
  o.check(twists(c.res, 0) == std::vector<int>{0}, "F_0 twists " + join(twists(c.res, 0)));
  o.check(twists(c.res, 1) == std::vector<int>{3, 3, 4}, "F_1 twists " + join(twists(c.res, 1)) + " != 3,3,4");
  if (c.res.length() >= 2) o.check(twists(c.res, 2) == std::vector<int>{5, 5}, "F_2 twists " + join(twists(c.res, 2)) + " != 5,5");
  auto np = check_weighted_np(c.res);
  o.check(np.normally_generated, "not normally generated");
  o.check(np.max_sharp_p >= 2, "max_sharp_p " + std::to_string(np.max_sharp_p) + " < 2");
  auto mg = max_generator_degree(r, c.ideal);
  o.check(mg == 4 && quadric_degree_bound(*r) == 4, "max generator degree is not 4 = 2d");
  o.notes.push_back("F: S <- S(-3)^2+S(-4) <- S(-5)^2, max_sharp_p " + std::to_string(np.max_sharp_p));
  return o;
}

Outcome criterion_2() {
  Outcome o;
  auto c = run_curve(8, 1, 2, "e=8 D=[0:1] d=2");
  const auto& r = c.series.ring;
  o.check(buchberger(r, c.ideal) == buchberger(r, octic_curve(r)), "ideal differs from the printed 2x9 minors");
  auto expected = table_from_rows(r, {{21, 70, 105, 84, 35, 6},
                                      {14, 84, 210, 280, 210, 84, 14},
                                      {1, 14, 63, 140, 175, 126, 49, 8}});
  o.check(c.table == expected, "table differs:\n" + c.table.render());
  auto np = check_weighted_np(c.res);
  o.check(np.normally_generated, "not normally generated");
  o.check(np.max_sharp_p >= 8, "max_sharp_p " + std::to_string(np.max_sharp_p) + " < 8");
  o.notes.push_back("max_sharp_p " + std::to_string(np.max_sharp_p));
  return o;
}

Outcome criterion_3() {
  Outcome o;
  auto c = run_curve(5, 2, 2, "e=5 D=[0:1]+[1:0] d=2");
  const auto& r = c.series.ring;
  // The printed matrix lists s^9 t before s^10; here x4 = s^10 and x5 = s^9 t.
  std::vector<Polynomial> top, bot;
  for (const char* f : {"x0", "x1", "x2", "x5", "x4", "x3^2", "x6"}) top.push_back(P(r, f));
  for (const char* f : {"x1", "x2", "x3", "x0^2", "x5", "x6", "x7"}) bot.push_back(P(r, f));
  o.check(buchberger(r, c.ideal) == buchberger(r, two_by_two_minors(top, bot)), "ideal differs from the printed 2x7 minors");
  auto expected = table_from_rows(r, {{3, 2},
                                      {12, 24, 12},
                                      {6, 36, 54, 24},
                                      {0, 8, 36, 48, 20},
                                      {0, 0, 3, 12, 15, 6}});
  o.check(c.table == expected, "table differs:\n" + c.table.render());
  std::vector<long> totals;
  for (int i = 0; i <= c.table.length(); ++i) totals.push_back(c.table.total(i));
  o.check(totals == std::vector<long>{1, 21, 70, 105, 84, 35, 6}, "totals differ");
  o.check(koszul_a_linear(c.table, 1).holds, "not Koszul 1-linear");
  auto reg = weighted_regularity(c.res);
  o.check(reg == 1, "weighted regularity " + (reg ? std::to_string(*reg) : std::string("none")) + " != 1");
  return o;
}

Outcome criterion_4() {
  Outcome o;
  auto ring = ring_of({1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
  auto table = BettiTable::parse(R"(       0  1   2   3   4   5   6  7 8
total: 1 34 152 322 392 286 124 31 4
    0: 1  .   .   .   .   .   .  . .
    1: . 19  58  75  44   5   .  . .
    2: . 14  80 186 220 136  26  2 .
    3: .  1  14  61 128 145  98 23 2
    4: .  .   .   .   .   .   .  6 2
)",
                                 ring);
  auto np = check_weighted_np(table, true);
  o.check(np.max_sharp_p == 6, "max_sharp_p " + std::to_string(np.max_sharp_p) + " != 6");
  o.check(np.first_violation == ColumnWitness{7, 11, 10}, "violation witness is not (column 7, twist 11 > 10)");
  o.check(upper_koszul_weight(*ring, 8) == 10, "w^8 != 10");
  return o;
}

// Everything computed for one grid instance, shared by criteria 5, 7 and 8.
struct GridInstance {
  int e, deg_d, d;
  std::string label;
  WeightedSeries series;
  std::vector<Polynomial> ideal;
  std::optional<FreeResolution> res;
  std::optional<GroebnerBasis> gb;
  std::optional<SectionModule> section;
  std::string error;
};

std::vector<GridInstance> g_grid;
double g_grid_resolve_secs = 0, g_grid_section_secs = 0;

void build_grid() {
  for (int d : {2, 3})
    for (int deg_d = 0; deg_d <= 2; ++deg_d)
      for (int e = 2; e <= 7; ++e) {
        if (e - deg_d < 1) continue;
        GridInstance g{e, deg_d, d, "(e,degD,d)=(" + std::to_string(e) + "," + std::to_string(deg_d) + "," + std::to_string(d) + ")",
                       {}, {}, std::nullopt, std::nullopt, std::nullopt, {}};
        try {
          auto t0 = Clock::now();
          g.series = log_complete_series(e, RationalDivisor::coordinate_points(deg_d), d).series();
          g.ideal = embedding_ideal(g.series);
          g.res = audited_resolve(presentation(g.series.ring, g.ideal), g.label);
          g.gb = buchberger(g.series.ring, g.ideal);
          g_grid_resolve_secs += seconds_since(t0);
          t0 = Clock::now();
          g.section = section_module(g.series);
          g_grid_section_secs += seconds_since(t0);
        } catch (const std::exception& ex) {
          g.error = ex.what();
        }
        g_grid.push_back(std::move(g));
      }
}

Outcome criterion_5() {
  Outcome o;
  for (const auto& g : g_grid) {
    if (!g.res) {
      o.check(false, g.label + ": " + g.error);
      continue;
    }
    const auto& ring = *g.series.ring;
    auto table = betti(*g.res);
    auto np = check_weighted_np(*g.res);
    int predicted = predicted_np(g.e, g.deg_d, g.d);
    o.check(np.normally_generated, g.label + ": not normally generated");
    o.check(np.holds_for_all_p || np.max_sharp_p >= predicted,
            g.label + ": max_sharp_p " + std::to_string(np.max_sharp_p) + " < " + std::to_string(predicted));
    auto reg = weighted_regularity(*g.res);
    o.check(reg == 1, g.label + ": weighted regularity " + (reg ? std::to_string(*reg) : std::string("none")));
    if (g.e - g.deg_d >= 2) {
      auto mg = max_generator_degree(g.series.ring, g.ideal);
      o.check(mg && *mg <= 2 * g.d, g.label + ": generator of degree above 2d");
    }
    auto degrees = ring.degrees();
    std::sort(degrees.begin(), degrees.end());
    for (const auto& [ij, v] : table.entries()) {
      auto [i, j] = ij;
      if (i > static_cast<int>(degrees.size())) {
        o.check(false, g.label + ": column beyond the number of variables");
        continue;
      }
      int lower = 0;
      for (int k = 0; k < i; ++k) lower += degrees[k];
      o.check(j >= lower, g.label + ": beta_" + std::to_string(i) + "," + std::to_string(j) + " below w_i");
    }
  }
  o.notes.push_back(std::to_string(g_grid.size()) + " instances");
  return o;
}

Outcome criterion_6() {
  Outcome o;
  auto binary = binary_ring();
  auto run = [&](const std::string& label, const std::vector<std::pair<int, const char*>>& secs) {
    std::vector<std::pair<int, Polynomial>> pairs;
    for (const auto& [w, f] : secs) pairs.push_back({w, Polynomial::parse(binary, f)});
    auto series = weighted_series(2, pairs);
    auto ideal = embedding_ideal(series);
    auto res = audited_resolve(presentation(series.ring, ideal), label);
    g_fixtures.push_back({label, series.ring, ideal});
    o.check(!normally_generated(res), label + ": reported normally generated");
    o.check(check_weighted_np(res).max_sharp_p == -1, label + ": max_sharp_p != -1");
  };
  run("<s^2,st,st^3,t^4,t^6>", {{1, "s^2"}, {1, "s*t"}, {2, "s*t^3"}, {2, "t^4"}, {3, "t^6"}});
  run("<s^2,st,st^5,t^6>", {{1, "s^2"}, {1, "s*t"}, {3, "s*t^5"}, {3, "t^6"}});
  return o;
}

Outcome criterion_7() {
  Outcome o;
  for (const auto& g : g_grid) {
    if (!g.section) {
      o.check(false, g.label + ": " + g.error);
      continue;
    }
    BettiResult br{g.section->betti, FreeResolution::Truncation::None,
                   static_cast<std::size_t>(std::max(g.section->betti.length(), 0))};
    auto v = virtual_np_check(br, 0, static_cast<int>(g.series.ring->size()));
    o.check(v.applicable, g.label + ": check not applicable");
    std::string why = v.violation ? " (F_" + std::to_string(v.violation->column) + " twist " +
                                        std::to_string(v.violation->twist) + " > " + std::to_string(v.violation->bound) + ")"
                                  : "";
    o.check(v.holds, g.label + ": bound fails" + why);
  }
  return o;
}

Outcome criterion_8() {
  Outcome o;
  int checked = 0;
  for (const auto& g : g_grid) {
    if (!g.gb) {
      o.check(false, g.label + ": " + g.error);
      continue;
    }
    for (int i = 1; i <= 4 * g.d; ++i) {
      long got = q_module_dimension(g.series, *g.gb, i);
      long want = static_cast<long>(i % g.d) * g.deg_d;
      ++checked;
      o.check(got == want, g.label + ": dim Q_" + std::to_string(i) + " = " + std::to_string(got) + " != " + std::to_string(want));
    }
    for (int q = 5; q <= 8; ++q) {
      ++checked;
      o.check(q_module_dimension(g.series, *g.gb, q * g.d) == 0, g.label + ": dim Q_" + std::to_string(q * g.d) + " != 0");
    }
  }
  o.notes.push_back(std::to_string(checked) + " graded pieces");
  return o;
}

bool s_pairs_reduce(const GroebnerBasis& gb) {
  const auto& el = gb.elements();
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = a + 1; b < el.size(); ++b)
      if (!gb.normal_form(s_polynomial(el[a], el[b])).is_zero()) return false;
  return true;
}

Outcome criterion_9() {
  Outcome o;
  {
    auto r = ring_of({1, 1, 2, 2});
    g_fixtures.push_back({"small curve minors", r, small_curve(r)});
    auto r8 = ring_of({1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
    g_fixtures.push_back({"octic minors", r8, octic_curve(r8)});
  }
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> scale(-7, 7);
  for (const auto& f : g_fixtures) {
    auto reference = buchberger(f.ring, f.ideal);
    o.check(s_pairs_reduce(reference), f.name + ": an S-pair does not reduce to zero");
    for (int k = 0; k < 20; ++k) {
      auto gens = f.ideal;
      std::shuffle(gens.begin(), gens.end(), rng);
      for (auto& p : gens) {
        int c = 0;
        while (c == 0) c = scale(rng);
        p = Rational(c) * p;
      }
      o.check(buchberger(f.ring, gens) == reference, f.name + ": reduced basis changed under shuffle " + std::to_string(k));
    }
  }
  o.notes.push_back(std::to_string(g_fixtures.size()) + " fixtures x 20 shuffles");

  auto hf_check = [&](const std::string& name, const GroebnerBasis& gb, const BettiTable& table) {
    for (int e = 0; e <= 12; ++e)
      o.check(hilbert_function(gb, e) == hilbert_from_betti(table, e), name + ": Hilbert function mismatch in degree " + std::to_string(e));
  };
  for (const auto& f : g_fixtures) {
    auto res = audited_resolve(presentation(f.ring, f.ideal), f.name);
    hf_check(f.name, buchberger(f.ring, f.ideal), betti(res));
  }
  for (const auto& g : g_grid)
    if (g.res && g.gb) hf_check(g.label, *g.gb, betti(*g.res));

  // Canonical module of the e = 2 curve: Ext^2(S/I, S(-6)), resolved on its own.
  auto r = ring_of({1, 1, 2, 2});
  auto res = audited_resolve(presentation(r, small_curve(r)), "duality: S/I");
  auto omega = audited_resolve(ext_presentation(res, 2), "duality: omega");
  auto t = betti(res), tw = betti(omega);
  BettiTable mirrored(r);
  for (const auto& [ij, v] : t.entries()) mirrored.set(2 - ij.first, 6 - ij.second, v);
  o.check(mirrored == tw, "omega table differs from the mirrored table:\n" + tw.render());

  for (const auto& f : g_audit.failures) o.check(false, f);
  o.notes.push_back(std::to_string(g_audit.resolutions) + " resolutions, " + std::to_string(g_audit.maps) +
                    " maps: d^2 = 0 and minimal");
  return o;
}

struct Criterion {
  int number;
  std::string title;
  double limit_secs;
  std::function<Outcome()> run;
  std::function<double()> extra_secs;  // shared grid time charged to this criterion
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "e=2 curve end to end", 5, criterion_1, nullptr},
      {2, "e=8 curve table", 30 * 60, criterion_2, nullptr},
      {3, "e=5, deg D=2 table, 1-linear, regularity 1", 10 * 60, criterion_3, nullptr},
      {4, "genus 2 table: N_6 but not N_7", 1, criterion_4, nullptr},
      {5, "g=0 grid: normal generation, N_p, regularity, 2d, w_i", 3600, criterion_5, [] { return g_grid_resolve_secs; }},
      {6, "negative controls not normally generated", 60, criterion_6, nullptr},
      {7, "grid: virtual bound on the section module", 3600, criterion_7, [] { return g_grid_section_secs; }},
      {8, "grid: Q-module dimensions", 3600, criterion_8, nullptr},
      {9, "engine properties", 3600, criterion_9, nullptr},
  };
  bool grid_built = false;
  int failed = 0;
  for (const auto& c : criteria) {
    if (c.number == 5 && !grid_built) {
      build_grid();
      grid_built = true;
    }
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.failures.push_back(std::string("exception: ") + ex.what());
    }
    double secs = seconds_since(t0) + (c.extra_secs ? c.extra_secs() : 0);
    if (secs > c.limit_secs) o.failures.push_back("runtime " + std::to_string(secs) + " s over the limit");
    bool ok = o.failures.empty();
    failed += ok ? 0 : 1;
    std::ostringstream line;
    line << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title;
    char buf[32];
    std::snprintf(buf, sizeof buf, " [%.2f s]", secs);
    line << buf;
    for (const auto& n : o.notes) line << "; " << n;
    std::printf("%s\n", line.str().c_str());
    for (std::size_t k = 0; k < o.failures.size() && k < 20; ++k) std::printf("    %s\n", o.failures[k].c_str());
    if (o.failures.size() > 20) std::printf("    ... %zu more\n", o.failures.size() - 20);
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria passed\n", failed ? "FAIL" : "PASS", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed ? 1 : 0;
}

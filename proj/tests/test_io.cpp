#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "wps/demos.hpp"
#include "wps/io.hpp"
#include "wps/report.hpp"

using namespace wps;
using namespace wps::testing;

namespace {

std::string fixture(const std::string& name) { return std::string(WPS_FIXTURES) + "/" + name; }

io::Json reparse(const io::Json& j) { return io::parse_json(j.dump(), "round trip"); }

void check_throws_naming(const std::function<void()>& f, const std::string& needle) {
  try {
    f();
    FAIL("no exception");
  } catch (const UsageError& e) {
    INFO(e.what());
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("ring and ideal round trip") {
  auto r = WeightedRing::make({{"a", 1}, {"b", 3}, {"c", 2}});
  auto back = io::ring_from_json(reparse(io::ring_to_json(*r)));
  CHECK(back->variables() == r->variables());

  auto j = io::parse_json(io::read_text_file(fixture("small-curve.ideal.json")), "fixture");
  auto ideal = io::ideal_from_json(j);
  CHECK(ideal.generators.size() == 3);
  CHECK(ideal.ring->degrees() == std::vector<int>{1, 1, 2, 2});
  auto again = io::ideal_from_json(reparse(io::ideal_to_json(ideal)));
  CHECK(again.generators == ideal.generators);
  CHECK(buchberger(ideal.ring, ideal.generators) == buchberger(ideal.ring, small_curve(ideal.ring)));
}

TEST_CASE("series descriptions") {
  auto lc = io::series_from_json(io::parse_json(io::read_text_file(fixture("example-2.1.series.json")), "fixture"));
  REQUIRE(lc.log_complete);
  CHECK(lc.series.sections.size() == 4);
  auto back = io::series_from_json(reparse(io::series_to_json(*lc.log_complete)));
  CHECK(back.series.sections == lc.series.sections);
  auto expl = io::series_from_json(reparse(io::series_to_json(lc.series)));
  CHECK_FALSE(expl.log_complete);
  CHECK(expl.series.sections == lc.series.sections);
  CHECK(expl.series.ring->degrees() == lc.series.ring->degrees());

  auto remark = io::series_from_json(io::parse_json(io::read_text_file(fixture("remark-2.5-a.series.json")), "fixture"));
  CHECK(remark.series.ring->degrees() == std::vector<int>{1, 1, 2, 2, 3});

  auto frac = io::series_from_json(io::parse_json(R"({"e": 3, "d": 2, "divisor": [{"point": ["1/2", "-3"], "mult": 2}]})", "x"));
  CHECK(frac.series.ring->degrees() == std::vector<int>{1, 1, 2, 2, 2, 2});
  auto frac_back = io::series_from_json(reparse(io::series_to_json(*frac.log_complete)));
  CHECK(frac_back.series.sections == frac.series.sections);
}

TEST_CASE("Betti table and resolution round trip") {
  auto r = ring_of({1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
  auto res = resolve(presentation(r, octic_curve(r)));
  auto t = betti(res);
  CHECK(io::betti_from_json(reparse(io::betti_to_json(t))) == t);
  auto back = io::resolution_from_json(reparse(io::resolution_to_json(res)));
  CHECK(back.length() == res.length());
  CHECK(back.complete());
  for (std::size_t i = 1; i <= res.length(); ++i) CHECK(back.map(i) == res.map(i));
  CHECK(betti(back) == t);

  ResolveOptions opt;
  opt.max_length = 2;
  auto cut = resolve(presentation(r, octic_curve(r)), opt);
  auto cut_back = io::resolution_from_json(reparse(io::resolution_to_json(cut)));
  CHECK(cut_back.truncation() == FreeResolution::Truncation::MaxLength);
  CHECK(io::truncation_from_string("time-budget") == FreeResolution::Truncation::TimeBudget);
  CHECK_THROWS_AS(io::truncation_from_string("soon"), UsageError);
}

TEST_CASE("input errors name the offending element") {
  check_throws_naming([] { io::parse_json("{", "f.json"); }, "f.json");
  check_throws_naming([] { io::read_text_file("/nonexistent/x"); }, "/nonexistent/x");
  check_throws_naming([] { io::ring_from_json(io::parse_json(R"({"variables": [{"name": "x", "degree": "1"}]})", "x")); },
                      "ring.variables[0].degree");
  auto ring = R"({"variables": [{"name": "x0", "degree": 1}, {"name": "x1", "degree": 2}]})";
  check_throws_naming([&] { io::ideal_from_json(io::parse_json(std::string(R"({"ring": )") + ring + R"(, "generators": ["x0", "x0 + x1"]})", "x")); },
                      "ideal generator 1");
  check_throws_naming([&] { io::ideal_from_json(io::parse_json(std::string(R"({"ring": )") + ring + R"(, "generators": ["x0 +* x1"]})", "x")); },
                      "ideal generator 0");
  check_throws_naming([] { io::series_from_json(io::parse_json(R"({"e": 2, "sections": [{"poly": "s^3"}]})", "x")); },
                      "series.sections[0]");
  check_throws_naming([] { io::series_from_json(io::parse_json(R"({"e": 2, "d": 2, "divisor": [{"point": ["0", "0"]}]})", "x")); },
                      "[0:0]");
  check_throws_naming([] { io::series_from_json(io::parse_json(R"({"e": 2, "d": 2, "divisor": [{"point": ["0"]}]})", "x")); },
                      "series.divisor[0].point");
  check_throws_naming([] { io::betti_from_json(io::parse_json(R"({"ring": {"variables": [{"name": "x", "degree": 1}]}, "betti": [[0, 0, -1]]})", "x")); },
                      "betti entry 0");
}

TEST_CASE("demo registry") {
  for (const auto& id : demo_ids()) {
    auto d = find_demo(id);
    CHECK(d.id == id);
    CHECK((d.series.has_value() != d.table.has_value()));
  }
  CHECK_THROWS_AS(find_demo("example-9.9"), UsageError);
  auto g2 = find_demo("example-2.3");
  CHECK(g2.table->render() == io::read_text_file(fixture("example-2.3.betti")));
  CHECK(g2.predicted_np == 6);
}

TEST_CASE("series report") {
  auto d = find_demo("example-2.1");
  auto r = analyze_series(*d.series, d.log_complete);
  auto j = reparse(report_to_json(r));
  CHECK(j["betti"] == io::Json::parse("[[0,0,1],[1,3,2],[1,4,1],[2,5,2]]"));
  CHECK(j["normally_generated"] == true);
  CHECK(j["max_sharp_p"] == 2);
  CHECK(j["regularity"] == 1);
  CHECK(j["virtual_np"]["holds"] == true);
  CHECK(report_to_text(r).find("weighted regularity: 1") != std::string::npos);
}

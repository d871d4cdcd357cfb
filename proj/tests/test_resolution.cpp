#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "support.hpp"
#include "wps/betti.hpp"
#include "wps/ext.hpp"
#include "wps/hilbert.hpp"

using namespace wps;
using namespace wps::testing;

namespace {

void check_complex(const FreeResolution& res) {
  for (std::size_t i = 2; i <= res.length(); ++i) CHECK(res.map(i - 1).compose(res.map(i)).is_zero());
  if (res.minimal())
    for (const auto& m : res.maps()) CHECK(m.is_minimal());
}

BettiTable table_from(const RingPtr& r, std::initializer_list<std::tuple<int, int, long>> entries) {
  BettiTable t(r);
  for (auto [i, j, v] : entries) t.set(i, j, v);
  return t;
}

// Expected table of the octic curve, row by row.
BettiTable octic_table(const RingPtr& r) {
  BettiTable t(r);
  t.set(0, 0, 1);
  const std::vector<std::vector<long>> rows = {{21, 70, 105, 84, 35, 6},
                                               {14, 84, 210, 280, 210, 84, 14},
                                               {1, 14, 63, 140, 175, 126, 49, 8}};
  for (int row = 1; row <= 3; ++row)
    for (std::size_t k = 0; k < rows[static_cast<std::size_t>(row - 1)].size(); ++k) {
      int i = static_cast<int>(k) + 1;
      t.set(i, i + row, rows[static_cast<std::size_t>(row - 1)][k]);
    }
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("presentation of the small curve ideal") {
  auto r = ring_of({1, 1, 2, 2});
  auto pres = presentation(r, small_curve(r));
  auto tw = pres.source().twists();
  std::sort(tw.begin(), tw.end());
  CHECK(tw == std::vector<int>{3, 3, 4});
  CHECK(pres.target().twists() == std::vector<int>{0});
  CHECK(presentation(r, {}).source().rank() == 0);
}

TEST_CASE("resolution of the small curve") {
  auto r = ring_of({1, 1, 2, 2});
  auto res = resolve(presentation(r, small_curve(r)));
  check_complex(res);
  CHECK(res.complete());
  CHECK(res.projective_dimension() == 2);
  CHECK(betti(res) == table_from(r, {{0, 0, 1}, {1, 3, 2}, {1, 4, 1}, {2, 5, 2}}));
  CHECK(betti(res).render() ==
        "       0 1 2\n"
        "total: 1 3 2\n"
        "    0: 1 . .\n"
        "    1: . . .\n"
        "    2: . 2 .\n"
        "    3: . 1 2\n");
}

TEST_CASE("Koszul complex for degrees 1 and 2") {
  auto r = ring_of({1, 2});
  auto res = resolve(presentation(r, {P(r, "x0"), P(r, "x1")}));
  check_complex(res);
  CHECK(betti(res) == table_from(r, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}, {2, 3, 1}}));
}

TEST_CASE("resolution of S and of the zero ideal") {
  auto r = ring_of({1, 1, 3});
  auto res = resolve(presentation(r, {}));
  CHECK(res.complete());
  CHECK(betti(res) == table_from(r, {{0, 0, 1}}));
}

TEST_CASE("octic curve in P(1^8,2^2) has the expected table") {
  auto r = ring_of({1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
  auto gens = octic_curve(r);
  FrameStats stats;
  auto res = resolve(presentation(r, gens), {}, &stats);
  check_complex(res);
  CHECK(res.complete());
  auto t = betti(res);
  CHECK(t == octic_table(r));
  CHECK(t.value(8, 11) == 8);
  for (const auto& [ij, v] : t.entries()) CHECK(ij.second >= koszul_weights(*r, ij.first).lowest);

  SUBCASE("shuffled generators give the same table") {
    std::mt19937 rng(5);
    for (int k = 0; k < 3; ++k) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(betti(resolve(presentation(r, gens))) == octic_table(r));
    }
  }
  SUBCASE("Hilbert function from the basis and from the table agree") {
    auto gb = buchberger(r, gens);
    for (int e = 0; e <= 12; ++e) CHECK(hilbert_function(gb, e) == hilbert_from_betti(t, e));
  }
  SUBCASE("threads do not change the answer") {
    ResolveOptions opt;
    opt.threads = 3;
    CHECK(betti(resolve(presentation(r, gens), opt)) == t);
  }
}

TEST_CASE("truncation flags") {
  auto r = ring_of({1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
  auto pres = presentation(r, octic_curve(r));
  auto full = betti(resolve(pres));

  ResolveOptions by_length;
  by_length.max_length = 3;
  auto a = resolve(pres, by_length);
  CHECK(a.truncation() == FreeResolution::Truncation::MaxLength);
  CHECK(a.length() == 3);
  check_complex(a);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 12; ++j) CHECK(betti(a).value(i, j) == full.value(i, j));

  ResolveOptions by_twist;
  by_twist.max_twist = 6;
  auto b = resolve(pres, by_twist);
  CHECK(b.truncation() == FreeResolution::Truncation::MaxTwist);
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 12; ++j) CHECK(betti(b).value(i, j) == (j <= 6 ? full.value(i, j) : 0));

  ResolveOptions by_time;
  by_time.time_budget_secs = 0.0;
  auto c = resolve(pres, by_time);
  CHECK(c.truncation() == FreeResolution::Truncation::TimeBudget);
  CHECK_FALSE(c.complete());
}

TEST_CASE("minimize removes a padded identity block") {
  auto r = ring_of({1, 1, 2, 2});
  auto res = resolve(presentation(r, small_curve(r)));
  const auto& d1 = res.map(1);
  const auto& d2 = res.map(2);
  // F_1 gains S(-4) mapping to x0 * (first generator); F_2 gains S(-4)
  // mapping to the matching unit syzygy, which is a unit entry.
  auto f1 = d1.source().twists();
  f1.push_back(4);
  auto cols1 = d1.columns();
  cols1.push_back(multiply(d1.column(0), P(r, "x0"), ModuleOrder(r->order())));
  auto f2 = d2.source().twists();
  f2.push_back(4);
  auto cols2 = d2.columns();
  ModVec pad{{r->one(), static_cast<std::uint32_t>(f1.size() - 1), 1}};
  pad = add_scaled(pad, -1, r->monomial(std::vector<int>{1, 0, 0, 0}), {{r->one(), 0, 1}}, ModuleOrder(r->order()));
  cols2.push_back(pad);
  GradedFreeMap p1(r, GradedFreeModule(f1), d1.target(), cols1);
  GradedFreeMap p2(r, GradedFreeModule(f2), GradedFreeModule(f1), cols2);
  FreeResolution padded(r, d1.target(), {p1, p2}, false, FreeResolution::Truncation::None);
  check_complex(padded);
  CHECK_THROWS_AS(betti(padded), UsageError);
  auto m = minimize(padded);
  check_complex(m);
  CHECK(betti(m) == betti(res));
  CHECK(betti(minimize(res)) == betti(res));
}

TEST_CASE("map construction validates degrees") {
  auto r = ring_of({1, 2});
  CHECK_THROWS_AS(GradedFreeMap(r, GradedFreeModule({2}), GradedFreeModule({0}), {embed(P(r, "x0"), 0)}), UsageError);
  CHECK_THROWS_AS(GradedFreeMap(r, GradedFreeModule({1}), GradedFreeModule({0}), {embed(P(r, "x0"), 1)}), UsageError);
  CHECK_THROWS_AS(GradedFreeMap(r, GradedFreeModule({1, 1}), GradedFreeModule({0}), {embed(P(r, "x0"), 0)}), UsageError);
  auto m = GradedFreeMap::from_rows(r, GradedFreeModule({1, 2}), GradedFreeModule({0}), {{P(r, "x0"), P(r, "x1")}});
  CHECK(m.entry(0, 1) == P(r, "x1"));
  auto d = m.dual(3);
  CHECK(d.source().twists() == std::vector<int>{3});
  CHECK(d.target().twists() == std::vector<int>{2, 1});
  CHECK(d.entry(1, 0) == P(r, "x1"));
}

TEST_CASE("Ext of S and of the small curve") {
  auto r = ring_of({1, 1, 2, 2});
  auto s = resolve(presentation(r, {}));
  for (bool general : {false, true}) {
    ExtOptions opt{general};
    CHECK(ext_min_degrees(s, 0, opt) == std::vector<int>{6});
    for (int i = 1; i <= 4; ++i) CHECK(ext_min_degrees(s, i, opt).empty());
  }
  auto res = resolve(presentation(r, small_curve(r)));
  for (bool general : {false, true}) {
    ExtOptions opt{general};
    for (int i = 0; i <= 4; ++i) {
      auto degs = ext_min_degrees(res, i, opt);
      if (i == 2)
        CHECK(degs == std::vector<int>{1, 1});
      else
        CHECK(degs.empty());
    }
  }
  ResolveOptions shortr;
  shortr.max_length = 1;
  CHECK_THROWS_AS(ext_min_degrees(resolve(presentation(r, small_curve(r)), shortr), 2), UsageError);
}

TEST_CASE("duality between S/I and its canonical module") {
  auto r = ring_of({1, 1, 2, 2});
  auto res = resolve(presentation(r, small_curve(r)));
  auto t = betti(res);
  for (bool general : {false, true}) {
    auto omega = resolve(ext_presentation(res, 2, ExtOptions{general}));
    check_complex(omega);
    auto w = betti(omega);
    long count = 0;
    for (const auto& [ij, v] : t.entries()) {
      CHECK(w.value(2 - ij.first, 6 - ij.second) == v);
      count += v;
    }
    long wcount = 0;
    for (const auto& [ij, v] : w.entries()) wcount += v;
    CHECK(wcount == count);
  }
}

TEST_CASE("codimension from the K-polynomial") {
  auto r = ring_of({1, 1, 2, 2});
  CHECK(codimension(betti(resolve(presentation(r, small_curve(r))))) == 2);
  CHECK(codimension(betti(resolve(presentation(r, {})))) == 0);
  CHECK(codimension(betti(resolve(presentation(r, {P(r, "x0"), P(r, "x1"), P(r, "x2"), P(r, "x3")})))) == 4);
  CHECK(hilbert_from_betti(betti(resolve(presentation(r, {}))), 4) == dimension_of_component(*r, 4));
}

TEST_CASE("Betti table text round trip and the genus 2 fixture") {
  auto r = ring_of({1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
  auto text = read_file(std::string(WPS_FIXTURES) + "/example-2.3.betti");
  auto t = BettiTable::parse(text, r);
  CHECK(t.value(8, 11) == 2);
  CHECK(t.value(8, 12) == 2);
  CHECK(t.value(7, 11) == 6);
  CHECK(t.total(1) == 34);
  CHECK(t.row_range() == std::pair{0, 4});
  CHECK(BettiTable::parse(t.render(), r) == t);
  CHECK(BettiTable::parse(t.render(false), r) == t);
  auto lines = t.render();
  CHECK(lines.find("    4: .  .   .   .   .   .   .  6 2") != std::string::npos);
  CHECK_THROWS_AS(BettiTable::parse("0 1\n0: 1\n", r), UsageError);
  CHECK_THROWS_AS(BettiTable::parse("0 1\ntotal: 1 5\n0: 1 .\n1: . 3\n", r), UsageError);
  CHECK_THROWS_AS(BettiTable::parse("0 1\n0: 1 x\n", r), UsageError);
  CHECK_THROWS_AS(BettiTable::parse("", r), UsageError);
}

TEST_CASE("Betti numbers read off the frame agree with the minimized resolution") {
  auto small = ring_of({1, 1, 2, 2});
  auto octic = ring_of({1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
  std::vector<GradedFreeMap> inputs{presentation(small, small_curve(small)), presentation(octic, octic_curve(octic)),
                                    presentation(small, {}), presentation(small, {P(small, "x0"), P(small, "x2")})};
  // A module with two generators: S(0) + S(-1) modulo x2 e_0 - x0 e_1 and x3 e_0.
  inputs.push_back(presentation(small, GradedFreeModule({0, 1}),
                                {{{small->monomial(std::vector<int>{0, 0, 1, 0}), 0, 1},
                                  {small->monomial(std::vector<int>{1, 0, 0, 0}), 1, -1}},
                                 {{small->monomial(std::vector<int>{0, 0, 0, 1}), 0, 1}}}));
  for (const auto& pres : inputs) {
    auto full = resolve(pres);
    auto fast = resolve_betti(pres);
    CHECK(fast.table == betti(full));
    CHECK(fast.complete());
    CHECK(fast.length == full.length());
    for (int len = 0; len <= 3; ++len) {
      ResolveOptions opt;
      opt.max_length = len;
      auto a = resolve(pres, opt);
      auto b = resolve_betti(pres, opt);
      CHECK(b.table == betti(a));
      CHECK(b.truncation == a.truncation());
      CHECK(b.length == a.length());
    }
    ResolveOptions twist;
    twist.max_twist = 5;
    CHECK(resolve_betti(pres, twist).table == betti(resolve(pres, twist)));
  }
}

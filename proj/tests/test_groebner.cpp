#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "support.hpp"
#include "wps/groebner.hpp"
#include "wps/linalg.hpp"

using namespace wps;
using namespace wps::testing;

namespace {

// Buchberger's criterion and reducedness checked from the definitions.
void check_reduced_gb(const GroebnerBasis& gb) {
  const auto& g = gb.elements();
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g[i].leading_term().coefficient.is_one());
    for (std::size_t j = i + 1; j < g.size(); ++j) CHECK(gb.normal_form(s_polynomial(g[i], g[j])).is_zero());
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[j].terms()) CHECK_FALSE(g[i].leading_term().monomial.divides(t.monomial));
    }
  }
}

// Random invertible recombination inside each degree, then a shuffle.
std::vector<Polynomial> scramble(const std::vector<Polynomial>& gens, std::mt19937& rng) {
  std::vector<Polynomial> out(gens);
  std::uniform_int_distribution<int> c(-3, 3);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j)
      if (i != j && out[i].homogeneous_degree() == gens[j].homogeneous_degree() && rng() % 3 == 0)
        out[i] = out[i] + gens[j] * Polynomial::constant(out[i].ring(), c(rng));
  std::shuffle(out.begin(), out.end(), rng);
  for (auto& f : out) f = f * Polynomial::constant(f.ring(), 1 + static_cast<long long>(rng() % 4));
  return out;
}

// dim of span{phi(m) : deg m = e}, an independent oracle for dim (S/ker phi)_e.
std::size_t image_dimension(const RingPtr& src, const std::vector<Polynomial>& images, int e) {
  std::vector<Polynomial> imgs;
  for (const auto& m : homogeneous_component_basis(*src, e)) {
    Polynomial p = Polynomial::constant(images.front().ring(), 1);
    for (std::size_t v = 0; v < src->size(); ++v) p = p * images[v].pow(m[v]);
    imgs.push_back(p);
  }
  std::vector<Monomial> cols;
  for (const auto& p : imgs)
    for (const auto& t : p.terms())
      if (std::find(cols.begin(), cols.end(), t.monomial) == cols.end()) cols.push_back(t.monomial);
  DenseMatrix m;
  for (const auto& p : imgs) {
    std::vector<Rational> row(cols.size());
    for (const auto& t : p.terms())
      row[static_cast<std::size_t>(std::find(cols.begin(), cols.end(), t.monomial) - cols.begin())] = t.coefficient;
    m.push_back(row);
  }
  return rank(m, cols.size());
}

}  // namespace

TEST_CASE("reduced basis of the small curve ideal satisfies Buchberger's criterion") {
  auto r = ring_of({1, 1, 2, 2});
  auto gb = buchberger(r, small_curve(r));
  CHECK(gb.reduced());
  check_reduced_gb(gb);
  for (const auto& f : small_curve(r)) CHECK(gb.contains(f));
  CHECK(gb.contains(small_curve(r)[0] * P(r, "x3^2 - x0*x1") + small_curve(r)[2] * P(r, "x2")));
  CHECK_FALSE(gb.contains(P(r, "x0*x2")));
}

TEST_CASE("reduced basis is unique under 20 scrambles of the generators") {
  std::mt19937 rng(2024);
  auto small = ring_of({1, 1, 2, 2});
  auto octic = ring_of({1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
  for (auto [r, gens] : {std::pair{small, small_curve(small)}, std::pair{octic, octic_curve(octic)}}) {
    auto reference = buchberger(r, gens);
    check_reduced_gb(reference);
    for (int k = 0; k < 20; ++k) CHECK(buchberger(r, scramble(gens, rng)) == reference);
  }
}

TEST_CASE("truncated basis agrees with the full basis in low degree") {
  auto r = ring_of({1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
  auto full = buchberger(r, octic_curve(r));
  auto low = buchberger(r, octic_curve(r), 3);
  REQUIRE(low.truncated_at() == 3);
  std::vector<Polynomial> want;
  for (const auto& g : full.elements())
    if (*g.homogeneous_degree() <= 3) want.push_back(g);
  std::vector<Polynomial> got;
  for (const auto& g : low.elements())
    if (*g.homogeneous_degree() <= 3) got.push_back(g);
  CHECK(got == want);
}

TEST_CASE("s-polynomial cancels leading terms") {
  auto r = ring_of({1, 1, 2});
  auto f = P(r, "x0^2 + x2"), g = P(r, "x0*x1 - x2");
  auto s = s_polynomial(f, g);
  CHECK(r->order().greater(r->lcm(f.leading_term().monomial, g.leading_term().monomial), s.leading_term().monomial));
  CHECK(s == P(r, "x1*x2 + x0*x2"));
}

TEST_CASE("normal form rejects a foreign ring") {
  auto r = ring_of({1, 1});
  auto other = ring_of({1, 2});
  auto gb = buchberger(r, {P(r, "x0^2")});
  CHECK_THROWS_AS(gb.normal_form(P(other, "x0")), UsageError);
  CHECK(buchberger(r, {}).elements().empty());
}

TEST_CASE("minimal generators drop redundant input") {
  auto r = ring_of({1, 1, 2, 2});
  auto gens = small_curve(r);
  std::vector<Polynomial> padded = gens;
  padded.push_back(gens[0] * P(r, "x0"));
  padded.push_back(gens[1] + gens[0]);
  padded.push_back(gens[2] * P(r, "x3") - gens[1] * P(r, "x1^3"));
  CHECK(minimal_generators(r, padded).size() == 3);
  CHECK(minimal_generators(r, {}).empty());
  CHECK_THROWS_AS(minimal_generators(r, {P(r, "x0 + x2")}), UsageError);
}

TEST_CASE("syzygies of the Koszul triple") {
  auto r = ring_of({1, 2, 3});
  std::vector<ModVec> cols;
  for (int v = 0; v < 3; ++v) cols.push_back(embed(Polynomial::variable(r, static_cast<std::size_t>(v)), 0));
  auto syz = syzygies(r, {0}, {1, 2, 3}, cols);
  CHECK(syz.size() == 3);
  ModuleOrder ord(r->order());
  for (const auto& s : syz) {
    ModVec applied;
    for (const auto& t : s) applied = add_scaled(applied, t.coefficient, t.monomial, cols[t.comp], ord);
    CHECK(applied.empty());
  }
  std::vector<int> degs;
  for (const auto& s : syz) degs.push_back(*homogeneous_degree(s, {1, 2, 3}));
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{3, 4, 5});
}

TEST_CASE("module basis with a component beyond the rank is rejected") {
  auto r = ring_of({1, 1});
  CHECK_THROWS_AS(module_groebner(r, {0}, {embed(P(r, "x0"), 1)}), UsageError);
}

TEST_CASE("ring map kernels match the image dimension oracle") {
  auto st = WeightedRing::make({{"s", 1}, {"t", 1}});
  SUBCASE("twisted cubic") {
    auto src = ring_of({1, 1, 1, 1});
    std::vector<Polynomial> imgs{P(st, "s^3"), P(st, "s^2*t"), P(st, "s*t^2"), P(st, "t^3")};
    auto ker = ring_map_kernel(src, imgs);
    CHECK(ker.size() == 3);
    for (const auto& k : ker) CHECK(*k.homogeneous_degree() == 2);
    auto gb = buchberger(src, ker);
    for (int e = 0; e <= 6; ++e) {
      long standard = 0;
      for (const auto& m : homogeneous_component_basis(*src, e)) {
        bool ok = true;
        for (const auto& l : gb.leading_monomials()) ok = ok && !l.divides(m);
        standard += ok;
      }
      CHECK(standard == static_cast<long>(image_dimension(src, imgs, e)));
    }
  }
  SUBCASE("weighted curve s^2, st, st^3, t^4") {
    auto src = ring_of({1, 1, 2, 2});
    std::vector<Polynomial> imgs{P(st, "s^2"), P(st, "s*t"), P(st, "s*t^3"), P(st, "t^4")};
    auto ker = ring_map_kernel(src, imgs);
    CHECK(buchberger(src, ker) == buchberger(src, small_curve(src)));
    for (const auto& k : ker) CHECK(substitute(k, imgs).is_zero());
    auto gb = buchberger(src, ker);
    for (int e = 0; e <= 8; ++e) {
      long standard = 0;
      for (const auto& m : homogeneous_component_basis(*src, e)) {
        bool ok = true;
        for (const auto& l : gb.leading_monomials()) ok = ok && !l.divides(m);
        standard += ok;
      }
      CHECK(standard == static_cast<long>(image_dimension(src, imgs, e)));
    }
  }
  SUBCASE("inconsistent degree scaling") {
    auto src = ring_of({1, 1});
    CHECK_THROWS_AS(ring_map_kernel(src, {P(st, "s^2"), P(st, "t^3")}), UsageError);
    CHECK_THROWS_AS(ring_map_kernel(src, {P(st, "s^2")}), UsageError);
  }
}

#include "wps/curves.hpp"

#include <algorithm>
#include <functional>

#include "wps/hilbert.hpp"
#include "wps/linalg.hpp"

namespace wps {

RationalDivisor::RationalDivisor(std::vector<DivisorPoint> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.point.a.is_zero() && p.point.b.is_zero()) throw UsageError("divisor point " + std::to_string(i) + " is [0:0]");
    if (p.multiplicity <= 0) throw UsageError("divisor point " + std::to_string(i) + " has nonpositive multiplicity");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& q = points_[j].point;
      if ((p.point.a * q.b - p.point.b * q.a).is_zero())
        throw UsageError("divisor points " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
    }
  }
}

RationalDivisor RationalDivisor::coordinate_points(int degree) {
  if (degree < 0 || degree > 2) throw UsageError("coordinate_points: degree must be 0, 1 or 2");
  std::vector<DivisorPoint> pts;
  if (degree >= 1) pts.push_back({{0, 1}, 1});
  if (degree >= 2) pts.push_back({{1, 0}, 1});
  return RationalDivisor(std::move(pts));
}

int RationalDivisor::degree() const {
  int d = 0;
  for (const auto& p : points_) d += p.multiplicity;
  return d;
}

RingPtr binary_ring() {
  static const RingPtr ring = WeightedRing::make({{"s", 1}, {"t", 1}});
  return ring;
}

namespace {

// Forms of degree n as vectors; column c holds s^{n-c} t^c.
std::vector<Rational> to_vector(const Polynomial& f, int n) {
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  for (const auto& t : f.terms()) v[t.monomial[1]] = t.coefficient;
  return v;
}

Polynomial from_vector(const std::vector<Rational>& v) {
  const int n = static_cast<int>(v.size()) - 1;
  std::vector<Polynomial::Term> terms;
  for (int c = 0; c <= n; ++c)
    if (!v[static_cast<std::size_t>(c)].is_zero())
      terms.push_back({binary_ring()->monomial(std::vector<int>{n - c, c}), v[static_cast<std::size_t>(c)]});
  return Polynomial::from_terms(binary_ring(), std::move(terms));
}

Polynomial binary_monomial(int s, int t) {
  return Polynomial::term(binary_ring(), binary_ring()->monomial(std::vector<int>{s, t}), 1);
}

using Univariate = std::vector<Rational>;

Univariate times(const Univariate& p, const Univariate& q, std::size_t keep) {
  Univariate r(std::min(keep, p.size() + q.size() - 1));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size() && i + j < r.size(); ++j) r[i + j] = r[i + j] + p[i] * q[j];
  return r;
}

// Coefficients of lambda^0 .. lambda^{keep-1} in f(a + lambda u, b + lambda v).
Univariate along_line(const Polynomial& f, const ProjectivePoint& p, std::size_t keep) {
  const bool b_zero = p.b.is_zero();
  const Univariate ls{p.a, b_zero ? Rational(0) : Rational(1)};
  const Univariate lt{p.b, b_zero ? Rational(1) : Rational(0)};
  Univariate total(keep);
  for (const auto& term : f.terms()) {
    Univariate acc{term.coefficient};
    for (int k = 0; k < term.monomial[0]; ++k) acc = times(acc, ls, keep);
    for (int k = 0; k < term.monomial[1]; ++k) acc = times(acc, lt, keep);
    for (std::size_t k = 0; k < acc.size(); ++k) total[k] = total[k] + acc[k];
  }
  return total;
}

void check_binary(const Polynomial& f, const char* who) {
  if (!(*f.ring() == *binary_ring())) throw UsageError(std::string(who) + ": expected a form in s, t");
}

}  // namespace

int vanishing_order(const Polynomial& form, const ProjectivePoint& p) {
  check_binary(form, "vanishing_order");
  if (form.is_zero()) return -1;
  const int n = *form.homogeneous_degree();
  auto c = along_line(form, p, static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) return static_cast<int>(k);
  return n + 1;
}

WeightedSeries weighted_series(int e, const std::vector<std::pair<int, Polynomial>>& sections) {
  if (e <= 0) throw UsageError("weighted_series: e must be positive");
  if (sections.empty()) throw UsageError("weighted_series: no sections");
  std::vector<WeightedRing::Variable> vars;
  WeightedSeries w;
  w.e = e;
  for (std::size_t k = 0; k < sections.size(); ++k) {
    const auto& [deg, f] = sections[k];
    check_binary(f, "weighted_series");
    if (deg <= 0) throw UsageError("weighted_series: section " + std::to_string(k) + " has nonpositive weight");
    if (f.is_zero() || f.homogeneous_degree() != e * deg)
      throw UsageError("weighted_series: section " + std::to_string(k) + " (" + f.to_string() +
                       ") is not a nonzero form of degree " + std::to_string(e * deg));
    vars.push_back({"x" + std::to_string(k), deg});
    w.sections.push_back(f);
  }
  w.ring = WeightedRing::make(vars);
  return w;
}

WeightedSeries LogCompleteSeries::series() const {
  std::vector<std::pair<int, Polynomial>> s;
  for (const auto& f : w1) s.push_back({1, f});
  for (const auto& f : wd) s.push_back({d, f});
  return weighted_series(e, s);
}

LogCompleteSeries log_complete_series(int e, const RationalDivisor& divisor, int d) {
  if (d < 2) throw UsageError("log_complete_series: d must be at least 2");
  if (e - divisor.degree() < 1)
    throw UsageError("log_complete_series: W_1 is empty or too small (e - deg D = " + std::to_string(e - divisor.degree()) +
                     " < 1)");
  const auto n1 = static_cast<std::size_t>(e) + 1;
  DenseMatrix cond;
  for (const auto& p : divisor.points()) {
    std::vector<Univariate> cols;
    for (int c = 0; c <= e; ++c)
      cols.push_back(along_line(binary_monomial(e - c, c), p.point, static_cast<std::size_t>(p.multiplicity)));
    for (int k = 0; k < p.multiplicity; ++k) {
      std::vector<Rational> row;
      for (const auto& col : cols) row.push_back(col[static_cast<std::size_t>(k)]);
      cond.push_back(std::move(row));
    }
  }
  LogCompleteSeries out;
  out.e = e;
  out.d = d;
  out.divisor = divisor;
  for (const auto& row : nullspace(cond, n1)) out.w1.push_back(from_vector(row));

  // Row-reduce Sym_d(W_1) with columns ordered by descending t-power.
  const int top = e * d;
  const auto nd = static_cast<std::size_t>(top) + 1;
  DenseMatrix sym;
  std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
  std::function<void(std::size_t, std::size_t, const Polynomial&)> rec = [&](std::size_t depth, std::size_t from,
                                                                             const Polynomial& acc) {
    if (depth == static_cast<std::size_t>(d)) {
      auto v = to_vector(acc, top);
      std::reverse(v.begin(), v.end());
      sym.push_back(std::move(v));
      return;
    }
    for (std::size_t k = from; k < out.w1.size(); ++k) rec(depth + 1, k, acc * out.w1[k]);
  };
  rec(0, 0, Polynomial::constant(binary_ring(), 1));
  auto ech = row_reduce(std::move(sym), nd);
  std::vector<bool> pivot(nd, false);
  for (auto c : ech.pivots) pivot[c] = true;
  // Reversed column c is t^{top-c}; list the complement by ascending t-power.
  for (std::size_t c = nd; c-- > 0;)
    if (!pivot[c]) out.wd.push_back(binary_monomial(static_cast<int>(c), top - static_cast<int>(c)));
  return out;
}

std::vector<Polynomial> embedding_ideal(const WeightedSeries& series) { return ring_map_kernel(series.ring, series.sections); }

bool nondegenerate(const std::vector<Polynomial>& ideal) {
  for (const auto& g : ideal)
    for (const auto& t : g.terms())
      if (t.monomial.total_degree() <= 1) return false;
  return true;
}

namespace {

// Coefficients of a polynomial in t, keyed densely from t^0.
using Series = std::vector<long>;

Series poly_mul(const Series& a, const Series& b) {
  Series r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

bool same_poly(Series a, Series b) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (!b.empty() && b.back() == 0) b.pop_back();
  return a == b;
}

// K_N(t) (1-t)^2 == (1 + (e-1) t) prod (1 - t^{d_j}), i.e. N has the Hilbert series of R.
bool has_section_ring_series(const BettiTable& t, const WeightedSeries& series) {
  auto k = k_polynomial(t);
  if (k.empty()) return false;
  if (k.begin()->first < 0) return false;
  Series lhs(static_cast<std::size_t>(k.rbegin()->first) + 1, 0);
  for (const auto& [j, c] : k) lhs[static_cast<std::size_t>(j)] = c;
  lhs = poly_mul(lhs, {1, -2, 1});
  Series rhs{1, series.e - 1};
  for (int dj : series.ring->degrees()) {
    Series f(static_cast<std::size_t>(dj) + 1, 0);
    f[0] = 1;
    f[static_cast<std::size_t>(dj)] = -1;
    rhs = poly_mul(rhs, f);
  }
  return same_poly(lhs, rhs);
}

struct Chosen {
  std::vector<Polynomial> forms;
  std::vector<int> degrees;
};

// Greedy monomial generators of R over S in degrees 0..max_degree.
Chosen choose_generators(const WeightedSeries& series, int max_degree) {
  Chosen ch;
  const int e = series.e;
  for (int i = 0; i <= max_degree; ++i) {
    const int top = e * i;
    const auto n = static_cast<std::size_t>(top) + 1;
    // Greedy closure leaves N_j = R_j below i, so the image is sum_j f_j R_{i - d_j}.
    DenseMatrix rows;
    for (std::size_t j = 0; j < series.ring->size(); ++j) {
      const int below = i - series.ring->degree(j);
      if (below < 0) continue;
      for (int c = 0; c <= e * below; ++c) {
        auto v = to_vector(series.sections[j] * binary_monomial(e * below - c, c), top);
        std::reverse(v.begin(), v.end());
        rows.push_back(std::move(v));
      }
    }
    auto ech = row_reduce(std::move(rows), n);
    std::vector<bool> pivot(n, false);
    for (auto c : ech.pivots) pivot[c] = true;
    for (std::size_t c = n; c-- > 0;)
      if (!pivot[c]) {
        ch.forms.push_back(binary_monomial(static_cast<int>(c), top - static_cast<int>(c)));
        ch.degrees.push_back(i);
      }
  }
  return ch;
}

// Relations of the chosen generators through degree `bound`: I_C e_l plus,
// in each degree, the kernel of the map on standard-monomial multiples.
GradedFreeMap relation_presentation(const WeightedSeries& series, const GroebnerBasis& gb, const Chosen& ch,
                                    int bound) {
  const RingPtr& S = series.ring;
  const int e = series.e;
  const auto leads = gb.leading_monomials();
  std::vector<ModVec> rel;
  for (std::size_t l = 0; l < ch.forms.size(); ++l)
    for (const auto& g : gb.elements()) rel.push_back(embed(g, static_cast<std::uint32_t>(l)));
  for (int delta = 0; delta <= bound; ++delta) {
    const int top = e * delta;
    const auto n = static_cast<std::size_t>(top) + 1;
    std::vector<std::pair<std::uint32_t, Monomial>> cols;
    DenseMatrix rows(n);
    for (std::size_t l = 0; l < ch.forms.size(); ++l) {
      if (ch.degrees[l] > delta) continue;
      for (const auto& m : homogeneous_component_basis(*S, delta - ch.degrees[l])) {
        if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& ld) { return ld.divides(m); })) continue;
        Polynomial img = ch.forms[l];
        for (std::size_t v = 0; v < S->size(); ++v) img = img * series.sections[v].pow(m[v]);
        auto vec = to_vector(img, top);
        for (std::size_t k = 0; k < n; ++k) rows[k].push_back(vec[k]);
        cols.push_back({static_cast<std::uint32_t>(l), m});
      }
    }
    if (cols.empty()) continue;
    for (const auto& z : nullspace(rows, cols.size())) {
      ModVec v;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (!z[c].is_zero()) v.push_back({cols[c].second, cols[c].first, z[c]});
      rel.push_back(std::move(v));
    }
  }
  return presentation(S, GradedFreeModule(ch.degrees), rel);
}

}  // namespace

SectionModule section_module(const WeightedSeries& series) {
  int top = 0;
  for (int dj : series.ring->degrees()) top = std::max(top, dj);
  auto gb = buchberger(series.ring, embedding_ideal(series));
  for (int bound = top; bound <= 8 * top + 8; bound *= 2) {
    auto ch = choose_generators(series, bound);
    int highest = ch.degrees.empty() ? 0 : ch.degrees.back();
    auto pres = relation_presentation(series, gb, ch, highest + top + bound);
    auto table = resolve_betti(pres);
    if (!has_section_ring_series(table.table, series)) continue;
    return SectionModule{ch.forms, ch.degrees, pres, table.table};
  }
  throw UsageError("section_module: generators of R were not found in low degree");
}

long q_module_dimension(const WeightedSeries& series, const GroebnerBasis& ideal_basis, int i) {
  if (i < 0) return 0;
  return static_cast<long>(series.e) * i + 1 - hilbert_function(ideal_basis, i);
}

int predicted_np(int e, int deg_d, int d, int g) {
  const int q = e - deg_d - (2 * g + 1);
  if (q < 0)
    throw UsageError("predicted_np: deg(L(-D)) = " + std::to_string(e - deg_d) + " is below 2g + 1 = " +
                     std::to_string(2 * g + 1));
  return q + d * deg_d;
}

}  // namespace wps

#include "wps/resolution.hpp"

#include "wps/betti.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace wps {

GradedFreeMap::GradedFreeMap(RingPtr ring, GradedFreeModule source, GradedFreeModule target, std::vector<ModVec> columns)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (columns_.size() != source_.rank())
    throw UsageError("map has " + std::to_string(columns_.size()) + " columns but the source has rank " +
                     std::to_string(source_.rank()));
  ModuleOrder ord(ring_->order());
  for (std::size_t l = 0; l < columns_.size(); ++l) {
    canonicalize(columns_[l], ord);
    for (const auto& t : columns_[l]) {
      if (t.comp >= target_.rank())
        throw UsageError("column " + std::to_string(l) + " has an entry in row " + std::to_string(t.comp) +
                         " beyond the target rank " + std::to_string(target_.rank()));
      int want = source_.twist(l) - target_.twist(t.comp);
      if (t.monomial.degree() != want)
        throw UsageError("entry (" + std::to_string(t.comp) + ", " + std::to_string(l) + ") has a term of degree " +
                         std::to_string(t.monomial.degree()) + ", expected " + std::to_string(want));
    }
  }
}

GradedFreeMap GradedFreeMap::from_rows(RingPtr ring, GradedFreeModule source, GradedFreeModule target,
                                       const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.size() != target.rank()) throw UsageError("matrix row count does not match the target rank");
  std::vector<ModVec> cols(source.rank());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].size() != source.rank()) throw UsageError("matrix row " + std::to_string(k) + " has the wrong length");
    for (std::size_t l = 0; l < rows[k].size(); ++l) {
      auto v = embed(rows[k][l], static_cast<std::uint32_t>(k));
      cols[l].insert(cols[l].end(), v.begin(), v.end());
    }
  }
  return GradedFreeMap(std::move(ring), std::move(source), std::move(target), std::move(cols));
}

GradedFreeMap GradedFreeMap::zero(RingPtr ring, GradedFreeModule source, GradedFreeModule target) {
  std::vector<ModVec> cols(source.rank());
  return GradedFreeMap(std::move(ring), std::move(source), std::move(target), std::move(cols));
}

Polynomial GradedFreeMap::entry(std::size_t k, std::size_t l) const {
  return component(columns_.at(l), static_cast<std::uint32_t>(k), ring_);
}

bool GradedFreeMap::is_minimal() const {
  for (const auto& c : columns_)
    for (const auto& t : c)
      if (t.monomial.is_one()) return false;
  return true;
}

bool GradedFreeMap::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const ModVec& c) { return c.empty(); });
}

GradedFreeMap GradedFreeMap::compose(const GradedFreeMap& first) const {
  if (!(first.target_ == source_)) throw UsageError("compose: modules do not match");
  ModuleOrder ord(ring_->order());
  std::vector<ModVec> cols(first.source_.rank());
  for (std::size_t l = 0; l < cols.size(); ++l)
    for (const auto& t : first.columns_[l]) cols[l] = add_scaled(cols[l], t.coefficient, t.monomial, columns_[t.comp], ord);
  return GradedFreeMap(ring_, first.source_, target_, std::move(cols));
}

GradedFreeMap GradedFreeMap::dual(int shift) const {
  std::vector<int> src, tgt;
  for (int a : target_.twists()) src.push_back(shift - a);
  for (int a : source_.twists()) tgt.push_back(shift - a);
  std::vector<ModVec> cols(target_.rank());
  for (std::size_t l = 0; l < columns_.size(); ++l)
    for (const auto& t : columns_[l]) cols[t.comp].push_back({t.monomial, static_cast<std::uint32_t>(l), t.coefficient});
  return GradedFreeMap(ring_, GradedFreeModule(src), GradedFreeModule(tgt), std::move(cols));
}

bool operator==(const GradedFreeMap& a, const GradedFreeMap& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
  for (std::size_t l = 0; l < a.columns_.size(); ++l) {
    const auto& x = a.columns_[l];
    const auto& y = b.columns_[l];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].comp != y[i].comp || !(x[i].monomial == y[i].monomial) || !(x[i].coefficient == y[i].coefficient))
        return false;
  }
  return true;
}

FreeResolution::FreeResolution(RingPtr ring, GradedFreeModule f0, std::vector<GradedFreeMap> maps, bool minimal,
                               Truncation truncation)
    : ring_(std::move(ring)), f0_(std::move(f0)), maps_(std::move(maps)), minimal_(minimal), truncation_(truncation) {
  for (std::size_t i = 0; i < maps_.size(); ++i)
    if (!(maps_[i].target() == module(i))) throw UsageError("resolution maps do not chain");
}

std::size_t FreeResolution::projective_dimension() const {
  for (std::size_t i = length(); i > 0; --i)
    if (module(i).rank() > 0) return i;
  return 0;
}

std::string to_string(FreeResolution::Truncation t) {
  switch (t) {
    case FreeResolution::Truncation::None: return "none";
    case FreeResolution::Truncation::MaxLength: return "max-length";
    case FreeResolution::Truncation::MaxTwist: return "max-twist";
    case FreeResolution::Truncation::TimeBudget: return "time-budget";
  }
  return "unknown";
}

GradedFreeMap presentation(const RingPtr& ring, const std::vector<Polynomial>& ideal_gens) {
  auto gens = minimal_generators(ring, ideal_gens);
  std::vector<int> twists;
  std::vector<ModVec> cols;
  for (const auto& g : gens) {
    twists.push_back(*g.homogeneous_degree());
    cols.push_back(embed(g, 0));
  }
  return GradedFreeMap(ring, GradedFreeModule(twists), GradedFreeModule({0}), std::move(cols));
}

GradedFreeMap presentation(const RingPtr& ring, const GradedFreeModule& f0, const std::vector<ModVec>& gens) {
  if (f0.rank() == 0) return GradedFreeMap::zero(ring, GradedFreeModule(), f0);
  auto mins = minimal_generators(ring, f0.twists(), gens);
  std::vector<int> twists;
  for (const auto& g : mins) twists.push_back(*homogeneous_degree(g, f0.twists()));
  return GradedFreeMap(ring, GradedFreeModule(twists), f0, std::move(mins));
}

namespace {

using Clock = std::chrono::steady_clock;

// Chain complex under minimization: maps[L-1] is F_L -> F_{L-1} by columns.
struct Work {
  std::vector<std::vector<int>> twists;  // per level
  std::vector<std::vector<char>> alive;
  std::vector<std::vector<ModVec>> maps;
};

void cancel_units(Work& w, const ModuleOrder& ord) {
  for (std::size_t L = 1; L < w.twists.size(); ++L) {
    auto& cols = w.maps[L - 1];
    auto& rows_alive = w.alive[L - 1];
    auto& cols_alive = w.alive[L];
    std::vector<std::vector<std::uint32_t>> occ(w.twists[L - 1].size());
    for (std::size_t t = 0; t < cols.size(); ++t) {
      if (!cols_alive[t]) {
        ModVec().swap(cols[t]);
        continue;
      }
      auto& c = cols[t];
      c.erase(std::remove_if(c.begin(), c.end(), [&](const ModTerm& x) { return !rows_alive[x.comp]; }), c.end());
      for (const auto& x : c)
        if (occ[x.comp].empty() || occ[x.comp].back() != t) occ[x.comp].push_back(static_cast<std::uint32_t>(t));
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cols.size(); ++s) {
        if (!cols_alive[s]) continue;
        const ModTerm* unit = nullptr;
        for (const auto& x : cols[s])
          if (x.monomial.is_one()) {
            unit = &x;
            break;
          }
        if (!unit) continue;
        const std::uint32_t r = unit->comp;
        const Rational c = unit->coefficient;
        const ModVec col_s = cols[s];
        const std::vector<std::uint32_t> targets = occ[r];
        for (std::uint32_t t : targets) {
          if (t == s || !cols_alive[t]) continue;
          ModVec p;
          for (const auto& x : cols[t])
            if (x.comp == r) p.push_back(x);
          if (p.empty()) continue;
          for (const auto& x : p) cols[t] = add_scaled(cols[t], -x.coefficient / c, x.monomial, col_s, ord);
          for (const auto& x : col_s)
            if (occ[x.comp].empty() || occ[x.comp].back() != t) occ[x.comp].push_back(t);
        }
        cols_alive[s] = 0;
        rows_alive[r] = 0;
        ModVec().swap(cols[s]);
        changed = true;
      }
    }
    // Column r of the previous map belongs to a dead basis element now.
    if (L >= 2) {
      auto& prev = w.maps[L - 2];
      for (std::size_t r = 0; r < prev.size(); ++r)
        if (!rows_alive[r]) ModVec().swap(prev[r]);
    }
  }
}

FreeResolution assemble(const RingPtr& ring, Work& w, std::size_t out_len, FreeResolution::Truncation trunc) {
  std::vector<std::vector<std::uint32_t>> index(w.twists.size());
  std::vector<std::vector<int>> twists(w.twists.size());
  for (std::size_t L = 0; L < w.twists.size(); ++L) {
    index[L].assign(w.twists[L].size(), 0);
    for (std::size_t k = 0; k < w.twists[L].size(); ++k)
      if (w.alive[L][k]) {
        index[L][k] = static_cast<std::uint32_t>(twists[L].size());
        twists[L].push_back(w.twists[L][k]);
      }
  }
  std::vector<GradedFreeMap> maps;
  for (std::size_t L = 1; L <= out_len; ++L) {
    std::vector<ModVec> cols;
    for (std::size_t k = 0; k < w.twists[L].size(); ++k) {
      if (!w.alive[L][k]) continue;
      ModVec c;
      for (const auto& x : w.maps[L - 1][k])
        if (w.alive[L - 1][x.comp]) c.push_back({x.monomial, index[L - 1][x.comp], x.coefficient});
      cols.push_back(std::move(c));
    }
    maps.emplace_back(ring, GradedFreeModule(twists[L]), GradedFreeModule(twists[L - 1]), std::move(cols));
  }
  return FreeResolution(ring, GradedFreeModule(twists[0]), std::move(maps), true, trunc);
}

// One level of the Schreyer frame. Terms store total monomials m * lead(e_comp)
// so the induced order is the plain module order on (total, comp).
struct Level {
  std::vector<Monomial> lead;
  std::vector<std::uint32_t> lead_comp;
  std::vector<int> degree;
  std::vector<ModVec> vec;
  std::vector<std::size_t> group_begin;  // by lower-level comp, size rank_below + 1

  std::size_t size() const { return lead.size(); }
};

struct KeyHash {
  std::size_t operator()(const std::pair<Monomial, std::uint32_t>& k) const { return k.first.hash() * 31u + k.second; }
};

// Syzygy with lead n * e_k among the elements of `lv`, by top reduction of
// its image to zero.
ModVec frame_syzygy(const Level& lv, const Monomial& n, std::size_t k, const ModuleOrder& ord) {
  using Key = std::pair<Monomial, std::uint32_t>;
  std::vector<Key> heap;
  std::unordered_map<Key, Rational, KeyHash> coef;
  auto less = [&](const Key& a, const Key& b) { return ord.compare(a.first, a.second, b.first, b.second) < 0; };
  auto push = [&](Monomial m, std::uint32_t c, const Rational& g, const Rational& kappa) {
    Key key{m, c};
    auto it = coef.find(key);
    if (it != coef.end()) {
      it->second = Rational::mul_sub(it->second, g, kappa);
      return;
    }
    coef.emplace(key, -(g * kappa));
    heap.push_back(std::move(key));
    std::push_heap(heap.begin(), heap.end(), less);
  };
  ModVec sigma;
  sigma.push_back({n * lv.lead[k], static_cast<std::uint32_t>(k), 1});
  for (const auto& t : lv.vec[k]) push(n * t.monomial, t.comp, -1, t.coefficient);
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), less);
    Key key = std::move(heap.back());
    heap.pop_back();
    auto it = coef.find(key);
    Rational g = std::move(it->second);
    coef.erase(it);
    if (g.is_zero()) continue;
    std::size_t j = lv.group_begin[key.second];
    const std::size_t end = lv.group_begin[key.second + 1];
    while (j < end && !lv.lead[j].divides(key.first)) ++j;
    if (j == end) throw std::logic_error("frame: reduction left the image, the lower level is not a Groebner basis");
    Monomial q = key.first / lv.lead[j];
    const ModVec& vj = lv.vec[j];
    for (std::size_t x = 1; x < vj.size(); ++x) push(q * vj[x].monomial, vj[x].comp, g, vj[x].coefficient);
    sigma.push_back({key.first, static_cast<std::uint32_t>(j), -g});
  }
  return sigma;
}

void sort_level(Level& lv, const Level& below, std::size_t var, const ModuleOrder& ord) {
  std::vector<std::size_t> perm(lv.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  auto mult_exp = [&](std::size_t i) {
    return static_cast<int>(lv.lead[i][var]) - static_cast<int>(below.lead[lv.lead_comp[i]][var]);
  };
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (lv.lead_comp[a] != lv.lead_comp[b]) return lv.lead_comp[a] < lv.lead_comp[b];
    int ea = mult_exp(a), eb = mult_exp(b);
    if (ea != eb) return ea < eb;
    if (lv.degree[a] != lv.degree[b]) return lv.degree[a] < lv.degree[b];
    return ord.ring_order().compare(lv.lead[a], lv.lead[b]) < 0;
  });
  Level out;
  for (auto i : perm) {
    out.lead.push_back(lv.lead[i]);
    out.lead_comp.push_back(lv.lead_comp[i]);
    out.degree.push_back(lv.degree[i]);
    if (!lv.vec.empty()) out.vec.push_back(std::move(lv.vec[i]));
  }
  out.group_begin.assign(below.size() + 1, 0);
  for (auto c : out.lead_comp) ++out.group_begin[c + 1];
  for (std::size_t c = 0; c < below.size(); ++c) out.group_begin[c + 1] += out.group_begin[c];
  lv = std::move(out);
}

void minimalize(std::vector<Monomial>& ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.total_degree() < b.total_degree();
  });
  std::vector<Monomial> keep;
  for (const auto& m : ms) {
    bool redundant = false;
    for (const auto& k : keep)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) keep.push_back(m);
  }
  ms = std::move(keep);
}

unsigned thread_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("WPS_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace

FreeResolution minimize(const FreeResolution& res) {
  Work w;
  w.twists.push_back(res.module(0).twists());
  for (std::size_t i = 1; i <= res.length(); ++i) {
    w.twists.push_back(res.module(i).twists());
    w.maps.push_back(res.map(i).columns());
  }
  for (const auto& t : w.twists) w.alive.emplace_back(t.size(), 1);
  cancel_units(w, ModuleOrder(res.ring()->order()));
  FreeResolution out = assemble(res.ring(), w, res.length(), res.truncation());
  return out;
}

namespace {

struct Frame {
  std::vector<Level> levels;
  FreeResolution::Truncation trunc = FreeResolution::Truncation::None;
  bool budget_hit = false;
  bool done = false;  // no level is missing above the top one
};

Frame build_frame(const GradedFreeMap& start, const ResolveOptions& options, Clock::time_point t0) {
  const RingPtr& ring = start.ring();
  const ModuleOrder ord(ring->order());
  const std::size_t nvars = ring->size();
  auto over_budget = [&] {
    return options.time_budget_secs &&
           std::chrono::duration<double>(Clock::now() - t0).count() > *options.time_budget_secs;
  };
  if (options.max_length && *options.max_length < 0) throw UsageError("resolve: max_length must be nonnegative");
  const std::size_t want_levels =
      options.max_length ? static_cast<std::size_t>(*options.max_length) + 1 : static_cast<std::size_t>(-1);
  FreeResolution::Truncation trunc = FreeResolution::Truncation::None;

  std::vector<Level> levels(1);
  Level& l0 = levels[0];
  for (std::size_t c = 0; c < start.target().rank(); ++c) {
    l0.lead.push_back(ring->one());
    l0.lead_comp.push_back(0);
    l0.degree.push_back(start.target().twist(c));
  }

  if (start.target().rank() > 0 && want_levels >= 1) {
    ModuleGroebnerEngine eng(ring, ord, start.target().twists());
    for (const auto& c : start.columns()) eng.add(c);
    eng.complete(options.max_twist);
    if (eng.next_degree()) trunc = FreeResolution::Truncation::MaxTwist;
    Level l1;
    for (auto& g : eng.reduced_basis()) {
      l1.lead.push_back(g.front().monomial);
      l1.lead_comp.push_back(g.front().comp);
      l1.degree.push_back(g.front().monomial.degree() + start.target().twist(g.front().comp));
      l1.vec.push_back(std::move(g));
    }
    if (l1.size()) {
      sort_level(l1, levels[0], nvars - 1, ord);
      levels.push_back(std::move(l1));
    }
  }

  const unsigned threads = thread_count(options.threads);
  bool budget_hit = false;
  while (levels.size() > 1 && levels.size() <= want_levels && !budget_hit) {
    const Level& lv = levels.back();
    const std::size_t L = levels.size() - 1;
    Level next;
    for (std::size_t c = 0; c + 1 < lv.group_begin.size(); ++c) {
      for (std::size_t k = lv.group_begin[c]; k < lv.group_begin[c + 1]; ++k) {
        std::vector<Monomial> cands;
        for (std::size_t l = lv.group_begin[c]; l < k; ++l) cands.push_back(ring->lcm(lv.lead[l], lv.lead[k]) / lv.lead[k]);
        minimalize(cands);
        for (const auto& n : cands) {
          int deg = n.degree() + lv.degree[k];
          if (options.max_twist && deg > *options.max_twist) {
            trunc = FreeResolution::Truncation::MaxTwist;
            continue;
          }
          next.lead.push_back(n * lv.lead[k]);
          next.lead_comp.push_back(static_cast<std::uint32_t>(k));
          next.degree.push_back(deg);
        }
      }
    }
    if (next.size() == 0) break;
    sort_level(next, lv, (nvars - 1 - L % nvars), ord);
    next.vec.resize(next.size());
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> stop{false};
    auto worker = [&] {
      for (std::size_t i; (i = cursor.fetch_add(1)) < next.size();) {
        if (stop.load()) return;
        if ((i & 63u) == 0 && over_budget()) {
          stop = true;
          return;
        }
        Monomial n = next.lead[i] / lv.lead[next.lead_comp[i]];
        next.vec[i] = frame_syzygy(lv, n, next.lead_comp[i], ord);
      }
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (stop.load()) {
      budget_hit = true;
      trunc = FreeResolution::Truncation::TimeBudget;
      break;
    }
    levels.push_back(std::move(next));
  }
  Frame f;
  f.done = !budget_hit && (levels.size() <= want_levels || levels.size() == 1);
  f.levels = std::move(levels);
  f.trunc = trunc;
  f.budget_hit = budget_hit;
  return f;
}

// Highest level whose ranks are final, and the truncation reported for it.
std::size_t output_length(const Frame& f, const std::vector<std::size_t>& top_alive_rank,
                          FreeResolution::Truncation& trunc) {
  std::size_t out_len = f.levels.size() - 1;
  trunc = f.trunc;
  if (!f.done) {
    // The top computed level may still cancel against the next one.
    if (out_len > 0) --out_len;
    if (trunc == FreeResolution::Truncation::None) trunc = FreeResolution::Truncation::MaxLength;
    if (!f.budget_hit && top_alive_rank[out_len + 1] == 0 && trunc == FreeResolution::Truncation::MaxLength)
      trunc = FreeResolution::Truncation::None;
  }
  return out_len;
}

void fill_stats(FrameStats* stats, const Frame& f, Clock::time_point t0, Clock::time_point t1) {
  if (!stats) return;
  stats->frame_ranks.clear();
  for (const auto& lv : f.levels) stats->frame_ranks.push_back(lv.size());
  stats->frame_seconds = std::chrono::duration<double>(t1 - t0).count();
  stats->minimize_seconds = std::chrono::duration<double>(Clock::now() - t1).count();
}

// Rank over k of the scalar columns of one degree, by sparse elimination.
std::size_t scalar_rank(std::vector<std::vector<std::pair<std::uint32_t, Rational>>> cols) {
  std::unordered_map<std::uint32_t, std::vector<std::pair<std::uint32_t, Rational>>> pivots;
  std::size_t rank = 0;
  for (auto& v : cols) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) {
        pivots.emplace(v.front().first, std::move(v));
        ++rank;
        break;
      }
      const auto& p = it->second;
      const Rational f = v.front().second / p.front().second;
      std::vector<std::pair<std::uint32_t, Rational>> out;
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < p.size()) {
        if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
          out.push_back(std::move(v[i++]));
        } else if (i == v.size() || p[j].first < v[i].first) {
          out.emplace_back(p[j].first, -(f * p[j].second));
          ++j;
        } else {
          Rational c = Rational::mul_sub(v[i].second, f, p[j].second);
          if (!c.is_zero()) out.emplace_back(v[i].first, std::move(c));
          ++i;
          ++j;
        }
      }
      v = std::move(out);
    }
  }
  return rank;
}

}  // namespace

FreeResolution resolve(const GradedFreeMap& start, const ResolveOptions& options, FrameStats* stats) {
  const auto t0 = Clock::now();
  const RingPtr& ring = start.ring();
  const ModuleOrder ord(ring->order());
  Frame frame = build_frame(start, options, t0);
  auto& levels = frame.levels;
  const auto t1 = Clock::now();

  Work w;
  for (std::size_t L = 0; L < levels.size(); ++L) {
    w.twists.push_back(levels[L].degree);
    w.alive.emplace_back(levels[L].size(), 1);
    if (L == 0) continue;
    std::vector<ModVec> cols;
    const Level& below = levels[L - 1];
    for (auto& v : levels[L].vec) {
      ModVec c;
      c.reserve(v.size());
      for (const auto& t : v) c.push_back({t.monomial / below.lead[t.comp], t.comp, t.coefficient});
      ModVec().swap(v);
      canonicalize(c, ord);
      cols.push_back(std::move(c));
    }
    w.maps.push_back(std::move(cols));
  }
  cancel_units(w, ord);

  std::vector<std::size_t> alive_rank;
  for (const auto& a : w.alive) alive_rank.push_back(static_cast<std::size_t>(std::count(a.begin(), a.end(), 1)));
  alive_rank.push_back(0);
  FreeResolution::Truncation trunc;
  const std::size_t out_len = output_length(frame, alive_rank, trunc);
  fill_stats(stats, frame, t0, t1);
  return assemble(ring, w, out_len, trunc);
}

BettiResult resolve_betti(const GradedFreeMap& start, const ResolveOptions& options, FrameStats* stats) {
  const auto t0 = Clock::now();
  const RingPtr& ring = start.ring();
  Frame frame = build_frame(start, options, t0);
  const auto& levels = frame.levels;
  const auto t1 = Clock::now();

  // cancelled[L][j]: basis elements of F_L in degree j that split off.
  std::vector<std::map<int, long>> cancelled(levels.size() + 1);
  for (std::size_t L = 1; L < levels.size(); ++L) {
    const Level& below = levels[L - 1];
    std::map<int, std::vector<std::vector<std::pair<std::uint32_t, Rational>>>> by_degree;
    for (std::size_t k = 0; k < levels[L].size(); ++k) {
      std::vector<std::pair<std::uint32_t, Rational>> v;
      for (const auto& t : levels[L].vec[k])
        if (t.monomial == below.lead[t.comp]) v.emplace_back(t.comp, t.coefficient);
      if (!v.empty()) by_degree[levels[L].degree[k]].push_back(std::move(v));
    }
    for (auto& [j, cols] : by_degree) {
      long r = static_cast<long>(scalar_rank(std::move(cols)));
      cancelled[L][j] += r;
      cancelled[L - 1][j] += r;
    }
  }
  BettiResult out{BettiTable(ring), FreeResolution::Truncation::None, 0};
  std::vector<std::size_t> alive_rank(levels.size() + 1, 0);
  for (std::size_t L = 0; L < levels.size(); ++L) {
    std::map<int, long> count;
    for (int j : levels[L].degree) ++count[j];
    for (const auto& [j, c] : count) {
      long b = c - cancelled[L][j];
      alive_rank[L] += static_cast<std::size_t>(b);
      out.table.set(static_cast<int>(L), j, b);
    }
  }
  out.length = output_length(frame, alive_rank, out.truncation);
  for (std::size_t L = out.length + 1; L < levels.size(); ++L)
    for (int j : levels[L].degree) out.table.set(static_cast<int>(L), j, 0);
  fill_stats(stats, frame, t0, t1);
  return out;
}

GradedFreeMap prune(const GradedFreeMap& map) {
  auto res = resolve(map, ResolveOptions{1, std::nullopt, std::nullopt, 1});
  if (res.length() == 0) return GradedFreeMap::zero(map.ring(), GradedFreeModule(), res.module(0));
  return res.map(1);
}

GradedFreeMap kernel(const GradedFreeMap& map) {
  if (map.source().rank() == 0) return GradedFreeMap::zero(map.ring(), GradedFreeModule(), map.source());
  if (map.target().rank() == 0) {
    std::vector<ModVec> cols;
    for (std::size_t c = 0; c < map.source().rank(); ++c) cols.push_back({{map.ring()->one(), static_cast<std::uint32_t>(c), 1}});
    return GradedFreeMap(map.ring(), map.source(), map.source(), std::move(cols));
  }
  auto gens = syzygies(map.ring(), map.target().twists(), map.source().twists(), map.columns(), true);
  std::vector<int> twists;
  for (const auto& g : gens) twists.push_back(*homogeneous_degree(g, map.source().twists()));
  return GradedFreeMap(map.ring(), GradedFreeModule(twists), map.source(), std::move(gens));
}

}  // namespace wps

#include "wps/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace wps {

ModuleGroebnerEngine::ModuleGroebnerEngine(RingPtr ring, ModuleOrder order, std::vector<int> shifts)
    : ring_(std::move(ring)), order_(std::move(order)), shifts_(std::move(shifts)), by_comp_(shifts_.size()) {
  if (shifts_.empty()) throw UsageError("a free module of rank 0 has no submodules to compute with");
}

int ModuleGroebnerEngine::degree_of(const ModVec& v) const {
  auto d = homogeneous_degree(v, shifts_);
  if (!d) throw UsageError("module element is zero or not homogeneous for the given twists");
  return *d;
}

void ModuleGroebnerEngine::add(ModVec v) {
  canonicalize(v, order_);
  if (v.empty()) return;
  int d = degree_of(v);
  inputs_[d].push_back(std::move(v));
}

std::optional<int> ModuleGroebnerEngine::next_degree() const {
  std::optional<int> d;
  if (!pairs_.empty()) d = pairs_.begin()->first;
  if (!inputs_.empty() && (!d || inputs_.begin()->first < *d)) d = inputs_.begin()->first;
  return d;
}

std::optional<std::size_t> ModuleGroebnerEngine::find_divisor(const Monomial& m, std::uint32_t comp,
                                                              std::size_t skip) const {
  if (comp >= by_comp_.size()) return std::nullopt;
  for (std::size_t i : by_comp_[comp])
    if (i != skip && lead(i).monomial.divides(m)) return i;
  return std::nullopt;
}

ModVec ModuleGroebnerEngine::normal_form(ModVec v) const {
  ModVec done;
  ModVec rest = std::move(v);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    const ModTerm& t = rest[pos];
    auto g = find_divisor(t.monomial, t.comp);
    if (!g) {
      done.push_back(t);
      ++pos;
      continue;
    }
    const ModVec& red = basis_[*g];
    Monomial q = t.monomial / red.front().monomial;
    Rational c = -t.coefficient / red.front().coefficient;
    // Merge rest[pos+1..] with c*q*red[1..]; the leading terms cancel exactly.
    ModVec next;
    next.reserve(rest.size() - pos + red.size());
    auto i = rest.begin() + static_cast<std::ptrdiff_t>(pos + 1);
    auto j = red.begin() + 1;
    while (i != rest.end() || j != red.end()) {
      if (j == red.end()) {
        next.push_back(std::move(*i++));
        continue;
      }
      Monomial mj = q * j->monomial;
      int cmp = i == rest.end() ? -1 : order_.compare(i->monomial, i->comp, mj, j->comp);
      if (cmp > 0) {
        next.push_back(std::move(*i++));
      } else if (cmp < 0) {
        next.push_back({mj, j->comp, c * j->coefficient});
        ++j;
      } else {
        Rational s = i->coefficient + c * j->coefficient;
        if (!s.is_zero()) next.push_back({mj, j->comp, std::move(s)});
        ++i;
        ++j;
      }
    }
    rest = std::move(next);
    pos = 0;
  }
  return done;
}

ModVec ModuleGroebnerEngine::s_vector(const Pair& p) const {
  const ModVec& a = basis_[p.i];
  const ModVec& b = basis_[p.j];
  ModVec left;
  Monomial qa = p.lcm / a.front().monomial;
  left.reserve(a.size());
  for (const auto& t : a) left.push_back({qa * t.monomial, t.comp, t.coefficient});
  return add_scaled(left, -1, p.lcm / b.front().monomial, b, order_);
}

void ModuleGroebnerEngine::insert(ModVec h) {
  make_monic(h);
  const std::size_t k = basis_.size();
  const Monomial hm = h.front().monomial;
  const std::uint32_t hc = h.front().comp;
  const bool rank_one = shifts_.size() == 1;
  const int shift = shifts_[hc];

  // Chain criterion on old pairs: drop (i,j) when lead(h) | lcm(i,j) strictly inside.
  for (auto it = pairs_.begin(); it != pairs_.end();) {
    auto& vec = it->second;
    vec.erase(std::remove_if(vec.begin(), vec.end(),
                             [&](const Pair& p) {
                               if (lead(p.i).comp != hc || !hm.divides(p.lcm)) return false;
                               return !(ring_->lcm(lead(p.i).monomial, hm) == p.lcm) &&
                                      !(ring_->lcm(lead(p.j).monomial, hm) == p.lcm);
                             }),
              vec.end());
    it = vec.empty() ? pairs_.erase(it) : std::next(it);
  }

  struct Cand {
    std::size_t i;
    Monomial lcm;
    bool coprime;
    bool alive = true;
  };
  std::vector<Cand> cands;
  for (std::size_t i : by_comp_[hc]) {
    const Monomial& gm = lead(i).monomial;
    cands.push_back({i, ring_->lcm(gm, hm), rank_one && gm.coprime(hm)});
  }
  // M: a strictly smaller lcm among the new pairs divides this one.
  for (auto& c : cands)
    for (const auto& o : cands)
      if (&o != &c && o.lcm.divides(c.lcm) && !(o.lcm == c.lcm)) {
        c.alive = false;
        break;
      }
  // F and the product criterion over classes of equal lcm.
  std::vector<bool> settled(cands.size(), false);
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (!cands[a].alive || settled[a]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t b = a; b < cands.size(); ++b)
      if (cands[b].alive && !settled[b] && cands[b].lcm == cands[a].lcm) cls.push_back(b);
    bool any_coprime = false;
    for (auto b : cls) {
      settled[b] = true;
      any_coprime = any_coprime || cands[b].coprime;
    }
    if (!any_coprime) {
      const Cand& c = cands[cls.front()];
      pairs_[c.lcm.degree() + shift].push_back({c.i, k, c.lcm});
    }
  }

  basis_.push_back(std::move(h));
  by_comp_[hc].push_back(k);
}

void ModuleGroebnerEngine::complete(std::optional<int> max_degree) {
  while (auto d = next_degree()) {
    if (max_degree && *d > *max_degree) break;
    std::vector<ModVec> work;
    if (auto it = pairs_.find(*d); it != pairs_.end()) {
      for (const auto& p : it->second) work.push_back(s_vector(p));
      pairs_.erase(it);
    }
    if (auto it = inputs_.find(*d); it != inputs_.end()) {
      for (auto& v : it->second) work.push_back(std::move(v));
      inputs_.erase(it);
    }
    for (auto& w : work) {
      ModVec h = normal_form(std::move(w));
      if (!h.empty()) insert(std::move(h));
    }
  }
}

std::vector<ModVec> ModuleGroebnerEngine::reduced_basis() const {
  std::vector<ModVec> out;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (!find_divisor(lead(i).monomial, lead(i).comp, i)) keep.push_back(i);
  ModuleGroebnerEngine tmp(ring_, order_, shifts_);
  for (auto i : keep) {
    tmp.basis_.push_back(basis_[i]);
    tmp.by_comp_[lead(i).comp].push_back(tmp.basis_.size() - 1);
  }
  for (std::size_t k = 0; k < tmp.basis_.size(); ++k) {
    ModVec& g = tmp.basis_[k];
    ModVec tail(g.begin() + 1, g.end());
    ModTerm head = g.front();
    // Other leads never divide tail terms of equal degree above lead(g), so
    // reducing against the full set is safe.
    ModVec reduced_tail = tmp.normal_form(std::move(tail));
    g.clear();
    g.push_back(std::move(head));
    g.insert(g.end(), reduced_tail.begin(), reduced_tail.end());
    make_monic(g);
  }
  out = std::move(tmp.basis_);
  std::sort(out.begin(), out.end(),
            [&](const ModVec& a, const ModVec& b) { return order_.compare(a.front(), b.front()) < 0; });
  return out;
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool reduced,
                             std::optional<int> truncated_at)
    : ring_(std::move(ring)), elements_(std::move(elements)), reduced_(reduced), truncated_(truncated_at) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements_) out.push_back(g.leading_term().monomial);
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (p.ring() != ring_ && !(*p.ring() == *ring_))
    throw UsageError("normal_form: polynomial ring or monomial order differs from the basis");
  std::vector<Polynomial::Term> done;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const auto& t = rest.leading_term();
    const Polynomial* red = nullptr;
    for (const auto& g : elements_)
      if (g.leading_term().monomial.divides(t.monomial)) {
        red = &g;
        break;
      }
    if (!red) {
      done.push_back(t);
      rest = rest.add_scaled(-1, Monomial(), Polynomial::term(ring_, t.monomial, t.coefficient));
      continue;
    }
    rest = rest.add_scaled(-t.coefficient / red->leading_term().coefficient,
                           t.monomial / red->leading_term().monomial, *red);
  }
  return Polynomial::from_sorted_terms(ring_, std::move(done));
}

namespace {

std::vector<Polynomial> to_polys(const RingPtr& ring, const std::vector<ModVec>& vs) {
  std::vector<Polynomial> out;
  for (const auto& v : vs) out.push_back(component(v, 0, ring));
  return out;
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, std::optional<int> max_degree) {
  ModuleGroebnerEngine eng(ring, ModuleOrder(ring->order()), {0});
  for (const auto& g : gens) {
    if (g.ring() != ring && !(*g.ring() == *ring)) throw UsageError("buchberger: generators live in different rings");
    if (!g.is_homogeneous()) throw UsageError("buchberger: generator '" + g.to_string() + "' is not homogeneous");
    eng.add(embed(g, 0));
  }
  eng.complete(max_degree);
  std::optional<int> trunc;
  if (max_degree && eng.next_degree()) trunc = max_degree;
  return GroebnerBasis(ring, to_polys(ring, eng.reduced_basis()), true, trunc);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw UsageError("buchberger: pass the ring explicitly for an empty generator list");
  return buchberger(gens.front().ring(), gens);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw UsageError("s_polynomial: zero argument");
  const auto& ring = f.ring();
  const auto& lf = f.leading_term();
  const auto& lg = g.leading_term();
  Monomial l = ring->lcm(lf.monomial, lg.monomial);
  Polynomial a = Polynomial(ring).add_scaled(Rational(1) / lf.coefficient, l / lf.monomial, f);
  return a.add_scaled(-Rational(1) / lg.coefficient, l / lg.monomial, g);
}

ModuleGroebnerBasis::ModuleGroebnerBasis(RingPtr ring, ModuleOrder order, std::vector<int> twists,
                                         std::vector<ModVec> elements)
    : ring_(std::move(ring)), order_(std::move(order)), twists_(std::move(twists)), elements_(std::move(elements)) {}

ModVec ModuleGroebnerBasis::normal_form(const ModVec& v) const {
  for (const auto& t : v)
    if (t.comp >= twists_.size()) throw UsageError("normal_form: component beyond the module rank");
  ModVec done;
  ModVec rest = v;
  canonicalize(rest, order_);
  while (!rest.empty()) {
    const ModTerm t = rest.front();
    const ModVec* red = nullptr;
    for (const auto& g : elements_)
      if (g.front().comp == t.comp && g.front().monomial.divides(t.monomial)) {
        red = &g;
        break;
      }
    if (!red) {
      done.push_back(t);
      rest.erase(rest.begin());
      continue;
    }
    rest = add_scaled(rest, -t.coefficient / red->front().coefficient, t.monomial / red->front().monomial, *red,
                      order_);
  }
  return done;
}

ModuleGroebnerBasis module_groebner(const RingPtr& ring, const std::vector<int>& twists, const std::vector<ModVec>& gens,
                                    std::optional<ModuleOrder> order) {
  ModuleOrder ord = order ? *order : ModuleOrder(ring->order());
  ModuleGroebnerEngine eng(ring, ord, twists);
  for (const auto& g : gens) {
    for (const auto& t : g)
      if (t.comp >= twists.size())
        throw UsageError("module_groebner: generator uses component " + std::to_string(t.comp) + " but rank is " +
                         std::to_string(twists.size()));
    eng.add(g);
  }
  eng.complete();
  return ModuleGroebnerBasis(ring, ord, twists, eng.reduced_basis());
}

std::vector<ModVec> minimal_generators(const RingPtr& ring, const std::vector<int>& twists,
                                       const std::vector<ModVec>& gens, const std::vector<ModVec>& modulo) {
  ModuleOrder ord(ring->order());
  ModuleGroebnerEngine eng(ring, ord, twists);
  for (const auto& m : modulo) eng.add(m);
  std::vector<std::pair<int, std::size_t>> order;
  std::vector<ModVec> canon(gens);
  for (std::size_t i = 0; i < canon.size(); ++i) {
    canonicalize(canon[i], ord);
    if (canon[i].empty()) continue;
    order.push_back({eng.degree_of(canon[i]), i});
  }
  std::stable_sort(order.begin(), order.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<ModVec> chosen;
  for (auto [d, i] : order) {
    eng.complete(d);
    if (eng.normal_form(canon[i]).empty()) continue;
    chosen.push_back(canon[i]);
    eng.add(canon[i]);
  }
  return chosen;
}

std::vector<Polynomial> minimal_generators(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<ModVec> vs;
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw UsageError("minimal_generators: '" + g.to_string() + "' is not homogeneous");
    vs.push_back(embed(g, 0));
  }
  return to_polys(ring, minimal_generators(ring, {0}, vs));
}

std::vector<ModVec> syzygies(const RingPtr& ring, const std::vector<int>& target_twists,
                             const std::vector<int>& source_twists, const std::vector<ModVec>& columns, bool minimal) {
  if (columns.size() != source_twists.size()) throw UsageError("syzygies: one twist per column is required");
  if (columns.empty()) return {};
  const auto q = static_cast<std::uint32_t>(target_twists.size());
  std::vector<int> shifts(target_twists);
  shifts.insert(shifts.end(), source_twists.begin(), source_twists.end());
  ModuleOrder ord(ring->order(), q);
  ModuleGroebnerEngine eng(ring, ord, shifts);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    ModVec v = columns[c];
    for (const auto& t : v)
      if (t.comp >= q) throw UsageError("syzygies: column entry beyond the target rank");
    v.push_back({ring->one(), q + static_cast<std::uint32_t>(c), 1});
    eng.add(std::move(v));
  }
  eng.complete();
  std::vector<ModVec> out;
  for (const auto& g : eng.basis()) {
    if (g.front().comp < q) continue;
    ModVec s = g;
    for (auto& t : s) t.comp -= q;
    canonicalize(s, ModuleOrder(ring->order()));
    out.push_back(std::move(s));
  }
  if (minimal) out = minimal_generators(ring, source_twists, out);
  return out;
}

std::vector<Polynomial> ring_map_kernel(const RingPtr& source, const std::vector<Polynomial>& images) {
  if (images.size() != source->size())
    throw UsageError("ring_map_kernel: expected " + std::to_string(source->size()) + " images, got " +
                     std::to_string(images.size()));
  RingPtr base = images.front().ring();
  std::optional<int> beta;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& f = images[i];
    if (f.ring() != base && !(*f.ring() == *base)) throw UsageError("ring_map_kernel: images live in different rings");
    if (f.is_zero()) continue;
    auto d = f.homogeneous_degree();
    if (!d) throw UsageError("ring_map_kernel: image of " + source->name(i) + " is not homogeneous");
    if (*d % source->degree(i) != 0 || *d == 0)
      throw UsageError("ring_map_kernel: image of " + source->name(i) + " has degree " + std::to_string(*d) +
                       ", not a positive multiple of " + std::to_string(source->degree(i)));
    int b = *d / source->degree(i);
    if (beta && *beta != b)
      throw UsageError("ring_map_kernel: image of " + source->name(i) + " breaks the common degree scaling");
    beta = b;
  }
  int scale = beta.value_or(1);
  std::vector<WeightedRing::Variable> vars = base->variables();
  for (const auto& v : source->variables()) {
    if (base->index_of(v.name)) throw UsageError("ring_map_kernel: variable '" + v.name + "' appears in both rings");
    vars.push_back({v.name, v.degree * scale});
  }
  auto graph = std::make_shared<const WeightedRing>(vars, base->size());
  ModuleGroebnerEngine eng(graph, ModuleOrder(graph->order()), {0});
  for (std::size_t i = 0; i < images.size(); ++i) {
    Polynomial x = Polynomial::variable(graph, base->size() + i);
    eng.add(embed(x - change_ring(images[i], graph), 0));
  }
  eng.complete();
  std::vector<Polynomial> kernel;
  for (const auto& g : eng.basis()) {
    bool uses_base = false;
    for (std::size_t v = 0; v < base->size(); ++v) uses_base = uses_base || g.front().monomial[v] > 0;
    if (uses_base) continue;
    std::vector<Polynomial::Term> terms;
    for (const auto& t : g) {
      std::vector<int> e(source->size());
      for (std::size_t v = 0; v < source->size(); ++v) e[v] = t.monomial[base->size() + v];
      terms.push_back({source->monomial(e), t.coefficient});
    }
    kernel.push_back(Polynomial::from_terms(source, std::move(terms)));
  }
  return minimal_generators(source, kernel);
}

}  // namespace wps

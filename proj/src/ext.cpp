#include "wps/ext.hpp"

#include <algorithm>

#include "wps/betti.hpp"
#include "wps/hilbert.hpp"

namespace wps {

namespace {

void require_complete(const FreeResolution& res, const char* who) {
  if (!res.complete()) throw UsageError(std::string(who) + ": the resolution is truncated");
  if (!res.minimal()) throw UsageError(std::string(who) + ": the resolution is not minimal");
}

std::vector<int> dual_twists(const GradedFreeModule& f, int shift) {
  std::vector<int> t;
  for (int a : f.twists()) t.push_back(shift - a);
  return t;
}

// Generators of Ext^i as elements of F_i^*, plus the image they are taken modulo.
struct Homology {
  std::vector<int> twists;
  std::vector<ModVec> gens, image;
};

Homology homology(const FreeResolution& res, std::size_t i) {
  const RingPtr& ring = res.ring();
  const int shift = ring->total_weight();
  Homology h;
  h.twists = dual_twists(res.module(i), shift);
  std::vector<ModVec> ker;
  if (i + 1 <= res.length() && res.module(i + 1).rank() > 0) {
    auto up = res.map(i + 1).dual(shift);  // F_i^* -> F_{i+1}^*
    ker = syzygies(ring, up.target().twists(), up.source().twists(), up.columns(), true);
  } else {
    for (std::size_t c = 0; c < h.twists.size(); ++c) ker.push_back({{ring->one(), static_cast<std::uint32_t>(c), 1}});
  }
  if (i >= 1) h.image = res.map(i).dual(shift).columns();
  h.gens = minimal_generators(ring, h.twists, ker, h.image);
  return h;
}

bool vanishes(const FreeResolution& res, int i) {
  if (i < 0 || static_cast<std::size_t>(i) > res.projective_dimension()) return true;
  auto c = codimension(graded_ranks(res));
  return !c || i < *c;
}

}  // namespace

GradedFreeMap ext_presentation(const FreeResolution& res, int i, const ExtOptions& options) {
  require_complete(res, "ext_presentation");
  const RingPtr& ring = res.ring();
  const int shift = ring->total_weight();
  if (!options.force_general && vanishes(res, i))
    return GradedFreeMap::zero(ring, GradedFreeModule(), GradedFreeModule());
  if (i < 0 || static_cast<std::size_t>(i) > res.length() || res.module(static_cast<std::size_t>(i)).rank() == 0)
    return GradedFreeMap::zero(ring, GradedFreeModule(), GradedFreeModule());
  const auto ui = static_cast<std::size_t>(i);
  if (!options.force_general && ui == res.projective_dimension() && ui >= 1)
    return prune(res.map(ui).dual(shift));
  auto h = homology(res, ui);
  const auto m = h.gens.size();
  std::vector<int> gen_twists;
  for (const auto& g : h.gens) gen_twists.push_back(*homogeneous_degree(g, h.twists));
  if (m == 0) return GradedFreeMap::zero(ring, GradedFreeModule(), GradedFreeModule());
  // Relations among the chosen generators modulo the image.
  std::vector<ModVec> cols(h.gens);
  std::vector<int> col_twists(gen_twists);
  for (const auto& v : h.image) {
    if (v.empty()) continue;
    cols.push_back(v);
    col_twists.push_back(*homogeneous_degree(v, h.twists));
  }
  auto syz = syzygies(ring, h.twists, col_twists, cols, false);
  std::vector<ModVec> rel;
  ModuleOrder ord(ring->order());
  for (auto& s : syz) {
    ModVec r;
    for (const auto& t : s)
      if (t.comp < m) r.push_back(t);
    canonicalize(r, ord);
    if (!r.empty()) rel.push_back(std::move(r));
  }
  return prune(presentation(ring, GradedFreeModule(gen_twists), rel));
}

std::vector<int> ext_min_degrees(const FreeResolution& res, int i, const ExtOptions& options) {
  require_complete(res, "ext_min_degrees");
  if (!options.force_general && vanishes(res, i)) return {};
  if (i < 0 || static_cast<std::size_t>(i) > res.length() || res.module(static_cast<std::size_t>(i)).rank() == 0)
    return {};
  std::vector<int> out;
  const auto ui = static_cast<std::size_t>(i);
  if (!options.force_general && ui == res.projective_dimension()) {
    out = ext_presentation(res, i, options).target().twists();
  } else {
    auto h = homology(res, ui);
    for (const auto& g : h.gens) out.push_back(*homogeneous_degree(g, h.twists));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, int> local_cohomology_top_degrees(const FreeResolution& res, const ExtOptions& options) {
  require_complete(res, "local_cohomology_top_degrees");
  const int top = static_cast<int>(res.ring()->size());
  std::map<int, int> a;
  for (int j = 0; j <= top; ++j) {
    auto degs = ext_min_degrees(res, j, options);
    if (!degs.empty()) a[top - j] = -degs.front();
  }
  return a;
}

}  // namespace wps

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wps/module.hpp"
#include "wps/polynomial.hpp"

namespace wps {

/// Incremental Buchberger for homogeneous submodules of S^r.
///
/// Inputs and S-pairs are processed degree by degree (normal strategy) with
/// the Gebauer-Moeller criteria; the product criterion is only used for
/// ideals (rank 1). After complete(D) the basis is a Groebner basis in all
/// degrees <= D, and more generators may still be added. Degrees are twisted:
/// deg(m * e_c) = deg(m) + shifts[c].
class ModuleGroebnerEngine {
 public:
  ModuleGroebnerEngine(RingPtr ring, ModuleOrder order, std::vector<int> shifts);

  /// Queues a homogeneous generator (any scaling, canonical order not required).
  void add(ModVec v);
  void complete(std::optional<int> max_degree = std::nullopt);

  /// Full reduction against the current basis.
  ModVec normal_form(ModVec v) const;
  /// Interreduced, monic, sorted by ascending lead term.
  std::vector<ModVec> reduced_basis() const;

  const std::vector<ModVec>& basis() const { return basis_; }
  const RingPtr& ring() const { return ring_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<int>& shifts() const { return shifts_; }
  std::optional<int> next_degree() const;
  /// Twisted degree of a homogeneous element; throws on zero or mixed input.
  int degree_of(const ModVec& v) const;

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  const ModTerm& lead(std::size_t i) const { return basis_[i].front(); }
  std::optional<std::size_t> find_divisor(const Monomial& m, std::uint32_t comp,
                                          std::size_t skip = static_cast<std::size_t>(-1)) const;
  void insert(ModVec h);
  ModVec s_vector(const Pair& p) const;

  RingPtr ring_;
  ModuleOrder order_;
  std::vector<int> shifts_;
  std::vector<ModVec> basis_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::map<int, std::vector<Pair>> pairs_;
  std::map<int, std::vector<ModVec>> inputs_;
};

/// Groebner basis of a homogeneous ideal in the ring's own monomial order.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool reduced, std::optional<int> truncated_at);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool reduced() const { return reduced_; }
  /// Set when only degrees <= the value were completed.
  std::optional<int> truncated_at() const { return truncated_; }
  std::vector<Monomial> leading_monomials() const;

  /// Remainder of full division; throws UsageError for a foreign ring or order.
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.elements_ == b.elements_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  bool reduced_;
  std::optional<int> truncated_;
};

/// Reduced Groebner basis of the ideal spanned by `gens` (over `ring`, which
/// carries the order). A zero ideal gives an empty basis.
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                         std::optional<int> max_degree = std::nullopt);
GroebnerBasis buchberger(const std::vector<Polynomial>& gens);

/// S-polynomial of two nonzero polynomials (leading terms cancel).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of a submodule of S^r with generator twists `twists`.
class ModuleGroebnerBasis {
 public:
  ModuleGroebnerBasis(RingPtr ring, ModuleOrder order, std::vector<int> twists, std::vector<ModVec> elements);

  const RingPtr& ring() const { return ring_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<int>& twists() const { return twists_; }
  const std::vector<ModVec>& elements() const { return elements_; }
  ModVec normal_form(const ModVec& v) const;

 private:
  RingPtr ring_;
  ModuleOrder order_;
  std::vector<int> twists_;
  std::vector<ModVec> elements_;
};

/// Default order: ring order on monomials, higher component wins ties.
ModuleGroebnerBasis module_groebner(const RingPtr& ring, const std::vector<int>& twists, const std::vector<ModVec>& gens,
                                    std::optional<ModuleOrder> order = std::nullopt);

/// Minimal homogeneous generating subset, processed by ascending degree.
std::vector<Polynomial> minimal_generators(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// Elements of `gens` whose images minimally generate (span(gens) + span(modulo)) / span(modulo).
std::vector<ModVec> minimal_generators(const RingPtr& ring, const std::vector<int>& twists,
                                       const std::vector<ModVec>& gens, const std::vector<ModVec>& modulo = {});

/// Generators of the syzygy module {a : sum a_c * columns[c] = 0} in S^p with
/// twists source_twists, where columns live in S^q with twists target_twists.
/// With `minimal`, a minimal generating set is returned.
std::vector<ModVec> syzygies(const RingPtr& ring, const std::vector<int>& target_twists,
                             const std::vector<int>& source_twists, const std::vector<ModVec>& columns,
                             bool minimal = true);

/// Kernel of k[x_0..x_n] -> B, x_i -> images[i], for a graded ring B
/// (typically k[s,t]). Requires deg(images[i]) = beta * deg(x_i) for one
/// common beta; returns minimal generators in the source ring.
std::vector<Polynomial> ring_map_kernel(const RingPtr& source, const std::vector<Polynomial>& images);

}  // namespace wps

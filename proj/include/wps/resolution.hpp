#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wps/groebner.hpp"
#include "wps/module.hpp"

namespace wps {

/// F = S(-a_1) + ... + S(-a_r).
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> twists) : twists_(std::move(twists)) {}

  std::size_t rank() const { return twists_.size(); }
  int twist(std::size_t k) const { return twists_[k]; }
  const std::vector<int>& twists() const { return twists_; }

  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;

 private:
  std::vector<int> twists_;
};

/// Homogeneous map source -> target stored by columns; entry (k, l) is
/// homogeneous of degree source.twist(l) - target.twist(k) or zero.
class GradedFreeMap {
 public:
  /// Validates every entry degree; throws UsageError naming the bad entry.
  GradedFreeMap(RingPtr ring, GradedFreeModule source, GradedFreeModule target, std::vector<ModVec> columns);
  /// rows[k][l] is the entry in row k, column l.
  static GradedFreeMap from_rows(RingPtr ring, GradedFreeModule source, GradedFreeModule target,
                                 const std::vector<std::vector<Polynomial>>& rows);
  static GradedFreeMap zero(RingPtr ring, GradedFreeModule source, GradedFreeModule target);

  const RingPtr& ring() const { return ring_; }
  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  const std::vector<ModVec>& columns() const { return columns_; }
  const ModVec& column(std::size_t l) const { return columns_[l]; }
  Polynomial entry(std::size_t k, std::size_t l) const;

  /// Every nonzero entry lies in the irrelevant ideal.
  bool is_minimal() const;
  bool is_zero() const;
  /// this o first (apply `first`, then this).
  GradedFreeMap compose(const GradedFreeMap& first) const;
  /// Hom(-, S(-shift)) applied: target^* -> source^*, twists shift - a.
  GradedFreeMap dual(int shift) const;

  friend bool operator==(const GradedFreeMap& a, const GradedFreeMap& b);

 private:
  RingPtr ring_;
  GradedFreeModule source_, target_;
  std::vector<ModVec> columns_;
};

/// F_0 <- F_1 <- ... <- F_len; map(i) is the differential F_i -> F_{i-1}.
class FreeResolution {
 public:
  enum class Truncation { None, MaxLength, MaxTwist, TimeBudget };

  FreeResolution(RingPtr ring, GradedFreeModule f0, std::vector<GradedFreeMap> maps, bool minimal,
                 Truncation truncation);

  const RingPtr& ring() const { return ring_; }
  std::size_t length() const { return maps_.size(); }
  const GradedFreeModule& module(std::size_t i) const { return i == 0 ? f0_ : maps_[i - 1].source(); }
  /// Requires 1 <= i <= length().
  const GradedFreeMap& map(std::size_t i) const { return maps_.at(i - 1); }
  const std::vector<GradedFreeMap>& maps() const { return maps_; }
  bool minimal() const { return minimal_; }
  /// The kernel of the last map is zero.
  bool complete() const { return truncation_ == Truncation::None; }
  Truncation truncation() const { return truncation_; }
  /// Highest homological index with a nonzero module.
  std::size_t projective_dimension() const;

 private:
  RingPtr ring_;
  GradedFreeModule f0_;
  std::vector<GradedFreeMap> maps_;
  bool minimal_;
  Truncation truncation_;
};

std::string to_string(FreeResolution::Truncation t);

struct ResolveOptions {
  /// Highest homological degree to produce (F_0..F_max_length).
  std::optional<int> max_length;
  /// Drop generators of degree above this in every F_i.
  std::optional<int> max_twist;
  std::optional<double> time_budget_secs;
  /// Worker threads for the syzygy step of each level; 0 reads WPS_THREADS.
  unsigned threads = 0;
};

/// Statistics of the last non-minimal Schreyer frame, for diagnostics.
struct FrameStats {
  std::vector<std::size_t> frame_ranks;
  double frame_seconds = 0;
  double minimize_seconds = 0;
};

/// Minimal presentation of S/I: F_0 = S, one column per minimal generator.
GradedFreeMap presentation(const RingPtr& ring, const std::vector<Polynomial>& ideal_gens);
/// Presentation of F_0 / N for N spanned by `gens` inside the free module with twists `f0`.
GradedFreeMap presentation(const RingPtr& ring, const GradedFreeModule& f0, const std::vector<ModVec>& gens);

/// Minimal graded free resolution of coker(start).
FreeResolution resolve(const GradedFreeMap& start, const ResolveOptions& options = {}, FrameStats* stats = nullptr);
/// Gaussian cancellation of unit entries until every map is minimal.
FreeResolution minimize(const FreeResolution& res);
/// Minimal presentation of coker(map), cancelling unit entries.
GradedFreeMap prune(const GradedFreeMap& map);
/// Minimal generators of ker(map) as a map into map.source().
GradedFreeMap kernel(const GradedFreeMap& map);

}  // namespace wps

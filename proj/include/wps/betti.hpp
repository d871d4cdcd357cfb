#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "wps/resolution.hpp"

namespace wps {

/// beta_{i,j}: the number of generators of degree j in F_i, with the ring
/// that fixes w_i and w^i. Only nonzero entries are stored.
class BettiTable {
 public:
  explicit BettiTable(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }
  long value(int i, int j) const;
  void set(int i, int j, long v);
  void add(int i, int j, long v) { set(i, j, value(i, j) + v); }
  const std::map<std::pair<int, int>, long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Largest column index with a nonzero entry (-1 when empty).
  int length() const;
  long total(int i) const;
  std::optional<int> max_twist(int i) const;
  std::optional<int> min_twist(int i) const;
  /// Smallest and largest row index j - i over nonzero entries.
  std::pair<int, int> row_range() const;

  /// Macaulay2 layout: header of column indices, "r:" row labels, "." for zero.
  std::string render(bool with_totals = true) const;
  /// Reads the render() layout (a "total:" line is optional and checked).
  static BettiTable parse(const std::string& text, RingPtr ring);

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }

 private:
  RingPtr ring_;
  std::map<std::pair<int, int>, long> entries_;
};

/// Throws UsageError unless the resolution is minimal.
BettiTable betti(const FreeResolution& res);

/// Twists of the free modules without the minimality requirement.
BettiTable graded_ranks(const FreeResolution& res);

struct BettiResult {
  BettiTable table;
  FreeResolution::Truncation truncation = FreeResolution::Truncation::None;
  std::size_t length = 0;  // columns 0..length are final
  bool complete() const { return truncation == FreeResolution::Truncation::None; }
};

/// Minimal Betti numbers read off the Schreyer frame without minimizing it:
/// the frame rank in degree j minus the ranks of the scalar parts of the two
/// adjacent frame maps in degree j. Same truncation rules as resolve().
BettiResult resolve_betti(const GradedFreeMap& start, const ResolveOptions& options = {},
                          FrameStats* stats = nullptr);

}  // namespace wps

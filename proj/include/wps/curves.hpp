#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wps/betti.hpp"
#include "wps/resolution.hpp"

namespace wps {

/// The point [a:b] of P^1 in coordinates [s:t].
struct ProjectivePoint {
  Rational a, b;
};

struct DivisorPoint {
  ProjectivePoint point;
  int multiplicity = 1;
};

/// Effective divisor on P^1.
class RationalDivisor {
 public:
  RationalDivisor() = default;
  /// Throws UsageError for [0:0], repeated points or nonpositive multiplicities.
  explicit RationalDivisor(std::vector<DivisorPoint> points);
  /// [0:1], then [0:1] + [1:0]: degree 0, 1 or 2.
  static RationalDivisor coordinate_points(int degree);

  const std::vector<DivisorPoint>& points() const { return points_; }
  int degree() const;

 private:
  std::vector<DivisorPoint> points_;
};

/// k[s, t] with s and t of degree 1.
RingPtr binary_ring();

/// Sections of O(e) and its powers on P^1: sections[k] is a binary form of
/// degree e * deg(x_k) for the k-th variable of `ring`.
struct WeightedSeries {
  int e = 0;
  RingPtr ring;
  std::vector<Polynomial> sections;
};

/// Builds the ring from (weight, form) pairs in the given order.
WeightedSeries weighted_series(int e, const std::vector<std::pair<int, Polynomial>>& sections);

struct LogCompleteSeries {
  int e = 0;
  int d = 0;
  RationalDivisor divisor;
  std::vector<Polynomial> w1;  // forms of degree e vanishing on D
  std::vector<Polynomial> wd;  // complement of Sym_d(w1) in degree e * d
  /// Ring (1^{dim W_1}, d^{dim W_d}) with W_1 first.
  WeightedSeries series() const;
};

/// Requires e - deg D >= 1 and d >= 2.
LogCompleteSeries log_complete_series(int e, const RationalDivisor& divisor, int d);

/// Order of vanishing of a binary form at a point; -1 for the zero form.
int vanishing_order(const Polynomial& form, const ProjectivePoint& p);

/// Minimal generators of the kernel of S -> k[s, t].
std::vector<Polynomial> embedding_ideal(const WeightedSeries& series);

/// The ideal lies in m^2: no generator has a bare-variable term.
bool nondegenerate(const std::vector<Polynomial>& ideal);

/// R = sum_i H^0(O(e i)) as an S-module.
struct SectionModule {
  std::vector<Polynomial> generators;  // binary forms
  std::vector<int> degrees;            // R-degree of each generator
  GradedFreeMap presentation;          // minimal, F_0 twisted by `degrees`
  BettiTable betti;                    // of a complete resolution; resolve(presentation) gives the maps
};

/// Degree-by-degree greedy choice of monomial generators. Relations are
/// I_C e_l plus the degreewise kernel on standard monomials, and the
/// result is accepted only when its Hilbert series is (1 + (e-1) t) / (1 - t)^2.
SectionModule section_module(const WeightedSeries& series);

/// dim (e i + 1) of R_i minus dim (S/I)_i.
long q_module_dimension(const WeightedSeries& series, const GroebnerBasis& ideal_basis, int i);

/// q + d deg D for q = e - deg D - (2g + 1); throws when q < 0.
int predicted_np(int e, int deg_d, int d, int g = 0);

}  // namespace wps

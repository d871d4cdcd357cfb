#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wps/rational.hpp"
#include "wps/ring.hpp"

namespace wps {

/// Sparse polynomial over a WeightedRing with exact rational coefficients.
///
/// Terms are kept sorted descending in the ring's monomial order and never
/// carry a zero coefficient, so equality, printing and hashing are canonical.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coefficient;
  };

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial term(RingPtr ring, const Monomial& m, const Rational& c = 1);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Takes terms already sorted descending, distinct and nonzero.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  /// Grammar: terms joined by + or -, each an optional integer or fraction
  /// coefficient followed by '*'-separated powers `name` or `name^k`.
  static Polynomial parse(RingPtr ring, std::string_view text);
  std::string to_string() const;

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  const Term& leading_term() const { return terms_.front(); }

  /// Weighted degree if every term shares it; nullopt for zero or mixed.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// this + c * m * other, one merge pass.
  Polynomial add_scaled(const Rational& c, const Monomial& m, const Polynomial& other) const;
  Polynomial pow(unsigned k) const;

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Image of p under x_i -> images[i]; all images live in one target ring.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

/// Re-expresses p in `target`, matching variables by name (missing ones must not occur).
Polynomial change_ring(const Polynomial& p, const RingPtr& target);

}  // namespace wps

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wps {

/// Misuse of the API: mixed rings, inhomogeneous input, malformed data.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxVariables = 24;

/// Exponent vector with cached weighted degree and support bitmask.
///
/// The weighted degree is fixed when the monomial is built from a ring
/// (WeightedRing::monomial) and carried through products and quotients.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  Exponent operator[](std::size_t i) const { return exp_[i]; }
  int degree() const { return degree_; }
  std::uint32_t support() const { return mask_; }
  bool is_one() const { return mask_ == 0; }

  /// True iff this divides `other`.
  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  /// Standard (unweighted) total degree.
  int total_degree() const {
    int s = 0;
    for (auto e : exp_) s += e;
    return s;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp_[i] = static_cast<Exponent>(a.exp_[i] + b.exp_[i]);
    r.degree_ = a.degree_ + b.degree_;
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  /// Quotient a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = static_cast<Exponent>(a.exp_[i] - b.exp_[i]);
      if (r.exp_[i] != 0) r.mask_ |= (1u << i);
    }
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

 private:
  friend class WeightedRing;
  std::array<Exponent, kMaxVariables> exp_{};
  std::int32_t degree_ = 0;
  std::uint32_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial order on a fixed set of weighted variables.
///
/// WeightedGrevlex compares weighted degree first and breaks ties reverse
/// lexicographically (the last differing variable with the smaller exponent
/// wins). BlockElimination compares the first `block` variables by weighted
/// grevlex, then the remaining ones, so any monomial involving the block
/// exceeds every monomial avoiding it.
class MonomialOrder {
 public:
  enum class Kind { WeightedGrevlex, BlockElimination };

  static MonomialOrder weighted_grevlex(std::vector<int> weights);
  static MonomialOrder block_elimination(std::vector<int> weights, std::size_t block);

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  std::size_t size() const { return weights_.size(); }

  int compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::WeightedGrevlex) return grevlex(a, b, 0, weights_.size(), a.degree(), b.degree());
    int da = 0, db = 0;
    for (std::size_t i = 0; i < block_; ++i) {
      da += a[i] * weights_[i];
      db += b[i] * weights_[i];
    }
    if (int c = grevlex(a, b, 0, block_, da, db)) return c;
    return grevlex(a, b, block_, weights_.size(), a.degree() - da, b.degree() - db);
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_ && a.weights_ == b.weights_;
  }

 private:
  static int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, int da, int db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  Kind kind_ = Kind::WeightedGrevlex;
  std::size_t block_ = 0;
  std::vector<int> weights_;
};

/// Polynomial ring k[x_0..x_n] with positive integer variable degrees.
class WeightedRing {
 public:
  struct Variable {
    std::string name;
    int degree = 1;
    friend bool operator==(const Variable&, const Variable&) = default;
  };

  /// Weighted grevlex ring.
  explicit WeightedRing(std::vector<Variable> variables);
  /// Ring whose first `eliminate` variables form an elimination block.
  WeightedRing(std::vector<Variable> variables, std::size_t eliminate);

  static std::shared_ptr<const WeightedRing> make(std::vector<Variable> variables);
  /// Variables x0..x{k-1} with the given degrees.
  static std::shared_ptr<const WeightedRing> from_degrees(std::span<const int> degrees, std::string_view prefix = "x");

  std::size_t size() const { return variables_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::string& name(std::size_t i) const { return variables_[i].name; }
  int degree(std::size_t i) const { return variables_[i].degree; }
  const std::vector<int>& degrees() const { return degrees_; }
  /// Degrees sorted ascending (d_0 <= ... <= d_n).
  const std::vector<int>& sorted_degrees() const { return sorted_; }
  /// |d|, the sum of all variable degrees.
  int total_weight() const { return total_weight_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Monomial one() const { return Monomial(); }
  Monomial variable(std::size_t i) const;
  Monomial monomial(std::span<const int> exponents) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  Monomial gcd(const Monomial& a, const Monomial& b) const;
  std::vector<int> exponents(const Monomial& m) const;

  friend bool operator==(const WeightedRing& a, const WeightedRing& b) {
    return a.variables_ == b.variables_ && a.order_ == b.order_;
  }

 private:
  Monomial rebuild(std::array<Monomial::Exponent, kMaxVariables> exps) const;

  std::vector<Variable> variables_;
  std::vector<int> degrees_;
  std::vector<int> sorted_;
  int total_weight_ = 0;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const WeightedRing>;

/// Lowest and highest syzygy degree of the residue field in homological
/// degree i: w_i sums the i smallest variable degrees, w^i the i largest.
struct KoszulWeights {
  int lowest = 0;   // w_i
  int highest = 0;  // w^i
};

/// Requires 0 <= i <= number of variables; throws std::out_of_range otherwise.
KoszulWeights koszul_weights(const WeightedRing& ring, int i);

/// All monomials of weighted degree exactly j, descending in the ring order.
std::vector<Monomial> homogeneous_component_basis(const WeightedRing& ring, int j);

}  // namespace wps

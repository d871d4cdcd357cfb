#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wps {

/// Exact rational number in lowest terms with positive denominator.
///
/// Values that fit in 64-bit numerator/denominator are kept inline; larger
/// values spill into a shared, immutable GMP rational. Copies are cheap and
/// the type is safe to share between threads.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& value);

  /// Parses "n", "-n" or "n/d" (optional leading sign, decimal digits).
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// a - b*c; the hot step of every reduction.
  static Rational mul_sub(const Rational& a, const Rational& b, const Rational& c);

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class&& value);
  bool small() const { return !big_; }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace wps

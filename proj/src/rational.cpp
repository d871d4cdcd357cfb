#include "wps/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace wps {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

bool fits(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

mpz_class mpz_from_i128(i128 v) {
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class r = (hi << 64) + lo;
  return v < 0 ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) {
  mpq_class v(value);
  v.canonicalize();
  *this = from_mpq(std::move(v));
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q;
  q.get_num() = mpz_from_i128(num);
  q.get_den() = mpz_from_i128(den);
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(mpq_class&& value) {
  Rational r;
  if (value.get_num().fits_slong_p() && value.get_den().fits_slong_p()) {
    long n = value.get_num().get_si();
    long d = value.get_den().get_si();
    if (n != std::numeric_limits<long>::min()) {
      r.num_ = n;
      r.den_ = d;
      return r;
    }
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(value));
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  num = trim(num);
  den = trim(den);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  mpq_class q;
  q.get_num() = mpz_class(n, 10);
  q.get_den() = mpz_class(std::string(den), 10);
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return from_mpq(std::move(q));
}

bool Rational::is_integer() const { return small() ? den_ == 1 : big_->get_den() == 1; }

int Rational::sign() const {
  if (small()) return (num_ > 0) - (num_ < 0);
  return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
  if (!small()) return *big_;
  mpq_class q;
  q.get_num() = mpz_from_i128(num_);
  q.get_den() = mpz_from_i128(den_);
  return q;
}

mpz_class Rational::numerator() const { return small() ? mpz_from_i128(num_) : mpz_class(big_->get_num()); }
mpz_class Rational::denominator() const { return small() ? mpz_from_i128(den_) : mpz_class(big_->get_den()); }

std::string Rational::to_string() const {
  if (small()) return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  return big_->get_str(10);
}

Rational Rational::operator-() const {
  if (small()) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_mpq(mpq_class(-*big_));
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits(s)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(s);
        return r;
      }
    }
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::from_mpq(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    std::uint64_t g1 = gcd64(uabs(a.num_), static_cast<std::uint64_t>(b.den_));
    std::uint64_t g2 = gcd64(uabs(b.num_), static_cast<std::uint64_t>(a.den_));
    i128 n = static_cast<i128>(a.num_ / static_cast<std::int64_t>(g1)) * (b.num_ / static_cast<std::int64_t>(g2));
    i128 d = static_cast<i128>(a.den_ / static_cast<std::int64_t>(g2)) * (b.den_ / static_cast<std::int64_t>(g1));
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    return Rational::from_wide(n, d);
  }
  return Rational::from_mpq(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  if (b.small()) {
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
  }
  return Rational::from_mpq(mpq_class(a.to_mpq() / b.to_mpq()));
}

Rational Rational::mul_sub(const Rational& a, const Rational& b, const Rational& c) {
  if (a.small() && b.small() && c.small() && a.den_ == 1 && b.den_ == 1 && c.den_ == 1) {
    i128 v = static_cast<i128>(a.num_) - static_cast<i128>(b.num_) * c.num_;
    if (fits(v)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(v);
      return r;
    }
  }
  return a - b * c;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.small() != b.small()) return false;  // canonical: big values never fit small
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.small() && b.small()) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace wps

#include "wps/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wps {

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw UsageError("polynomials live in different rings");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) { return term(std::move(ring), Monomial(), c); }

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  auto m = ring->variable(i);
  return term(std::move(ring), m, 1);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& ord = p.ring_->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.front().monomial.degree();
  for (const auto& t : terms_)
    if (t.monomial.degree() != d) return std::nullopt;
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return Rational();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial Polynomial::add_scaled(const Rational& c, const Monomial& m, const Polynomial& other) const {
  check_ring(other);
  if (c.is_zero() || other.is_zero()) return *this;
  const auto& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end()) {
      out.push_back(*i++);
      continue;
    }
    Monomial mj = m * j->monomial;
    int cmp = i == terms_.end() ? -1 : ord.compare(i->monomial, mj);
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.push_back({mj, c * j->coefficient});
      ++j;
    } else {
      Rational s = i->coefficient + c * j->coefficient;
      if (!s.is_zero()) out.push_back({mj, std::move(s)});
      ++i;
      ++j;
    }
  }
  return from_sorted_terms(ring_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.add_scaled(1, Monomial(), b); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.add_scaled(-1, Monomial(), b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const Polynomial& outer = a.size() <= b.size() ? a : b;
  const Polynomial& inner = a.size() <= b.size() ? b : a;
  Polynomial acc(a.ring_);
  for (const auto& t : outer.terms_) acc = acc.add_scaled(t.coefficient, t.monomial, inner);
  return acc;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c.is_zero()) return Polynomial(p.ring_);
  Polynomial r(p);
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coefficient == b.terms_[i].coefficient))
      return false;
  return a.ring_ == b.ring_ || *a.ring_ == *b.ring_;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial run() {
    std::vector<Polynomial::Term> terms;
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(sign));
      skip();
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial::Term term(int sign) {
    Rational coef = sign;
    std::vector<int> exps(ring_->size(), 0);
    bool have_factor = false;
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string num = digits();
        skip();
        std::string den = "1";
        if (peek() == '/') {
          ++pos_;
          skip();
          den = digits();
          if (den.empty()) fail("missing denominator");
        }
        coef *= Rational::parse(num + "/" + den);
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto idx = ring_->index_of(name);
        if (!idx) fail("unknown variable '" + name + "'");
        skip();
        int power = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          std::string p = digits();
          if (p.empty()) fail("missing exponent");
          power = std::stoi(p);
        }
        exps[*idx] += power;
      } else {
        fail(have_factor ? "expected a factor after '*'" : "expected a coefficient or variable");
      }
      have_factor = true;
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return {ring_->monomial(exps), coef};
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) { return Parser(ring, text).run(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    if (c.sign() < 0) {
      os << (first ? "-" : "-");
      c = -c;
    } else if (!first) {
      os << "+";
    }
    first = false;
    bool mono_one = t.monomial.is_one();
    if (!c.is_one() || mono_one) {
      os << c.to_string();
      if (!mono_one) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      int e = t.monomial[i];
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->name(i);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.ring()->size()) throw UsageError("substitute: one image per variable is required");
  if (images.empty()) throw UsageError("substitute: empty image list");
  RingPtr target = images.front().ring();
  Polynomial acc(target);
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.monomial[i] > 0) prod = prod * images[i].pow(t.monomial[i]);
    acc += prod;
  }
  return acc;
}

Polynomial change_ring(const Polynomial& p, const RingPtr& target) {
  std::vector<std::size_t> map(p.ring()->size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    auto idx = target->index_of(p.ring()->name(i));
    map[i] = idx ? *idx : static_cast<std::size_t>(-1);
  }
  std::vector<Polynomial::Term> terms;
  for (const auto& t : p.terms()) {
    std::vector<int> e(target->size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (map[i] == static_cast<std::size_t>(-1))
        throw UsageError("change_ring: variable '" + p.ring()->name(i) + "' missing from target ring");
      e[map[i]] = t.monomial[i];
    }
    terms.push_back({target->monomial(e), t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace wps

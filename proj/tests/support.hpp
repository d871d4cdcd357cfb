#pragma once

#include <string>
#include <vector>

#include "wps/polynomial.hpp"

namespace wps::testing {

inline RingPtr ring_of(std::vector<int> degrees) { return WeightedRing::from_degrees(degrees); }

inline Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

// All 2x2 minors of a 2-row matrix given by its rows.
inline std::vector<Polynomial> two_by_two_minors(const std::vector<Polynomial>& top, const std::vector<Polynomial>& bot) {
  std::vector<Polynomial> out;
  for (std::size_t a = 0; a < top.size(); ++a)
    for (std::size_t b = a + 1; b < top.size(); ++b) out.push_back(top[a] * bot[b] - top[b] * bot[a]);
  return out;
}

// The degree-(1^2,2^2) rational curve: minors of [[x0, x1^2, x2], [x1, x2, x3]].
inline std::vector<Polynomial> small_curve(const RingPtr& r) {
  return two_by_two_minors({P(r, "x0"), P(r, "x1^2"), P(r, "x2")}, {P(r, "x1"), P(r, "x2"), P(r, "x3")});
}

// The degree-(1^8,2^2) rational curve: minors of the 2x9 matrix with x7^2 on top.
inline std::vector<Polynomial> octic_curve(const RingPtr& r) {
  std::vector<Polynomial> top, bot;
  for (int i = 0; i < 9; ++i) {
    top.push_back(i == 7 ? P(r, "x7^2") : P(r, "x" + std::to_string(i)));
    bot.push_back(P(r, "x" + std::to_string(i + 1)));
  }
  return two_by_two_minors(top, bot);
}

}  // namespace wps::testing

#include "wps/demos.hpp"

namespace wps {

namespace {

Demo log_complete_demo(std::string id, std::string summary, int e, int deg_d, int d) {
  Demo demo;
  demo.id = std::move(id);
  demo.summary = std::move(summary);
  demo.log_complete = log_complete_series(e, RationalDivisor::coordinate_points(deg_d), d);
  demo.series = demo.log_complete->series();
  return demo;
}

Demo explicit_demo(std::string id, std::string summary, int e, const std::vector<std::pair<int, const char*>>& secs) {
  Demo demo;
  demo.id = std::move(id);
  demo.summary = std::move(summary);
  std::vector<std::pair<int, Polynomial>> pairs;
  for (const auto& [w, f] : secs) pairs.push_back({w, Polynomial::parse(binary_ring(), f)});
  demo.series = weighted_series(e, pairs);
  return demo;
}

}  // namespace

const char* genus_two_table_text() {
  return "       0  1   2   3   4   5   6  7 8\n"
         "total: 1 34 152 322 392 286 124 31 4\n"
         "    0: 1  .   .   .   .   .   .  . .\n"
         "    1: . 19  58  75  44   5   .  . .\n"
         "    2: . 14  80 186 220 136  26  2 .\n"
         "    3: .  1  14  61 128 145  98 23 2\n"
         "    4: .  .   .   .   .   .   .  6 2\n";
}

const std::vector<std::string>& demo_ids() {
  static const std::vector<std::string> ids{"example-2.1", "example-2.2", "example-2.3",
                                            "example-4.11", "remark-2.5-a", "remark-2.5-b"};
  return ids;
}

Demo find_demo(const std::string& id) {
  if (id == "example-2.1")
    return log_complete_demo(id, "P^1 in P(1^2,2^2): e = 2, D = [0:1], d = 2", 2, 1, 2);
  if (id == "example-2.2")
    return log_complete_demo(id, "P^1 in P(1^8,2^2): e = 8, D = [0:1], d = 2", 8, 1, 2);
  if (id == "example-4.11")
    return log_complete_demo(id, "P^1 in P(1^4,2^4): e = 5, D = [0:1] + [1:0], d = 2", 5, 2, 2);
  if (id == "remark-2.5-a")
    return explicit_demo(id, "W = <s^2, st, st^3, t^4, t^6> with weights 1,1,2,2,3", 2,
                         {{1, "s^2"}, {1, "s*t"}, {2, "s*t^3"}, {2, "t^4"}, {3, "t^6"}});
  if (id == "remark-2.5-b")
    return explicit_demo(id, "W = <s^2, st, st^5, t^6> with weights 1,1,3,3", 2,
                         {{1, "s^2"}, {1, "s*t"}, {3, "s*t^5"}, {3, "t^6"}});
  if (id == "example-2.3") {
    Demo demo;
    demo.id = id;
    demo.summary = "genus 2 curve in P(1^8,2^2), Betti table given as input";
    demo.table = BettiTable::parse(genus_two_table_text(), WeightedRing::from_degrees(std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2}));
    demo.genus = 2;
    // deg L = 10, one point, d = 2.
    demo.predicted_np = wps::predicted_np(10, 1, 2, 2);
    return demo;
  }
  std::string known;
  for (const auto& k : demo_ids()) known += (known.empty() ? "" : ", ") + k;
  throw UsageError("unknown demo '" + id + "' (known: " + known + ")");
}

}  // namespace wps

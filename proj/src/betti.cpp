#include "wps/betti.hpp"

#include <algorithm>
#include <sstream>

namespace wps {

long BettiTable::value(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, long v) {
  if (v < 0) throw UsageError("Betti numbers are nonnegative");
  if (v == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = v;
}

int BettiTable::length() const {
  int l = -1;
  for (const auto& [k, v] : entries_) l = std::max(l, k.first);
  return l;
}

long BettiTable::total(int i) const {
  long s = 0;
  for (const auto& [k, v] : entries_)
    if (k.first == i) s += v;
  return s;
}

std::optional<int> BettiTable::max_twist(int i) const {
  std::optional<int> m;
  for (const auto& [k, v] : entries_)
    if (k.first == i) m = m ? std::max(*m, k.second) : k.second;
  return m;
}

std::optional<int> BettiTable::min_twist(int i) const {
  std::optional<int> m;
  for (const auto& [k, v] : entries_)
    if (k.first == i) m = m ? std::min(*m, k.second) : k.second;
  return m;
}

std::pair<int, int> BettiTable::row_range() const {
  if (entries_.empty()) return {0, -1};
  int lo = entries_.begin()->first.second - entries_.begin()->first.first, hi = lo;
  for (const auto& [k, v] : entries_) {
    lo = std::min(lo, k.second - k.first);
    hi = std::max(hi, k.second - k.first);
  }
  return {lo, hi};
}

std::string BettiTable::render(bool with_totals) const {
  const int cols = std::max(length() + 1, 1);
  auto [lo, hi] = row_range();
  if (entries_.empty()) lo = hi = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header;
  for (int i = 0; i < cols; ++i) header.push_back(std::to_string(i));
  if (with_totals) {
    labels.push_back("total:");
    std::vector<std::string> row;
    for (int i = 0; i < cols; ++i) row.push_back(std::to_string(total(i)));
    cells.push_back(row);
  }
  for (int r = lo; r <= hi; ++r) {
    labels.push_back(std::to_string(r) + ":");
    std::vector<std::string> row;
    for (int i = 0; i < cols; ++i) {
      long v = value(i, i + r);
      row.push_back(v ? std::to_string(v) : ".");
    }
    cells.push_back(row);
  }
  std::size_t lw = 0;
  for (const auto& l : labels) lw = std::max(lw, l.size());
  std::vector<std::size_t> w(static_cast<std::size_t>(cols));
  for (int i = 0; i < cols; ++i) {
    w[static_cast<std::size_t>(i)] = header[static_cast<std::size_t>(i)].size();
    for (const auto& row : cells) w[static_cast<std::size_t>(i)] = std::max(w[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(i)].size());
  }
  std::ostringstream os;
  auto line = [&](const std::string& label, const std::vector<std::string>& row) {
    std::string out = std::string(lw - label.size(), ' ') + label;
    for (std::size_t i = 0; i < row.size(); ++i) out += " " + std::string(w[i] - row[i].size(), ' ') + row[i];
    while (!out.empty() && out.back() == ' ') out.pop_back();
    os << out << "\n";
  };
  line("", header);
  for (std::size_t k = 0; k < labels.size(); ++k) line(labels[k], cells[k]);
  return os.str();
}

BettiTable BettiTable::parse(const std::string& text, RingPtr ring) {
  BettiTable t(std::move(ring));
  std::istringstream in(text);
  std::string line;
  std::vector<int> header;
  std::optional<std::vector<long>> totals;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw UsageError("Betti table line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string s; ls >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    if (header.empty()) {
      for (const auto& s : tok) {
        try {
          std::size_t used = 0;
          header.push_back(std::stoi(s, &used));
          if (used != s.size()) fail("bad column index '" + s + "'");
        } catch (const std::logic_error&) {
          fail("bad column index '" + s + "'");
        }
      }
      continue;
    }
    const std::string& label = tok.front();
    if (label.back() != ':') fail("row label '" + label + "' must end with ':'");
    if (tok.size() - 1 != header.size())
      fail("expected " + std::to_string(header.size()) + " entries, found " + std::to_string(tok.size() - 1));
    std::vector<long> vals;
    for (std::size_t k = 1; k < tok.size(); ++k) {
      if (tok[k] == ".") {
        vals.push_back(0);
        continue;
      }
      try {
        std::size_t used = 0;
        long v = std::stol(tok[k], &used);
        if (used != tok[k].size() || v < 0) fail("bad entry '" + tok[k] + "'");
        vals.push_back(v);
      } catch (const std::logic_error&) {
        fail("bad entry '" + tok[k] + "'");
      }
    }
    if (label == "total:") {
      totals = vals;
      continue;
    }
    int row = 0;
    try {
      std::size_t used = 0;
      row = std::stoi(label.substr(0, label.size() - 1), &used);
      if (used + 1 != label.size()) fail("bad row label '" + label + "'");
    } catch (const std::logic_error&) {
      fail("bad row label '" + label + "'");
    }
    for (std::size_t k = 0; k < vals.size(); ++k) t.set(header[k], header[k] + row, vals[k] + t.value(header[k], header[k] + row));
  }
  if (header.empty()) throw UsageError("Betti table: no header line");
  if (totals)
    for (std::size_t k = 0; k < header.size(); ++k)
      if ((*totals)[k] != t.total(header[k]))
        throw UsageError("Betti table: total of column " + std::to_string(header[k]) + " does not match its entries");
  return t;
}

BettiTable graded_ranks(const FreeResolution& res) {
  BettiTable t(res.ring());
  for (std::size_t i = 0; i <= res.length(); ++i)
    for (int a : res.module(i).twists()) t.add(static_cast<int>(i), a, 1);
  return t;
}

BettiTable betti(const FreeResolution& res) {
  if (!res.minimal()) throw UsageError("betti: the resolution is not minimal");
  for (const auto& m : res.maps())
    if (!m.is_minimal()) throw UsageError("betti: a differential has a unit entry");
  return graded_ranks(res);
}

}  // namespace wps

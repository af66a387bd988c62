#pragma once

// Brute-force reference computations for the tests. They read CoverData
// directly and share no code with the library's solver or defect counting.

#include <cstdint>
#include <map>
#include <vector>

#include "defcor/cover.hpp"

namespace oracle {

using defcor::Cover;

inline std::vector<int> defects(const Cover& c, const std::vector<int>& colors) {
  const auto& d = c.data();
  std::vector<int> out(d.list_sizes.size(), 0);
  for (std::size_t e = 0; e < d.matchings.size(); ++e) {
    const auto& edge = d.base.edges()[e];
    for (auto [a, b] : d.matchings[e]) {
      if (colors[edge.u] == a && colors[edge.v] == b) {
        ++out[edge.u];
        ++out[edge.v];
      }
    }
  }
  return out;
}

/// Every total coloring whose defects respect caps[v], in lexicographic
/// order.
inline std::vector<std::vector<int>> colorings(const Cover& c, const std::vector<int>& caps,
                                               const std::map<int, int>& pins = {}) {
  const int n = c.num_vertices();
  std::vector<std::vector<int>> out;
  std::vector<int> colors(n, 0);
  for (auto [v, k] : pins) colors[v] = k;
  for (int v = 0; v < n; ++v) {
    if (c.list_size(v) == 0) return out;
  }
  while (true) {
    const auto def = defects(c, colors);
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = def[v] <= caps[v];
    if (ok) out.push_back(colors);
    int v = n - 1;
    while (v >= 0) {
      if (pins.count(v)) {
        --v;
        continue;
      }
      if (++colors[v] < c.list_size(v)) break;
      colors[v] = 0;
      --v;
    }
    if (v < 0) break;
  }
  return out;
}

inline std::vector<std::vector<int>> colorings(const Cover& c, int d) {
  return colorings(c, std::vector<int>(c.num_vertices(), d));
}

}  // namespace oracle

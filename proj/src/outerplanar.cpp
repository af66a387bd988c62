#include "defcor/outerplanar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "defcor/solver.hpp"

namespace defcor {

namespace {

// Chord intervals over cycle positions must be laminar.
void check_chords_laminar(std::vector<std::pair<int, int>> intervals) {
  std::sort(intervals.begin(), intervals.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  std::vector<std::pair<int, int>> open;
  for (const auto& iv : intervals) {
    while (!open.empty() && open.back().second <= iv.first) open.pop_back();
    if (!open.empty() && iv.second > open.back().second) {
      std::ostringstream msg;
      msg << "chords at cycle positions (" << open.back().first << "," << open.back().second
          << ") and (" << iv.first << "," << iv.second << ") cross";
      throw OuterplaneError(msg.str());
    }
    open.push_back(iv);
  }
}

}  // namespace

OuterplaneGraph::OuterplaneGraph(Graph g, std::vector<VertexId> outer_cycle)
    : graph_(std::move(g)), cycle_(std::move(outer_cycle)) {
  const int n = graph_.num_vertices();
  if (cycle_.empty() && n < 3) {
    cycle_.resize(n);
    std::iota(cycle_.begin(), cycle_.end(), 0);
  }
  if (static_cast<int>(cycle_.size()) != n)
    throw OuterplaneError("outer cycle must list each of the " + std::to_string(n) +
                          " vertices once");
  position_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const VertexId v = cycle_[i];
    if (v < 0 || v >= n || position_[v] >= 0)
      throw OuterplaneError("outer cycle is not a permutation of the vertices");
    position_[v] = i;
  }
  if (n < 3) return;
  for (int i = 0; i < n; ++i) {
    if (!graph_.adjacent(cycle_[i], cycle_[(i + 1) % n])) {
      throw OuterplaneError("outer cycle step " + std::to_string(cycle_[i]) + "-" +
                            std::to_string(cycle_[(i + 1) % n]) + " is not an edge");
    }
  }
  std::vector<std::pair<int, int>> intervals;
  for (const Edge& e : graph_.edges()) {
    if (is_outer_edge(e.u, e.v)) continue;
    intervals.emplace_back(std::min(position_[e.u], position_[e.v]),
                           std::max(position_[e.u], position_[e.v]));
  }
  check_chords_laminar(std::move(intervals));
}

bool OuterplaneGraph::is_outer_edge(VertexId a, VertexId b) const {
  const int n = graph_.num_vertices();
  if (a < 0 || b < 0 || a >= n || b >= n || !graph_.adjacent(a, b)) return false;
  if (n < 3) return true;
  const int d = (position_[a] - position_[b] + n) % n;
  return d == 1 || d == n - 1;
}

std::vector<Edge> OuterplaneGraph::chords() const {
  std::vector<Edge> out;
  for (const Edge& e : graph_.edges()) {
    if (!is_outer_edge(e.u, e.v)) out.push_back(e);
  }
  return out;
}

bool OuterplaneGraph::near_triangulated() const {
  const int n = graph_.num_vertices();
  return n < 3 || graph_.num_edges() == 2 * n - 3;
}

std::pair<VertexId, VertexId> lowest_outer_edge(const OuterplaneGraph& g) {
  const auto& cyc = g.outer_cycle();
  const int n = static_cast<int>(cyc.size());
  if (n < 2) throw OuterplaneError("graph has no outer edge");
  std::pair<VertexId, VertexId> best{n, n};
  for (int i = 0; i < (n == 2 ? 1 : n); ++i) {
    const VertexId a = cyc[i];
    const VertexId b = cyc[(i + 1) % n];
    best = std::min(best, std::pair{std::min(a, b), std::max(a, b)});
  }
  return best;
}

Triangulated near_triangulate(const OuterplaneGraph& g, const Cover& c) {
  const Graph& base = g.graph();
  if (!(c.base() == base)) throw OuterplaneError("cover is not a cover of the outerplane graph");
  const int n = base.num_vertices();
  std::vector<std::pair<VertexId, VertexId>> extra;
  if (n >= 4) {
    std::vector<int> local(n, -1);
    std::vector<std::vector<VertexId>> faces{g.outer_cycle()};
    while (!faces.empty()) {
      std::vector<VertexId> poly = std::move(faces.back());
      faces.pop_back();
      const int m = static_cast<int>(poly.size());
      if (m < 4) continue;
      for (int i = 0; i < m; ++i) local[poly[i]] = i;
      int ca = -1, cb = -1;
      for (int a = 0; a < m && ca < 0; ++a) {
        for (const auto& arc : base.arcs(poly[a])) {
          const int b = local[arc.to];
          if (b > a + 1 && !(a == 0 && b == m - 1)) {
            ca = a;
            cb = b;
            break;
          }
        }
      }
      for (VertexId v : poly) local[v] = -1;
      if (ca >= 0) {
        std::vector<VertexId> left(poly.begin() + ca, poly.begin() + cb + 1);
        std::vector<VertexId> right(poly.begin() + cb, poly.end());
        right.insert(right.end(), poly.begin(), poly.begin() + ca + 1);
        faces.push_back(std::move(left));
        faces.push_back(std::move(right));
        continue;
      }
      const int a = static_cast<int>(std::min_element(poly.begin(), poly.end()) - poly.begin());
      for (int k = 2; k <= m - 2; ++k) extra.emplace_back(poly[a], poly[(a + k) % m]);
    }
  }
  Triangulated out;
  CoverData data{base.with_edges(extra), c.list_sizes(), c.data().matchings};
  data.matchings.resize(data.base.num_edges());
  for (int e = base.num_edges(); e < data.base.num_edges(); ++e) out.added_edges.push_back(e);
  out.graph = OuterplaneGraph(data.base, g.outer_cycle());
  out.cover = Cover(std::move(data));
  return out;
}

PartialColoring color_near_triangulation(const OuterplaneGraph& g, const Cover& c, VertexId u,
                                         VertexId v, int cu, int cv) {
  const Graph& base = g.graph();
  const int n = base.num_vertices();
  if (!(c.base() == base)) throw OuterplaneError("cover is not a cover of the outerplane graph");
  if (!g.near_triangulated()) throw OuterplaneError("graph is not a near triangulation");
  if (!g.is_outer_edge(u, v)) throw OuterplaneError("pinned vertices do not form an outer edge");
  if (c.min_list_size() < 2) throw OuterplaneError("every list needs at least two colors");
  PartialColoring phi(n);
  phi.assign(u, cu);
  phi.assign(v, cv);
  check_in_lists(c, phi);

  // Path from u around the cycle to v; the closing edge is v-u.
  const auto& cyc = g.outer_cycle();
  const int start = static_cast<int>(std::find(cyc.begin(), cyc.end(), u) - cyc.begin());
  const int step = cyc[(start + n - 1) % n] == v ? 1 : n - 1;
  std::vector<VertexId> first;
  for (int i = 0, at = start; i < n; ++i, at = (at + step) % n) first.push_back(cyc[at]);

  auto color_avoiding = [&](VertexId w, VertexId from) {
    const int banned = c.partner(from, phi[from], w);
    phi.assign(w, banned == 0 ? 1 : 0);
  };
  auto fail = [](const std::string& what) { throw Falsified("near-triangulation recursion: " + what); };

  // Each task is a path P with both ends colored: P[0] carries the strict
  // bounds, P.back() the loose ones, and P.back()-P[0] closes the cycle.
  std::vector<int> local(n, -1);
  std::vector<std::vector<VertexId>> tasks{std::move(first)};
  while (!tasks.empty()) {
    std::vector<VertexId> path = std::move(tasks.back());
    tasks.pop_back();
    const int m = static_cast<int>(path.size());
    const VertexId p = path.front();
    const VertexId q = path.back();
    if (m <= 2) continue;
    if (m == 3) {
      color_avoiding(path[1], p);
      continue;
    }
    for (int i = 0; i < m; ++i) local[path[i]] = i;
    int deg_p = 0, deg_q = 0, far = 0;
    for (const auto& arc : base.arcs(p)) {
      if (local[arc.to] < 0) continue;
      ++deg_p;
      if (local[arc.to] < m - 1) far = std::max(far, local[arc.to]);
    }
    for (const auto& arc : base.arcs(q)) deg_q += local[arc.to] >= 0;
    for (VertexId w : path) local[w] = -1;

    if (deg_p == 2) {
      if (!base.adjacent(path[1], q)) fail("degree-2 end without a triangle");
      color_avoiding(path[1], p);
      tasks.emplace_back(path.rbegin(), path.rend() - 1);
    } else if (deg_q == 2) {
      if (!base.adjacent(path[m - 2], p)) fail("degree-2 end without a triangle");
      color_avoiding(path[m - 2], p);
      tasks.emplace_back(path.begin(), path.end() - 1);
    } else {
      const VertexId z = path[far];
      if (!base.adjacent(q, z)) fail("split vertex not adjacent to the far end");
      color_avoiding(z, p);
      tasks.emplace_back(path.begin(), path.begin() + far + 1);
      std::vector<VertexId> second{q};
      second.insert(second.end(), path.rbegin() + 1, path.rend() - far);
      tasks.push_back(std::move(second));
    }
  }

  if (!phi.total()) fail("some vertex was left uncolored");
  const auto def = defects(c, phi);
  const bool conflicting = c.conflict({u, cu}, {v, cv});
  const int cap_u = conflicting ? 1 : 0;
  const int cap_v = conflicting ? 2 : 1;
  const int worst = def.empty() ? 0 : *std::max_element(def.begin(), def.end());
  if (worst > 3 || def[u] > cap_u || def[v] > cap_v) {
    std::ostringstream msg;
    msg << "contract broken: max defect " << worst << ", def(" << u << ")=" << def[u]
        << " (cap " << cap_u << "), def(" << v << ")=" << def[v] << " (cap " << cap_v << ")";
    fail(msg.str());
  }
  return phi;
}

PartialColoring color_outerplanar(const OuterplaneGraph& g, const Cover& c) {
  const int n = g.graph().num_vertices();
  if (!(c.base() == g.graph())) throw OuterplaneError("cover is not a cover of the outerplane graph");
  PartialColoring phi(n);
  if (n < 3) {
    for (VertexId v = 0; v < n; ++v) {
      if (c.list_size(v) < 1) throw OuterplaneError("empty list at vertex " + std::to_string(v));
    }
    if (n >= 1) phi.assign(0, 0);
    if (n == 2) {
      const int banned = c.partner(0, 0, 1);
      phi.assign(1, banned == 0 && c.list_size(1) > 1 ? 1 : 0);
    }
    return phi;
  }
  const Triangulated tri = near_triangulate(g, c);
  const auto [u, v] = lowest_outer_edge(tri.graph);
  PartialColoring full = color_near_triangulation(tri.graph, tri.cover, u, v, 0, 0);
  if (max_defect(c, full) > 3) throw Falsified("triangulated coloring does not transfer");
  return full;
}

}  // namespace defcor

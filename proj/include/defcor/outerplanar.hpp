#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "defcor/cover.hpp"
#include "defcor/graph.hpp"

namespace defcor {

class OuterplaneError : public std::runtime_error {
 public:
  explicit OuterplaneError(const std::string& what) : std::runtime_error(what) {}
};

/// A graph together with the cyclic order of its outer face. The outer
/// cycle visits every vertex once; every other edge is a chord, and chords
/// do not cross. Graphs with fewer than three vertices have no cycle and
/// list their vertices in any order.
class OuterplaneGraph {
 public:
  OuterplaneGraph() = default;
  /// Throws OuterplaneError if the cycle or the chords are inconsistent.
  OuterplaneGraph(Graph g, std::vector<VertexId> outer_cycle);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<VertexId>& outer_cycle() const noexcept { return cycle_; }
  /// Edges not on the outer cycle.
  std::vector<Edge> chords() const;
  bool is_outer_edge(VertexId a, VertexId b) const;
  /// Every interior face is a triangle (2n - 3 edges for n >= 3).
  bool near_triangulated() const;

 private:
  Graph graph_;
  std::vector<VertexId> cycle_;
  std::vector<int> position_;
};

struct Triangulated {
  OuterplaneGraph graph;
  Cover cover;
  /// Indices of the added edges in graph.graph().edges().
  std::vector<int> added_edges;
};

/// Adds chords so that every interior face is a triangle: each chordless
/// face is fanned from its lowest-id vertex. The new edges get empty
/// matchings, so colorings and defects transfer unchanged. `c` must be a
/// cover of `g.graph()`.
Triangulated near_triangulate(const OuterplaneGraph& g, const Cover& c);

/// Extends the pins (u, cu), (v, cv) of an outer edge uv of a near
/// triangulation to a 3-defective coloring with def(u) <= 1, def(v) <= 2
/// when the pins conflict and def(u) = 0, def(v) <= 1 otherwise. Every list
/// needs at least two colors. Throws OuterplaneError on bad input and
/// Falsified if the result breaks the contract.
PartialColoring color_near_triangulation(const OuterplaneGraph& g, const Cover& c, VertexId u,
                                         VertexId v, int cu, int cv);

/// 3-defective coloring of an outerplane graph with lists of size at least
/// two: near-triangulate, then extend the first colors of the lowest outer
/// edge.
PartialColoring color_outerplanar(const OuterplaneGraph& g, const Cover& c);

/// Lowest outer edge (by (min id, max id)), returned as (smaller, larger).
std::pair<VertexId, VertexId> lowest_outer_edge(const OuterplaneGraph& g);

}  // namespace defcor

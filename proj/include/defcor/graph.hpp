#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace defcor {

using VertexId = int;

/// Undirected edge with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphErrorKind { loop, duplicate_edge, unknown_endpoint };

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, Edge edge, const std::string& what)
      : std::runtime_error(what), kind_(kind), edge_(edge) {}

  GraphErrorKind kind() const noexcept { return kind_; }
  Edge edge() const noexcept { return edge_; }

 private:
  GraphErrorKind kind_;
  Edge edge_;
};

/// A finite simple undirected graph on vertices 0..n-1.
///
/// Vertex ids are dense and stable; labels are metadata only. Edges keep
/// the order in which they were supplied (normalized so that u < v), and
/// each edge has a stable index used by covers to attach matchings.
class Graph {
 public:
  struct Arc {
    VertexId to;
    int edge;
  };

  Graph() = default;

  /// Throws GraphError on loops, duplicate edges or unknown endpoints.
  Graph(int num_vertices, std::span<const std::pair<VertexId, VertexId>> edges,
        std::vector<std::string> labels = {});

  int num_vertices() const noexcept { return static_cast<int>(arcs_.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_.at(index); }

  std::span<const Arc> arcs(VertexId v) const { return arcs_.at(v); }
  std::vector<VertexId> neighbors(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(arcs_.at(v).size()); }

  /// Index of edge uv, or -1 when u and v are not adjacent.
  int edge_index(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return edge_index(u, v) >= 0; }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Graph induced on `keep`; vertex i of the result is keep[i].
  Graph induced(std::span<const VertexId> keep) const;

  /// Same vertices plus `extra` edges appended after the existing ones.
  Graph with_edges(std::span<const std::pair<VertexId, VertexId>> extra) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.labels_ == b.labels_ &&
           a.arcs_.size() == b.arcs_.size();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::string> labels_;
};

/// Convenience constructor keyed by labels. Every edge endpoint must be
/// one of `vertices`.
Graph build_graph(const std::vector<std::string>& vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

/// Min-degree peel order. Each vertex has at most `degeneracy` neighbors
/// that appear later in `order` (i.e. still present when it was peeled).
struct DegeneracyOrder {
  std::vector<VertexId> order;
  int degeneracy = 0;
};

/// Ties in the peel break by smallest id.
DegeneracyOrder degeneracy(const Graph& g);

std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace defcor

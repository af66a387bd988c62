#include "defcor/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace defcor {

Graph::Graph(int num_vertices, std::span<const std::pair<VertexId, VertexId>> edges,
             std::vector<std::string> labels)
    : arcs_(num_vertices), labels_(std::move(labels)) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  if (labels_.empty()) {
    labels_.reserve(num_vertices);
    for (int v = 0; v < num_vertices; ++v) labels_.push_back(std::to_string(v));
  }
  if (static_cast<int>(labels_.size()) != num_vertices)
    throw std::invalid_argument("label count does not match vertex count");

  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    Edge e{std::min(a, b), std::max(a, b)};
    if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices)
      throw GraphError(GraphErrorKind::unknown_endpoint, e,
                       "edge " + std::to_string(a) + "-" + std::to_string(b) +
                           " has an unknown endpoint");
    if (a == b)
      throw GraphError(GraphErrorKind::loop, e, "loop at vertex " + std::to_string(a));
    for (const Arc& arc : arcs_[e.u]) {
      if (arc.to == e.v)
        throw GraphError(GraphErrorKind::duplicate_edge, e,
                         "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    const int index = static_cast<int>(edges_.size());
    edges_.push_back(e);
    arcs_[e.u].push_back({e.v, index});
    arcs_[e.v].push_back({e.u, index});
  }
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (const Arc& a : arcs_.at(v)) out.push_back(a.to);
  std::sort(out.begin(), out.end());
  return out;
}

int Graph::edge_index(VertexId u, VertexId v) const {
  if (u < 0 || u >= num_vertices() || v < 0 || v >= num_vertices()) return -1;
  if (arcs_[v].size() < arcs_[u].size()) std::swap(u, v);
  for (const Arc& a : arcs_[u]) {
    if (a.to == v) return a.edge;
  }
  return -1;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  std::vector<int> pos(num_vertices(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    pos.at(keep[i]) = static_cast<int>(i);
    labels.push_back(labels_[keep[i]]);
  }
  std::vector<std::pair<VertexId, VertexId>> kept;
  for (const Edge& e : edges_) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) kept.emplace_back(pos[e.u], pos[e.v]);
  }
  return Graph(static_cast<int>(keep.size()), kept, std::move(labels));
}

Graph Graph::with_edges(std::span<const std::pair<VertexId, VertexId>> extra) const {
  std::vector<std::pair<VertexId, VertexId>> all;
  all.reserve(edges_.size() + extra.size());
  for (const Edge& e : edges_) all.emplace_back(e.u, e.v);
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(num_vertices(), all, labels_);
}

Graph build_graph(const std::vector<std::string>& vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, VertexId> id;
  for (const auto& name : vertices) {
    const auto next = static_cast<VertexId>(id.size());
    if (!id.emplace(name, next).second)
      throw std::invalid_argument("duplicate vertex label " + name);
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& [a, b] : edges) {
    auto ia = id.find(a);
    auto ib = id.find(b);
    if (ia == id.end() || ib == id.end())
      throw GraphError(GraphErrorKind::unknown_endpoint, {},
                       "edge " + a + "-" + b + " has an unknown endpoint");
    pairs.emplace_back(ia->second, ib->second);
  }
  return Graph(static_cast<int>(vertices.size()), pairs, vertices);
}

DegeneracyOrder degeneracy(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> deg(n);
  std::set<std::pair<int, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<bool> removed(n, false);
  DegeneracyOrder result;
  result.order.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    result.order.push_back(v);
    result.degeneracy = std::max(result.degeneracy, d);
    for (const auto& arc : g.arcs(v)) {
      if (removed[arc.to]) continue;
      queue.erase({deg[arc.to], arc.to});
      queue.emplace(--deg[arc.to], arc.to);
    }
  }
  return result;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    if (g.label(v) != std::to_string(v)) out << " [name=\"" << g.label(v) << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace defcor

#pragma once

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "defcor/graph.hpp"

namespace defcor {

/// A color of a cover: the `index`-th entry of the list of `vertex`.
struct Color {
  VertexId vertex = 0;
  int index = 0;

  friend bool operator==(const Color&, const Color&) = default;
  friend auto operator<=>(const Color&, const Color&) = default;
};

/// Cross edges of one base edge, as (index in L(edge.u), index in L(edge.v)).
using Matching = std::vector<std::pair<int, int>>;

/// Unchecked cover description: lists are given by their sizes, one matching
/// per base edge (parallel to `base.edges()`).
struct CoverData {
  Graph base;
  std::vector<int> list_sizes;
  std::vector<Matching> matchings;
};

enum class CoverClause { partition, list_independent, matching };

struct CoverViolation {
  CoverClause clause;
  std::string detail;
  std::vector<Color> colors;
};

struct ValidationReport {
  std::vector<CoverViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

/// Checks the three cover axioms: the lists partition the colors, each list
/// is independent, and cross edges between two lists form a matching that is
/// empty for non-adjacent vertices.
ValidationReport validate(const CoverData& data);

class CoverError : public std::runtime_error {
 public:
  explicit CoverError(const std::string& what) : std::runtime_error(what) {}
};

/// A validated correspondence cover. Immutable.
class Cover {
 public:
  Cover() = default;
  /// Throws CoverError if `data` does not validate.
  explicit Cover(CoverData data);

  const Graph& base() const noexcept { return data_.base; }
  const CoverData& data() const noexcept { return data_; }
  int num_vertices() const noexcept { return base().num_vertices(); }
  int list_size(VertexId v) const { return data_.list_sizes.at(v); }
  const std::vector<int>& list_sizes() const noexcept { return data_.list_sizes; }
  const Matching& matching(int edge) const { return data_.matchings.at(edge); }
  int min_list_size() const;

  /// Index of the color of `to` matched with color `index` of `from`, or -1.
  /// `from` and `to` must be adjacent for a non-negative answer.
  int partner(VertexId from, int index, VertexId to) const;
  /// Same as partner(), addressed by position in base().arcs(from).
  int partner_at(VertexId from, std::size_t arc, int index) const {
    return partners_[arc_offset_[from][arc] + index];
  }

  bool conflict(Color a, Color b) const;

  /// Matchings compare as sets of pairs.
  friend bool operator==(const Cover& a, const Cover& b);

 private:
  CoverData data_;
  // For every vertex and arc, a block of list_size(from) partner indices.
  std::vector<std::vector<int>> arc_offset_;
  std::vector<int> partners_;
};

/// Convenience: a k-fold cover with identity matchings on every edge.
Cover identity_cover(const Graph& g, int k);

/// Partial map vertex -> local color index; -1 means uncolored.
class PartialColoring {
 public:
  static constexpr int kUncolored = -1;

  PartialColoring() = default;
  explicit PartialColoring(int num_vertices) : color_(num_vertices, kUncolored) {}
  explicit PartialColoring(std::vector<int> colors) : color_(std::move(colors)) {}

  int size() const noexcept { return static_cast<int>(color_.size()); }
  bool colored(VertexId v) const { return color_.at(v) != kUncolored; }
  int operator[](VertexId v) const { return color_.at(v); }
  void assign(VertexId v, int index) { color_.at(v) = index; }
  void clear(VertexId v) { color_.at(v) = kUncolored; }
  bool total() const;
  std::vector<VertexId> domain() const;
  const std::vector<int>& values() const noexcept { return color_; }

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;
  friend auto operator<=>(const PartialColoring&, const PartialColoring&) = default;

 private:
  std::vector<int> color_;
};

/// Throws CoverError if some assigned color is outside its vertex's list or
/// the coloring has the wrong size.
void check_in_lists(const Cover& c, const PartialColoring& phi);

/// Number of conflicting colored neighbors of every vertex; uncolored
/// vertices and uncolored neighbors count 0.
std::vector<int> defects(const Cover& c, const PartialColoring& phi);

int max_defect(const Cover& c, const PartialColoring& phi);

/// A cover obtained from another by deleting vertices and/or colors. Vertex
/// i of `cover` is `vertex_origin[i]` of the parent; color j of vertex i is
/// color `color_origin[i][j]` of the parent vertex.
struct Subcover {
  Cover cover;
  std::vector<VertexId> vertex_origin;
  std::vector<std::vector<int>> color_origin;

  /// Maps a coloring of `cover` to a partial coloring of the parent.
  PartialColoring lift(const PartialColoring& phi, int parent_vertices) const;
  /// Inverse of lift on the kept part; colors not kept map to uncolored.
  PartialColoring project(const PartialColoring& parent) const;
};

/// Restriction to `vertices` (in that order), keeping for each of them the
/// colors for which keep(vertex, index) is true.
template <typename Keep>
Subcover restrict_cover(const Cover& c, std::span<const VertexId> vertices, Keep keep);

/// Restriction to `vertices` with full lists.
Subcover restrict_cover(const Cover& c, std::span<const VertexId> vertices);

/// Restriction with one color deleted.
Subcover delete_color(const Cover& c, Color color);

/// The subcover induced by a proper partial coloring: drop dom(phi) and every
/// color conflicting with im(phi). Throws CoverError if phi is not proper or
/// assigns a color outside a list.
Subcover subcover(const Cover& c, const PartialColoring& phi);

/// Extends each matching greedily to a maximal one, pairing unmatched colors
/// in ascending index order.
Cover maximalize(const Cover& c);

/// Keeps the first k colors of every list. Throws CoverError when some list
/// is shorter than k.
Cover trim(const Cover& c, int k);

bool all_matchings_maximal(const Cover& c);

/// Witness of a cover isomorphism: vertex_map[v] is the image of v and
/// color_map[v][i] the image index of color i of v.
struct CoverIsomorphism {
  std::vector<VertexId> vertex_map;
  std::vector<std::vector<int>> color_map;
};

/// Searches over all base isomorphisms and list-preserving color bijections.
std::optional<CoverIsomorphism> find_isomorphism(const Cover& a, const Cover& b);
inline bool isomorphic(const Cover& a, const Cover& b) {
  return find_isomorphism(a, b).has_value();
}

/// Checks that `iso` maps cover edges of `a` exactly onto cover edges of `b`.
bool is_isomorphism(const Cover& a, const Cover& b, const CoverIsomorphism& iso);

// ---------------------------------------------------------------------------

template <typename Keep>
Subcover restrict_cover(const Cover& c, std::span<const VertexId> vertices, Keep keep) {
  const Graph& g = c.base();
  Subcover out;
  out.vertex_origin.assign(vertices.begin(), vertices.end());
  out.color_origin.resize(vertices.size());
  std::vector<int> pos(g.num_vertices(), -1);
  std::vector<std::vector<int>> new_index(vertices.size());
  CoverData data;
  data.list_sizes.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const VertexId v = vertices[i];
    pos.at(v) = static_cast<int>(i);
    new_index[i].assign(c.list_size(v), -1);
    for (int k = 0; k < c.list_size(v); ++k) {
      if (keep(v, k)) {
        new_index[i][k] = static_cast<int>(out.color_origin[i].size());
        out.color_origin[i].push_back(k);
      }
    }
    data.list_sizes[i] = static_cast<int>(out.color_origin[i].size());
  }
  data.base = g.induced(vertices);
  data.matchings.resize(data.base.num_edges());
  for (int e = 0; e < data.base.num_edges(); ++e) {
    const Edge& ne = data.base.edge(e);
    const VertexId pu = vertices[ne.u];
    const VertexId pv = vertices[ne.v];
    const int pe = g.edge_index(pu, pv);
    const bool flipped = g.edge(pe).u != pu;
    for (auto [a, b] : c.matching(pe)) {
      const int iu = flipped ? b : a;
      const int iv = flipped ? a : b;
      const int nu = new_index[ne.u][iu];
      const int nv = new_index[ne.v][iv];
      if (nu >= 0 && nv >= 0) data.matchings[e].emplace_back(nu, nv);
    }
  }
  out.cover = Cover(std::move(data));
  return out;
}

}  // namespace defcor

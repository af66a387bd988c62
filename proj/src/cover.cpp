#include "defcor/cover.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace defcor {

namespace {

const char* clause_name(CoverClause c) {
  switch (c) {
    case CoverClause::partition: return "partition";
    case CoverClause::list_independent: return "list-independent";
    case CoverClause::matching: return "matching";
  }
  return "?";
}

}  // namespace

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const auto& v : violations) {
    out << clause_name(v.clause) << ": " << v.detail;
    for (const Color& c : v.colors) out << " (" << c.vertex << "," << c.index << ")";
    out << "; ";
  }
  return out.str();
}

ValidationReport validate(const CoverData& data) {
  ValidationReport report;
  const Graph& g = data.base;
  if (static_cast<int>(data.list_sizes.size()) != g.num_vertices()) {
    report.violations.push_back(
        {CoverClause::partition, "list count differs from vertex count", {}});
    return report;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (data.list_sizes[v] < 0)
      report.violations.push_back({CoverClause::partition, "negative list size", {{v, 0}}});
  }
  if (static_cast<int>(data.matchings.size()) != g.num_edges()) {
    report.violations.push_back(
        {CoverClause::matching, "matching count differs from edge count", {}});
    return report;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    const int su = data.list_sizes[edge.u];
    const int sv = data.list_sizes[edge.v];
    std::vector<int> used_u(std::max(su, 0), 0);
    std::vector<int> used_v(std::max(sv, 0), 0);
    for (auto [a, b] : data.matchings[e]) {
      const Color cu{edge.u, a};
      const Color cv{edge.v, b};
      if (a < 0 || a >= su || b < 0 || b >= sv) {
        report.violations.push_back(
            {CoverClause::partition, "cross edge endpoint outside every list", {cu, cv}});
        continue;
      }
      if (used_u[a]++ > 0)
        report.violations.push_back(
            {CoverClause::matching, "color has two cross edges to one list", {cu, cv}});
      if (used_v[b]++ > 0)
        report.violations.push_back(
            {CoverClause::matching, "color has two cross edges to one list", {cv, cu}});
    }
  }
  return report;
}

bool operator==(const Cover& a, const Cover& b) {
  if (!(a.data_.base == b.data_.base) || a.data_.list_sizes != b.data_.list_sizes) return false;
  for (std::size_t e = 0; e < a.data_.matchings.size(); ++e) {
    Matching x = a.data_.matchings[e], y = b.data_.matchings[e];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

Cover::Cover(CoverData data) : data_(std::move(data)) {
  if (auto report = validate(data_); !report.ok())
    throw CoverError("invalid cover: " + report.summary());
  const Graph& g = data_.base;
  arc_offset_.resize(g.num_vertices());
  int total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (std::size_t a = 0; a < g.arcs(v).size(); ++a) {
      arc_offset_[v].push_back(total);
      total += data_.list_sizes[v];
    }
  }
  partners_.assign(total, -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto arcs = g.arcs(v);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const Edge& e = g.edge(arcs[a].edge);
      const bool is_u = e.u == v;
      for (auto [i, j] : data_.matchings[arcs[a].edge]) {
        if (is_u)
          partners_[arc_offset_[v][a] + i] = j;
        else
          partners_[arc_offset_[v][a] + j] = i;
      }
    }
  }
}

int Cover::min_list_size() const {
  if (data_.list_sizes.empty()) return 0;
  return *std::min_element(data_.list_sizes.begin(), data_.list_sizes.end());
}

int Cover::partner(VertexId from, int index, VertexId to) const {
  const auto arcs = base().arcs(from);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (arcs[a].to == to) return partner_at(from, a, index);
  }
  return -1;
}

bool Cover::conflict(Color a, Color b) const {
  if (a.vertex == b.vertex) return false;
  return partner(a.vertex, a.index, b.vertex) == b.index && b.index >= 0;
}

Cover identity_cover(const Graph& g, int k) {
  CoverData data{g, std::vector<int>(g.num_vertices(), k), {}};
  Matching id;
  for (int i = 0; i < k; ++i) id.emplace_back(i, i);
  data.matchings.assign(g.num_edges(), id);
  return Cover(std::move(data));
}

bool PartialColoring::total() const {
  return std::none_of(color_.begin(), color_.end(), [](int c) { return c == kUncolored; });
}

std::vector<VertexId> PartialColoring::domain() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < size(); ++v) {
    if (colored(v)) out.push_back(v);
  }
  return out;
}

void check_in_lists(const Cover& c, const PartialColoring& phi) {
  if (phi.size() != c.num_vertices())
    throw CoverError("coloring size " + std::to_string(phi.size()) + " differs from " +
                     std::to_string(c.num_vertices()) + " vertices");
  for (VertexId v = 0; v < phi.size(); ++v) {
    if (phi.colored(v) && (phi[v] < 0 || phi[v] >= c.list_size(v)))
      throw CoverError("color " + std::to_string(phi[v]) + " is not in the list of vertex " +
                       std::to_string(v));
  }
}

std::vector<int> defects(const Cover& c, const PartialColoring& phi) {
  check_in_lists(c, phi);
  std::vector<int> out(c.num_vertices(), 0);
  for (int e = 0; e < c.base().num_edges(); ++e) {
    const Edge& edge = c.base().edge(e);
    if (!phi.colored(edge.u) || !phi.colored(edge.v)) continue;
    for (auto [a, b] : c.matching(e)) {
      if (a == phi[edge.u] && b == phi[edge.v]) {
        ++out[edge.u];
        ++out[edge.v];
      }
    }
  }
  return out;
}

int max_defect(const Cover& c, const PartialColoring& phi) {
  const auto d = defects(c, phi);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

PartialColoring Subcover::lift(const PartialColoring& phi, int parent_vertices) const {
  PartialColoring out(parent_vertices);
  for (VertexId i = 0; i < phi.size(); ++i) {
    if (phi.colored(i)) out.assign(vertex_origin.at(i), color_origin.at(i).at(phi[i]));
  }
  return out;
}

PartialColoring Subcover::project(const PartialColoring& parent) const {
  PartialColoring out(static_cast<int>(vertex_origin.size()));
  for (std::size_t i = 0; i < vertex_origin.size(); ++i) {
    const VertexId p = vertex_origin[i];
    if (!parent.colored(p)) continue;
    const auto& origin = color_origin[i];
    auto it = std::find(origin.begin(), origin.end(), parent[p]);
    if (it != origin.end()) out.assign(static_cast<VertexId>(i), static_cast<int>(it - origin.begin()));
  }
  return out;
}

Subcover restrict_cover(const Cover& c, std::span<const VertexId> vertices) {
  return restrict_cover(c, vertices, [](VertexId, int) { return true; });
}

Subcover delete_color(const Cover& c, Color color) {
  std::vector<VertexId> all(c.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  return restrict_cover(c, all, [&](VertexId v, int k) { return Color{v, k} != color; });
}

Subcover subcover(const Cover& c, const PartialColoring& phi) {
  check_in_lists(c, phi);
  const Graph& g = c.base();
  for (const Edge& e : g.edges()) {
    if (phi.colored(e.u) && phi.colored(e.v) && c.partner(e.u, phi[e.u], e.v) == phi[e.v])
      throw CoverError("partial coloring is not proper on edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v));
  }
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!phi.colored(v)) rest.push_back(v);
  }
  return restrict_cover(c, rest, [&](VertexId v, int k) {
    const auto arcs = g.arcs(v);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const VertexId w = arcs[a].to;
      if (phi.colored(w) && c.partner_at(v, a, k) == phi[w]) return false;
    }
    return true;
  });
}

Cover maximalize(const Cover& c) {
  CoverData data = c.data();
  const Graph& g = data.base;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    std::vector<bool> used_u(data.list_sizes[edge.u], false);
    std::vector<bool> used_v(data.list_sizes[edge.v], false);
    for (auto [a, b] : data.matchings[e]) {
      used_u[a] = true;
      used_v[b] = true;
    }
    int b = 0;
    for (int a = 0; a < data.list_sizes[edge.u]; ++a) {
      if (used_u[a]) continue;
      while (b < data.list_sizes[edge.v] && used_v[b]) ++b;
      if (b == data.list_sizes[edge.v]) break;
      data.matchings[e].emplace_back(a, b);
      used_v[b] = true;
    }
  }
  return Cover(std::move(data));
}

Cover trim(const Cover& c, int k) {
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    if (c.list_size(v) < k)
      throw CoverError("list of vertex " + std::to_string(v) + " has " +
                       std::to_string(c.list_size(v)) + " < " + std::to_string(k) + " colors");
  }
  std::vector<VertexId> all(c.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  return restrict_cover(c, all, [k](VertexId, int index) { return index < k; }).cover;
}

bool all_matchings_maximal(const Cover& c) {
  const Graph& g = c.base();
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    const auto size = static_cast<int>(c.matching(e).size());
    if (size < std::min(c.list_size(edge.u), c.list_size(edge.v))) return false;
  }
  return true;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Cover& a, const Cover& b) : a_(a), b_(b) {
    const int n = a.num_vertices();
    iso_.vertex_map.assign(n, -1);
    iso_.color_map.resize(n);
    used_.assign(n, false);
    // BFS order so that most vertices have an already-mapped neighbor.
    std::vector<bool> seen(n, false);
    for (VertexId s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      order_.push_back(s);
      for (std::size_t head = order_.size() - 1; head < order_.size(); ++head) {
        for (VertexId w : a.base().neighbors(order_[head])) {
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
        }
      }
    }
  }

  std::optional<CoverIsomorphism> run() {
    const Graph& ga = a_.base();
    const Graph& gb = b_.base();
    if (ga.num_vertices() != gb.num_vertices() || ga.num_edges() != gb.num_edges())
      return std::nullopt;
    auto sa = a_.list_sizes();
    auto sb = b_.list_sizes();
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    if (extend(0)) return iso_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const VertexId p = order_[depth];
    const Graph& ga = a_.base();
    const Graph& gb = b_.base();
    for (VertexId w = 0; w < gb.num_vertices(); ++w) {
      if (used_[w] || gb.degree(w) != ga.degree(p) || b_.list_size(w) != a_.list_size(p))
        continue;
      bool consistent = true;
      for (std::size_t t = 0; t < depth && consistent; ++t) {
        const VertexId q = order_[t];
        consistent = ga.adjacent(p, q) == gb.adjacent(w, iso_.vertex_map[q]);
      }
      if (!consistent) continue;
      iso_.vertex_map[p] = w;
      used_[w] = true;
      std::vector<int> perm(a_.list_size(p));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        if (colors_consistent(p, w, perm)) {
          iso_.color_map[p] = perm;
          if (extend(depth + 1)) return true;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      used_[w] = false;
      iso_.vertex_map[p] = -1;
    }
    return false;
  }

  bool colors_consistent(VertexId p, VertexId w, const std::vector<int>& perm) const {
    for (const auto& arc : a_.base().arcs(p)) {
      const VertexId q = arc.to;
      const VertexId mq = iso_.vertex_map[q];
      if (mq < 0 || q == p) continue;
      if (iso_.color_map[q].empty()) continue;
      for (int i = 0; i < a_.list_size(p); ++i) {
        const int j = a_.partner(p, i, q);
        const int expected = j < 0 ? -1 : iso_.color_map[q][j];
        if (b_.partner(w, perm[i], mq) != expected) return false;
      }
    }
    return true;
  }

  const Cover& a_;
  const Cover& b_;
  std::vector<VertexId> order_;
  std::vector<bool> used_;
  CoverIsomorphism iso_;
};

}  // namespace

std::optional<CoverIsomorphism> find_isomorphism(const Cover& a, const Cover& b) {
  return IsomorphismSearch(a, b).run();
}

bool is_isomorphism(const Cover& a, const Cover& b, const CoverIsomorphism& iso) {
  const int n = a.num_vertices();
  if (b.num_vertices() != n || static_cast<int>(iso.vertex_map.size()) != n ||
      static_cast<int>(iso.color_map.size()) != n)
    return false;
  std::vector<bool> hit(n, false);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId w = iso.vertex_map[v];
    if (w < 0 || w >= n || hit[w]) return false;
    hit[w] = true;
    if (a.list_size(v) != b.list_size(w)) return false;
    std::vector<int> perm = iso.color_map[v];
    if (static_cast<int>(perm.size()) != a.list_size(v)) return false;
    std::sort(perm.begin(), perm.end());
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
      if (perm[i] != i) return false;
    }
  }
  if (a.base().num_edges() != b.base().num_edges()) return false;
  int cross_a = 0;
  int cross_b = 0;
  for (int e = 0; e < b.base().num_edges(); ++e) cross_b += static_cast<int>(b.matching(e).size());
  for (int e = 0; e < a.base().num_edges(); ++e) {
    const Edge& edge = a.base().edge(e);
    const VertexId mu = iso.vertex_map[edge.u];
    const VertexId mv = iso.vertex_map[edge.v];
    if (!b.base().adjacent(mu, mv)) return false;
    for (auto [i, j] : a.matching(e)) {
      ++cross_a;
      if (!b.conflict({mu, iso.color_map[edge.u][i]}, {mv, iso.color_map[edge.v][j]}))
        return false;
    }
  }
  return cross_a == cross_b;
}

}  // namespace defcor

#include "defcor/gadgets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "t3_fixture.hpp"

namespace defcor {

namespace {

/// Accumulates edges and their matchings, merging repeated edges.
class CoverBuilder {
 public:
  CoverBuilder(std::vector<std::string> labels, std::vector<int> list_sizes)
      : labels_(std::move(labels)), sizes_(std::move(list_sizes)) {}

  /// Adds edge ab (if new) and the cross edges (color of a, color of b).
  void connect(VertexId a, VertexId b, const Matching& cross = {}) {
    const auto key = std::minmax(a, b);
    auto [it, inserted] = index_.emplace(key, static_cast<int>(edges_.size()));
    if (inserted) {
      edges_.emplace_back(key.first, key.second);
      matchings_.emplace_back();
    }
    Matching& m = matchings_[it->second];
    for (auto [i, j] : cross) {
      const auto pair = a < b ? std::make_pair(i, j) : std::make_pair(j, i);
      if (std::find(m.begin(), m.end(), pair) == m.end()) m.push_back(pair);
    }
  }

  CoverData data() const {
    CoverData d{Graph(static_cast<int>(labels_.size()), edges_, labels_), sizes_, matchings_};
    for (auto& m : d.matchings) std::sort(m.begin(), m.end());
    return d;
  }
  Cover build() const { return Cover(data()); }
  Graph graph() const { return Graph(static_cast<int>(labels_.size()), edges_, labels_); }

 private:
  std::vector<std::string> labels_;
  std::vector<int> sizes_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<Matching> matchings_;
  std::map<std::pair<VertexId, VertexId>, int> index_;
};

Matching identity(int k) {
  Matching m;
  for (int i = 0; i < k; ++i) m.emplace_back(i, i);
  return m;
}

const std::array<std::string, 9> kTLabels{"u", "v", "x", "z", "y", "u1", "v1", "u2", "v2"};

/// T's edges in a fixed order: R1, R2, then u's and v's hub edges.
const std::array<std::pair<VertexId, VertexId>, 20> kTEdges{{
    {t_role::x, t_role::u1}, {t_role::x, t_role::v1}, {t_role::u1, t_role::v1},
    {t_role::u1, t_role::z}, {t_role::v1, t_role::z},
    {t_role::z, t_role::u2}, {t_role::z, t_role::v2}, {t_role::u2, t_role::v2},
    {t_role::u2, t_role::y}, {t_role::v2, t_role::y},
    {t_role::u, t_role::x}, {t_role::u, t_role::u1}, {t_role::u, t_role::z},
    {t_role::u, t_role::u2}, {t_role::u, t_role::y},
    {t_role::v, t_role::x}, {t_role::v, t_role::v1}, {t_role::v, t_role::z},
    {t_role::v, t_role::v2}, {t_role::v, t_role::y},
}};

void check_color(int c, int max, const char* what) {
  if (c < 1 || c > max)
    throw std::invalid_argument(std::string(what) + " must be in 1.." + std::to_string(max));
}

std::vector<std::string> t3_labels() {
  std::vector<std::string> labels{"u", "v"};
  for (int i = 1; i <= 5; ++i) labels.push_back("z" + std::to_string(i));
  for (int j = 1; j <= 4; ++j) labels.push_back("x" + std::to_string(j));
  for (int j = 1; j <= 4; ++j) labels.push_back("y" + std::to_string(j));
  return labels;
}

/// Adds the internal part of the three-colour gadget, with vertex ids
/// translated by `at` and internal colors cyclically shifted by `shift`.
template <typename At>
void add_t3_internal(CoverBuilder& b, At at, int shift) {
  auto fixture = [shift](const auto& table) {
    Matching m;
    for (auto [p, q] : table) m.emplace_back((p - 1 + shift) % 3, (q - 1 + shift) % 3);
    return m;
  };
  for (int i = 1; i <= 4; ++i)
    b.connect(at(t3_role::z(i)), at(t3_role::z(i + 1)), fixture(t3_fixture::kSpineMatching));
  for (int j = 1; j <= 4; ++j) {
    for (VertexId ear : {t3_role::x(j), t3_role::y(j)}) {
      b.connect(at(ear), at(t3_role::z(j)), fixture(t3_fixture::kLeftMatching));
      b.connect(at(ear), at(t3_role::z(j + 1)), fixture(t3_fixture::kRightMatching));
    }
  }
}

/// Hub edges of the three-colour gadget; hub colors hu, hv are matched to
/// the fixture's (shifted) blocking colors.
template <typename At>
void add_t3_hubs(CoverBuilder& b, At at, int hu, int hv, int shift) {
  auto shifted = [shift](int color) { return (color - 1 + shift) % 3; };
  for (int i = 1; i <= 5; ++i) {
    b.connect(t3_role::u, at(t3_role::z(i)), {{hu, shifted(t3_fixture::kUToSpine)}});
    b.connect(t3_role::v, at(t3_role::z(i)), {{hv, shifted(t3_fixture::kVToSpine)}});
  }
  for (int j = 1; j <= 4; ++j) {
    b.connect(t3_role::u, at(t3_role::x(j)), {{hu, shifted(t3_fixture::kUToEar)}});
    b.connect(t3_role::v, at(t3_role::y(j)), {{hv, shifted(t3_fixture::kVToEar)}});
  }
}

}  // namespace

Graph build_R() {
  const std::vector<std::pair<VertexId, VertexId>> edges{
      {r_role::a, r_role::b}, {r_role::a, r_role::d}, {r_role::b, r_role::c},
      {r_role::c, r_role::d}, {r_role::b, r_role::d}};
  return Graph(4, edges, {"a", "b", "c", "d"});
}

Graph build_T5() {
  return Graph(t_role::kVertices, kTEdges,
               std::vector<std::string>(kTLabels.begin(), kTLabels.end()));
}

std::vector<VertexId> t_k_copy_vertices(int m) {
  std::vector<VertexId> out{t_role::u, t_role::v};
  for (int r = 0; r < 7; ++r) out.push_back(2 + 7 * m + r);
  return out;
}

Graph build_T_k(int k) {
  if (k < 1) throw std::invalid_argument("T(k) needs k >= 1");
  std::vector<std::string> labels{"u", "v"};
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int m = 0; m < k; ++m) {
    const auto ids = t_k_copy_vertices(m);
    for (int r = 2; r < t_role::kVertices; ++r)
      labels.push_back(kTLabels[r] + (k > 1 ? "_" + std::to_string(m + 1) : ""));
    for (auto [a, b] : kTEdges) edges.emplace_back(ids[a], ids[b]);
  }
  return Graph(2 + 7 * k, edges, labels);
}

Graph build_T3_gadget() {
  CoverBuilder b(t3_labels(), std::vector<int>(t3_role::kVertices, 1));
  auto same = [](VertexId v) { return v; };
  add_t3_internal(b, same, 0);
  add_t3_hubs(b, same, 0, 0, 0);
  return b.graph();
}

Cover build_bad_cover_T3(int alpha, int beta) {
  check_color(alpha, 3, "alpha");
  check_color(beta, 3, "beta");
  std::vector<int> sizes(t3_role::kVertices, 3);
  sizes[t3_role::u] = 1;
  sizes[t3_role::v] = 1;
  CoverBuilder b(t3_labels(), sizes);
  // Pairs other than (1, 1) are relabelings of the fixture.
  const int shift = (alpha - 1 + beta - 1) % 3;
  auto same = [](VertexId v) { return v; };
  add_t3_internal(b, same, shift);
  add_t3_hubs(b, same, 0, 0, shift);
  return b.build();
}

std::vector<VertexId> G63::copy_vertices(int m) const {
  std::vector<VertexId> out{t3_role::u, t3_role::v};
  for (int r = 2; r < t3_role::kVertices; ++r) out.push_back(2 + 13 * m + (r - 2));
  return out;
}

G63 build_G63() {
  G63 out;
  const int n = 2 + 13 * out.copies;
  std::vector<std::string> labels{"u", "v"};
  const auto names = t3_labels();
  for (int m = 0; m < out.copies; ++m) {
    for (int r = 2; r < t3_role::kVertices; ++r)
      labels.push_back(names[r] + "_" + std::to_string(m + 1));
  }
  CoverBuilder b(labels, std::vector<int>(n, 3));
  for (int m = 0; m < out.copies; ++m) {
    const int pair = m / 7;
    const int alpha = pair / 3 + 1;
    const int beta = pair % 3 + 1;
    out.blocked_pair.emplace_back(alpha, beta);
    const int shift = (alpha - 1 + beta - 1) % 3;
    auto at = [m](VertexId v) { return v < 2 ? v : 2 + 13 * m + (v - 2); };
    add_t3_internal(b, at, shift);
    add_t3_hubs(b, at, alpha - 1, beta - 1, shift);
  }
  out.cover = maximalize(b.build());
  return out;
}

FanGadget build_fan_gadget(int length) {
  if (length < 2) throw std::invalid_argument("fan length must be at least 2");
  // u = 0, z_i = i, y_i = length + i.
  const int n = 2 * length;
  std::vector<std::string> labels{"u"};
  for (int i = 1; i <= length; ++i) labels.push_back("z" + std::to_string(i));
  for (int i = 1; i < length; ++i) labels.push_back("y" + std::to_string(i));
  CoverBuilder b(labels, std::vector<int>(n, 2));
  const Matching swap{{0, 1}, {1, 0}};
  auto z = [](int i) { return i; };
  auto y = [length](int i) { return length + i; };
  for (int i = 1; i < length; ++i) b.connect(z(i), z(i + 1), identity(2));
  for (int i = 1; i <= length; ++i) b.connect(0, z(i), identity(2));
  for (int i = 1; i < length; ++i) {
    b.connect(y(i), z(i), identity(2));
    b.connect(y(i), z(i + 1), swap);
  }
  FanGadget out{b.build(), {0}};
  for (int i = 1; i <= length; ++i) {
    out.outer_cycle.push_back(z(i));
    if (i < length) out.outer_cycle.push_back(y(i));
  }
  return out;
}

namespace {

void add_rotation(CoverBuilder& b, std::array<int, 4> ijkl, int alpha, int beta) {
  for (int c : ijkl) check_color(c, 4, "rotation index");
  auto sorted = ijkl;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{1, 2, 3, 4})
    throw std::invalid_argument("rotation indices must be distinct");
  check_color(alpha, 4, "alpha");
  check_color(beta, 4, "beta");
  const auto [i, j, k, l] = ijkl;
  const int a = alpha - 1;
  b.connect(t_role::u, t_role::x, {{a, i - 1}});
  b.connect(t_role::u, t_role::z, {{a, j - 1}});
  b.connect(t_role::u, t_role::y, {{a, k - 1}});
  b.connect(t_role::u, t_role::u1, {{a, l - 1}});
  b.connect(t_role::u, t_role::u2, {{a, l - 1}});
  for (VertexId w : {t_role::x, t_role::v1, t_role::z, t_role::v2, t_role::y})
    b.connect(t_role::v, w, {{beta - 1, l - 1}});
}

CoverBuilder t_identity_builder(int k) {
  CoverBuilder b(std::vector<std::string>(kTLabels.begin(), kTLabels.end()),
                 std::vector<int>(t_role::kVertices, k));
  for (auto [p, q] : kTEdges) {
    const bool hub = p == t_role::u || p == t_role::v;
    b.connect(p, q, hub ? Matching{} : identity(k));
  }
  return b;
}

}  // namespace

Cover build_H_rot(int i, int j, int k, int l, int alpha, int beta) {
  CoverBuilder b = t_identity_builder(4);
  add_rotation(b, {i, j, k, l}, alpha, beta);
  return b.build();
}

Cover build_H_sigma(const std::array<int, 4>& sigma) {
  auto sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{1, 2, 3, 4})
    throw std::invalid_argument("sigma must be a permutation of 1..4");
  CoverBuilder b = t_identity_builder(4);
  auto wrap = [](int c) { return (c - 1) % 4 + 1; };
  for (int r = 1; r <= 4; ++r)
    add_rotation(b, {r, wrap(r + 1), wrap(r + 2), wrap(r + 3)}, r, sigma[r - 1]);
  return b.build();
}

std::array<std::array<int, 4>, 4> t4_partition() {
  // Column m lists sigma_m(1..4), i.e. the pairs (i, sigma_m(i)) of A_m.
  return {{{1, 2, 3, 4}, {4, 1, 2, 3}, {3, 4, 1, 2}, {2, 3, 4, 1}}};
}

Cover glue_T_copies(std::span<const Cover> copies) {
  const Graph g = build_T_k(static_cast<int>(copies.size()));
  CoverData data{g, std::vector<int>(g.num_vertices(), 0), std::vector<Matching>(g.num_edges())};
  for (std::size_t m = 0; m < copies.size(); ++m) {
    const Cover& h = copies[m];
    if (h.num_vertices() != t_role::kVertices || h.base().num_edges() != 20)
      throw std::invalid_argument("glue_T_copies expects covers of T");
    if (m > 0 && (h.list_size(t_role::u) != data.list_sizes[t_role::u] ||
                  h.list_size(t_role::v) != data.list_sizes[t_role::v]))
      throw std::invalid_argument("copies disagree on hub list sizes");
    const auto ids = t_k_copy_vertices(static_cast<int>(m));
    for (VertexId r = 0; r < t_role::kVertices; ++r) data.list_sizes[ids[r]] = h.list_size(r);
    for (int e = 0; e < h.base().num_edges(); ++e) {
      const Edge& te = h.base().edge(e);
      const VertexId gu = ids[te.u];
      const VertexId gv = ids[te.v];
      const int ge = g.edge_index(gu, gv);
      const bool flipped = g.edge(ge).u != gu;
      for (auto [a, b] : h.matching(e))
        data.matchings[ge].push_back(flipped ? std::make_pair(b, a) : std::make_pair(a, b));
      std::sort(data.matchings[ge].begin(), data.matchings[ge].end());
    }
  }
  return Cover(std::move(data));
}

Cover build_T4_counterexample() {
  std::vector<Cover> copies;
  for (const auto& sigma : t4_partition()) copies.push_back(build_H_sigma(sigma));
  return glue_T_copies(copies);
}

std::vector<std::string> gadget_names() {
  return {"r",     "t",     "t-k",   "t3",      "t3-bad",           "g63",
          "fan",   "h-rot", "h-sigma", "twisted-r", "t4-counterexample"};
}

NamedGadget build_named_gadget(const std::string& name, const std::vector<int>& params) {
  auto param = [&](std::size_t i, int fallback) {
    return i < params.size() ? params[i] : fallback;
  };
  if (name == "r") return {identity_cover(build_R(), param(0, 2)), {}};
  if (name == "t") return {identity_cover(build_T5(), param(0, 3)), {}};
  if (name == "t-k") return {identity_cover(build_T_k(param(0, 4)), param(1, 3)), {}};
  if (name == "t3") return {identity_cover(build_T3_gadget(), param(0, 3)), {}};
  if (name == "t3-bad") return {build_bad_cover_T3(param(0, 1), param(1, 1)), {}};
  if (name == "g63") return {build_G63().cover, {}};
  if (name == "fan") {
    auto fan = build_fan_gadget(param(0, 12));
    return {fan.cover, fan.outer_cycle};
  }
  if (name == "h-rot") {
    if (!params.empty() && params.size() != 6) throw std::invalid_argument("h-rot takes i j k l alpha beta");
    return {build_H_rot(param(0, 1), param(1, 2), param(2, 3), param(3, 4), param(4, 1), param(5, 1)), {}};
  }
  if (name == "h-sigma") {
    if (!params.empty() && params.size() != 4)
      throw std::invalid_argument("h-sigma takes a permutation of 1..4");
    return {build_H_sigma({param(0, 1), param(1, 2), param(2, 3), param(3, 4)}), {}};
  }
  if (name == "twisted-r") {
    // a1 b1 d2 c1 b2 d1 a1.
    CoverData data{build_R(), {1, 2, 1, 2}, {}};
    data.matchings.resize(5);
    data.matchings[0] = {{0, 0}};  // ab: a1 b1
    data.matchings[1] = {{0, 0}};  // ad: a1 d1
    data.matchings[2] = {{1, 0}};  // bc: b2 c1
    data.matchings[3] = {{0, 1}};  // cd: c1 d2
    data.matchings[4] = {{0, 1}, {1, 0}};  // bd: b1 d2, b2 d1
    return {Cover(std::move(data)), {}};
  }
  if (name == "t4-counterexample") return {build_T4_counterexample(), {}};
  throw std::invalid_argument("unknown gadget '" + name + "'");
}

}  // namespace defcor

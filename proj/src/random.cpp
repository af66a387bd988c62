#include "defcor/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "defcor/gadgets.hpp"

namespace defcor {

std::uint64_t Rng::below(std::uint64_t n) {
  // Largest multiple of n representable; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  shuffle(p);
  return p;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(seed) ^ index);
}

Matching random_maximal_matching(Rng& rng, int a, int b) {
  Matching m;
  if (a <= b) {
    std::vector<int> side = rng.permutation(b);
    for (int i = 0; i < a; ++i) m.emplace_back(i, side[i]);
  } else {
    std::vector<int> side = rng.permutation(a);
    for (int j = 0; j < b; ++j) m.emplace_back(side[j], j);
  }
  std::sort(m.begin(), m.end());
  return m;
}

Matching random_matching(Rng& rng, int a, int b, double keep) {
  Matching full = random_maximal_matching(rng, a, b);
  if (keep >= 1.0) return full;
  Matching m;
  for (const auto& pair : full) {
    if (rng.chance(keep)) m.push_back(pair);
  }
  return m;
}

Cover random_cover(Rng& rng, const Graph& g, std::span<const int> list_sizes, double keep) {
  CoverData data{g, {list_sizes.begin(), list_sizes.end()}, {}};
  for (const Edge& e : g.edges())
    data.matchings.push_back(random_matching(rng, list_sizes[e.u], list_sizes[e.v], keep));
  return Cover(std::move(data));
}

Cover random_cover(Rng& rng, const Graph& g, int k, double keep) {
  std::vector<int> sizes(g.num_vertices(), k);
  return random_cover(rng, g, sizes, keep);
}

namespace {

// Renames vertices (unless keep_ids) and permutes every list at random.
Cover relabel(Rng& rng, const Cover& c, bool keep_ids = false) {
  const int n = c.num_vertices();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  if (!keep_ids) pi = rng.permutation(n);
  std::vector<std::vector<int>> color_perm(n);
  std::vector<int> sizes(n);
  for (VertexId v = 0; v < n; ++v) {
    color_perm[v] = rng.permutation(c.list_size(v));
    sizes[pi[v]] = c.list_size(v);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<Matching> matchings;
  for (int e = 0; e < c.base().num_edges(); ++e) {
    const Edge& edge = c.base().edge(e);
    VertexId a = pi[edge.u];
    VertexId b = pi[edge.v];
    Matching m;
    for (auto [i, j] : c.matching(e)) {
      if (a < b) {
        m.emplace_back(color_perm[edge.u][i], color_perm[edge.v][j]);
      } else {
        m.emplace_back(color_perm[edge.v][j], color_perm[edge.u][i]);
      }
    }
    std::sort(m.begin(), m.end());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    matchings.push_back(std::move(m));
  }
  return Cover(CoverData{Graph(n, edges, keep_ids ? c.base().labels() : std::vector<std::string>{}),
                         sizes, matchings});
}

Cover twisted_core(int c_size, Rng& rng, double keep) {
  using namespace r_role;
  const Graph r = build_R();
  CoverData data{r, {1, 2, c_size, 2}, std::vector<Matching>(r.num_edges())};
  auto set = [&](VertexId p, VertexId q, Matching m) {
    data.matchings[r.edge_index(p, q)] = std::move(m);
  };
  // a0 b0 d1 c0 b1 d0 a0
  set(a, b, {{0, 0}});
  set(a, d, {{0, 0}});
  set(b, d, {{0, 1}, {1, 0}});
  Matching bc{{1, 0}};
  Matching cd{{0, 1}};
  if (c_size == 2) {
    if (rng.chance(keep)) bc.emplace_back(0, 1);
    if (rng.chance(keep)) cd.emplace_back(1, 0);
  }
  set(b, c, bc);
  set(c, d, cd);
  return Cover(std::move(data));
}

// Cross edges of T under construction, keyed by T edge index.
class TMatchings {
 public:
  explicit TMatchings(const Graph& t) : t_(t), pairs_(t.num_edges()) {}

  bool free(VertexId p, int cp, VertexId q, int cq) const {
    const auto [e, a, b] = orient(p, cp, q, cq);
    for (auto [x, y] : pairs_[e]) {
      if (x == a || y == b) return false;
    }
    return true;
  }
  void add(VertexId p, int cp, VertexId q, int cq) {
    if (!free(p, cp, q, cq)) throw std::logic_error("planted matchings collide");
    const auto [e, a, b] = orient(p, cp, q, cq);
    pairs_[e].emplace_back(a, b);
  }
  std::vector<Matching> take() {
    for (auto& m : pairs_) std::sort(m.begin(), m.end());
    return std::move(pairs_);
  }

 private:
  std::tuple<int, int, int> orient(VertexId p, int cp, VertexId q, int cq) const {
    const int e = t_.edge_index(p, q);
    if (e < 0) throw std::logic_error("not an edge of T");
    return t_.edge(e).u == p ? std::tuple{e, cp, cq} : std::tuple{e, cq, cp};
  }

  const Graph& t_;
  std::vector<Matching> pairs_;
};

// Seeds a pattern on the R-half with ends a (size-1 side) and c, sides b, d.
// `ca` and `cc` are the residual colors of a and c used by the pattern.
void seed_half(TMatchings& m, Plant plant, VertexId a, int ca, VertexId b, VertexId c, int cc,
               int lc, VertexId d) {
  if (plant == Plant::twist) {
    // a b0 d1 c b1 d0 a
    m.add(a, ca, b, 0);
    m.add(b, 0, d, 1);
    m.add(d, 1, c, cc);
    m.add(c, cc, b, 1);
    m.add(b, 1, d, 0);
    m.add(d, 0, a, ca);
  } else if (plant == Plant::wedge) {
    m.add(a, ca, b, 0);
    m.add(a, ca, d, 0);
    m.add(b, 1, d, 1);
    m.add(c, cc, b, 1);
    if (lc == 2) m.add(d, 1, c, 1);
  }
}

}  // namespace

PlantedResidual random_bad_profile(Rng& rng) {
  static constexpr std::array<std::array<int, 3>, 5> kProfiles{
      {{2, 1, 2}, {1, 1, 2}, {2, 1, 1}, {1, 2, 1}, {1, 1, 1}}};
  PlantedResidual p;
  const auto& sizes = kProfiles[rng.below(kProfiles.size())];
  p.lx = sizes[0];
  p.lz = sizes[1];
  p.ly = sizes[2];
  auto pick = [&](int end_size) {
    const int r = static_cast<int>(rng.below(3));
    if (r == 0) return Plant::none;
    if (r == 1 && end_size == 1) return Plant::twist;
    return Plant::wedge;
  };
  p.r1 = pick(p.lx);
  p.r2 = pick(p.ly);
  return p;
}

Cover random_planted_T_cover(Rng& rng, const PlantedResidual& plant) {
  using namespace t_role;
  const Graph t = build_T5();
  std::array<int, kVertices> residual{};
  residual[u] = residual[v] = 0;
  residual[x] = plant.lx;
  residual[z] = plant.lz;
  residual[y] = plant.ly;
  residual[u1] = residual[v1] = residual[u2] = residual[v2] = 2;
  for (int l : {plant.lx, plant.lz, plant.ly}) {
    if (l < 1 || l > 2) throw std::invalid_argument("residual sizes must be 1 or 2");
  }

  TMatchings m(t);
  // R1 = (x, u1, z, v1) and R2 = (y, u2, z, v2) as (a, b, c, d); for a
  // wedge with a two-color end, a is whichever end has one color.
  auto seed = [&](Plant p, VertexId end, VertexId b, VertexId d, int zc) {
    if (p == Plant::twist) {
      if (residual[end] != 1) throw std::invalid_argument("a twist needs a one-color end");
      seed_half(m, p, end, 0, b, z, zc, 1, d);
    } else if (p == Plant::wedge) {
      if (residual[end] == 1) {
        seed_half(m, p, end, 0, b, z, 0, residual[z], d);
      } else if (residual[z] == 1) {
        seed_half(m, p, z, 0, b, end, 0, 2, d);
      }
    }
  };
  const bool split_z = plant.lz == 2 && plant.r1 == Plant::twist && plant.r2 == Plant::twist;
  seed(plant.r1, x, u1, v1, 0);
  seed(plant.r2, y, u2, v2, split_z ? 1 : 0);

  auto complete = [&](const Edge& e, bool residual_only) {
    std::vector<std::pair<int, int>> candidates;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const bool both_residual = a < residual[e.u] && b < residual[e.v];
        if (both_residual == residual_only) candidates.emplace_back(a, b);
      }
    }
    rng.shuffle(candidates);
    for (auto [a, b] : candidates) {
      if (m.free(e.u, a, e.v, b)) m.add(e.u, a, e.v, b);
    }
  };
  // Residual part first, then edges touching a hub-blocked color, so that
  // the residual is exactly what was planted.
  for (const Edge& e : t.edges()) {
    if (e.u != u && e.u != v) complete(e, true);
  }
  for (const Edge& e : t.edges()) {
    if (e.u != u && e.u != v) complete(e, false);
  }
  // Hub color 0 blocks the non-residual colors; the hubs' other colors are
  // matched at random into what is left.
  for (VertexId w : t.neighbors(u)) {
    const int hit = residual[w] == 1 ? 1 : 2;
    m.add(u, 0, w, hit);
    std::vector<int> rest;
    for (int k = 0; k < 3; ++k) {
      if (k != hit) rest.push_back(k);
    }
    rng.shuffle(rest);
    m.add(u, 1, w, rest[0]);
    m.add(u, 2, w, rest[1]);
  }
  for (VertexId w : t.neighbors(v)) {
    const int hit = 2;
    m.add(v, 0, w, hit);
    std::vector<int> rest{0, 1};
    rng.shuffle(rest);
    m.add(v, 1, w, rest[0]);
    m.add(v, 2, w, rest[1]);
  }
  Cover c(CoverData{t, std::vector<int>(kVertices, 3), m.take()});
  return relabel(rng, c, true);
}

Cover random_R_cover(Rng& rng, const std::array<int, 4>& sizes, double keep) {
  return relabel(rng, random_cover(rng, build_R(), sizes, keep));
}

Cover random_twisted_R_cover(Rng& rng) { return relabel(rng, twisted_core(1, rng, 1.0)); }

Cover random_half_twisted_R_cover(Rng& rng) { return relabel(rng, twisted_core(2, rng, 0.75)); }

OuterplaneGraph random_near_triangulation(Rng& rng, int n) { return random_outerplane(rng, n, 0.0); }

OuterplaneGraph random_outerplane(Rng& rng, int n, double drop) {
  if (n < 3) throw OuterplaneError("need at least three vertices");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  std::vector<int> poly(n);
  std::iota(poly.begin(), poly.end(), 0);
  while (poly.size() > 3) {
    const int m = static_cast<int>(poly.size());
    const int i = static_cast<int>(rng.below(m));
    const int prev = poly[(i + m - 1) % m];
    const int next = poly[(i + 1) % m];
    if (!rng.chance(drop)) edges.emplace_back(prev, next);
    poly.erase(poly.begin() + i);
  }
  const std::vector<int> pi = rng.permutation(n);
  for (auto& [a, b] : edges) {
    a = pi[a];
    b = pi[b];
  }
  std::vector<VertexId> cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = pi[i];
  return OuterplaneGraph(Graph(n, edges), cycle);
}

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (rng.chance(p)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, edges);
}

}  // namespace defcor

#include <doctest.h>

#include "defcor/gadgets.hpp"
#include "defcor/random.hpp"
#include "oracle.hpp"

using namespace defcor;

namespace {

Graph k2() {
  const std::vector<std::pair<VertexId, VertexId>> e{{0, 1}};
  return Graph(2, e);
}

Cover twisted_r() { return build_named_gadget("twisted-r", {}).cover; }

// Relabeling of a cover: vertex v becomes perm[v], and color i of v becomes
// colors[v][i].
Cover relabel(const Cover& c, const std::vector<VertexId>& perm,
              const std::vector<std::vector<int>>& colors) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : c.base().edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  CoverData d{Graph(c.num_vertices(), edges), std::vector<int>(c.num_vertices()), {}};
  for (VertexId v = 0; v < c.num_vertices(); ++v) d.list_sizes[perm[v]] = c.list_size(v);
  for (int e = 0; e < c.base().num_edges(); ++e) {
    const Edge& old = c.base().edge(e);
    const bool flip = perm[old.u] > perm[old.v];
    Matching m;
    for (auto [a, b] : c.matching(e)) {
      const int ca = colors[old.u][a];
      const int cb = colors[old.v][b];
      m.emplace_back(flip ? cb : ca, flip ? ca : cb);
    }
    d.matchings.push_back(m);
  }
  return Cover(std::move(d));
}

}  // namespace

TEST_CASE("validate accepts the identity cover and the twisted cover") {
  CHECK(validate(identity_cover(k2(), 3).data()).ok());
  CHECK(validate(twisted_r().data()).ok());
}

TEST_CASE("validate reports a non-matching") {
  CoverData d{k2(), {3, 3}, {{{0, 0}, {0, 1}}}};
  const ValidationReport r = validate(d);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].clause == CoverClause::matching);
  CHECK_THROWS_AS(Cover{d}, CoverError);
}

TEST_CASE("validate reports colors outside lists and wrong shapes") {
  CHECK_FALSE(validate(CoverData{k2(), {2, 2}, {{{0, 5}}}}).ok());
  CHECK_FALSE(validate(CoverData{k2(), {2}, {{}}}).ok());
  CHECK_FALSE(validate(CoverData{k2(), {2, 2}, {}}).ok());
}

TEST_CASE("defects count conflicting colored neighbors only") {
  const Cover c = identity_cover(Graph(3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}}), 2);
  PartialColoring phi(3);
  phi.assign(0, 0);
  phi.assign(1, 0);
  CHECK(defects(c, phi) == std::vector<int>{1, 1, 0});
  phi.assign(2, 0);
  CHECK(defects(c, phi) == std::vector<int>{1, 2, 1});
  CHECK(max_defect(c, phi) == 2);
  CHECK(defects(c, phi) == oracle::defects(c, phi.values()));
  phi.assign(2, 5);
  CHECK_THROWS_AS(check_in_lists(c, phi), CoverError);
}

TEST_CASE("subcover of K2 removes the conflicting color") {
  const Cover c = identity_cover(k2(), 3);
  PartialColoring phi(2);
  phi.assign(0, 0);
  const Subcover s = subcover(c, phi);
  CHECK(s.cover.num_vertices() == 1);
  CHECK(s.vertex_origin == std::vector<VertexId>{1});
  CHECK(s.color_origin[0] == std::vector<int>{1, 2});
}

TEST_CASE("empty partial coloring gives back the cover") {
  const Cover c = twisted_r();
  const Subcover s = subcover(c, PartialColoring(4));
  CHECK(s.cover.list_sizes() == c.list_sizes());
  CHECK(s.cover.data().matchings == c.data().matchings);
}

TEST_CASE("subcover of a maximal T cover at a hub pair leaves two colors on the R vertices") {
  for (int i = 0; i < 50; ++i) {
    Rng rng(derive_seed(21, i));
    const Cover c = random_cover(rng, build_T5(), 3);
    PartialColoring phi(9);
    phi.assign(t_role::u, static_cast<int>(rng.below(3)));
    phi.assign(t_role::v, static_cast<int>(rng.below(3)));
    const Subcover s = subcover(c, phi);
    CHECK(validate(s.cover.data()).ok());
    for (VertexId w : {residual_role::u1, residual_role::v1, residual_role::u2, residual_role::v2})
      CHECK(s.cover.list_size(w) == 2);
    for (VertexId w : {residual_role::x, residual_role::z, residual_role::y}) {
      CHECK(s.cover.list_size(w) >= 1);
      CHECK(s.cover.list_size(w) <= 2);
    }
    // No kept color conflicts with the image of phi.
    for (int v = 0; v < s.cover.num_vertices(); ++v) {
      for (int k = 0; k < s.cover.list_size(v); ++k) {
        const Color orig{s.vertex_origin[v], s.color_origin[v][k]};
        CHECK_FALSE(c.conflict(orig, {t_role::u, phi[t_role::u]}));
        CHECK_FALSE(c.conflict(orig, {t_role::v, phi[t_role::v]}));
      }
    }
  }
}

TEST_CASE("subcover rejects improper partial colorings") {
  const Cover c = identity_cover(k2(), 2);
  PartialColoring phi(2);
  phi.assign(0, 1);
  phi.assign(1, 1);
  CHECK_THROWS_AS(subcover(c, phi), CoverError);
}

TEST_CASE("maximalize") {
  SUBCASE("already maximal cover is unchanged") {
    const Cover c = identity_cover(k2(), 3);
    CHECK(maximalize(c) == c);
  }
  SUBCASE("empty 2-fold K2 matching gets two edges") {
    const Cover c(CoverData{k2(), {2, 2}, {{}}});
    const Cover m = maximalize(c);
    CHECK(m.matching(0).size() == 2);
    CHECK(all_matchings_maximal(m));
    CHECK_FALSE(all_matchings_maximal(c));
  }
}

TEST_CASE("trim of a 4-fold K2 cover keeps proper colorings proper") {
  const Cover c = identity_cover(k2(), 4);
  const Cover t = trim(c, 3);
  CHECK(t.list_sizes() == std::vector<int>{3, 3});
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const auto dt = oracle::defects(t, {a, b});
      const auto dc = oracle::defects(c, {a, b});
      CHECK(dt == dc);
    }
  }
  CHECK_THROWS_AS(trim(c, 5), CoverError);
}

TEST_CASE("maximalize and trim transfer colorings on small random covers") {
  for (int i = 0; i < 60; ++i) {
    Rng rng(derive_seed(22, i));
    const int n = rng.uniform_int(2, 7);
    const Graph g = random_graph(rng, n, 0.5);
    const Cover c = random_cover(rng, g, 3, 0.5);
    const Cover m = maximalize(c);
    const Cover t = trim(c, 2);
    CHECK(validate(m.data()).ok());
    CHECK(validate(t.data()).ok());
    for (int d = 0; d <= 1; ++d) {
      for (const auto& col : oracle::colorings(m, d)) {
        const auto def = oracle::defects(c, col);
        CHECK(*std::max_element(def.begin(), def.end()) <= d);
      }
      for (const auto& col : oracle::colorings(t, d)) {
        const auto def = oracle::defects(c, col);
        CHECK(*std::max_element(def.begin(), def.end()) <= d);
      }
    }
  }
}

TEST_CASE("isomorphism") {
  const Cover t = twisted_r();
  CHECK(isomorphic(t, t));

  // Swap b1/b2 and d1/d2: the bijection is explicit, so check it directly.
  CoverIsomorphism swap{{0, 1, 2, 3}, {{0}, {1, 0}, {0}, {1, 0}}};
  const Cover swapped = relabel(t, swap.vertex_map, swap.color_map);
  CHECK(is_isomorphism(t, swapped, swap));
  CHECK(isomorphic(t, swapped));

  // Identity-matching cover admits a 1-defective coloring; the twisted one
  // does not, so they cannot be isomorphic.
  CoverData plain{build_R(), {1, 2, 1, 2}, {{{0, 0}}, {{0, 0}}, {{0, 0}}, {{0, 0}}, {{0, 0}, {1, 1}}}};
  CHECK_FALSE(isomorphic(t, Cover(plain)));
  CHECK_FALSE(oracle::colorings(Cover(plain), 1).empty());
  CHECK(oracle::colorings(t, 1).empty());
}

TEST_CASE("isomorphism is an equivalence on random small covers") {
  for (int i = 0; i < 40; ++i) {
    Rng rng(derive_seed(23, i));
    const Cover a = random_R_cover(rng, {1, 2, 2, 2});
    const std::vector<VertexId> perm_b = rng.permutation(4);
    std::vector<std::vector<int>> colors(4);
    for (int v = 0; v < 4; ++v) colors[v] = rng.permutation(a.list_size(v));
    const Cover b = relabel(a, perm_b, colors);
    const Cover c = random_R_cover(rng, {1, 2, 2, 2});
    CHECK(isomorphic(a, a));
    CHECK(isomorphic(a, b) == isomorphic(b, a));
    CHECK(isomorphic(a, b));
    if (isomorphic(b, c)) CHECK(isomorphic(a, c));
    auto iso = find_isomorphism(a, c);
    if (iso) CHECK(is_isomorphism(a, c, *iso));
  }
}

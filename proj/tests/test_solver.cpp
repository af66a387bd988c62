#include <doctest.h>

#include "defcor/gadgets.hpp"
#include "defcor/random.hpp"
#include "defcor/solver.hpp"
#include "oracle.hpp"

using namespace defcor;

namespace {

Graph path(int n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

std::vector<std::vector<int>> as_vectors(const std::vector<PartialColoring>& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cs) out.push_back(c.values());
  return out;
}

Cover twisted_r() { return build_named_gadget("twisted-r", {}).cover; }

}  // namespace

TEST_CASE("single vertex gets its first color") {
  const Cover c(CoverData{Graph(1, {}), {3}, {}});
  const Certificate cert = find_coloring(c, DefectConstraint::uniform(0));
  REQUIRE(cert.feasible());
  CHECK((*cert.coloring)[0] == 0);
}

TEST_CASE("twisted cover has no 1-defective coloring") {
  const Cover t = twisted_r();
  CHECK(oracle::colorings(t, 1).empty());
  CHECK_FALSE(find_coloring(t, DefectConstraint::uniform(1)).feasible());
  CHECK(enumerate_colorings(t, DefectConstraint::uniform(1)).empty());
  CHECK(find_coloring(t, DefectConstraint::uniform(2)).feasible());
}

TEST_CASE("untwisted 1-2-1-2 cover has a 1-defective coloring") {
  // The twisted cover with b-d matched straight instead of crossed.
  CoverData d = twisted_r().data();
  d.matchings[4] = {{0, 0}, {1, 1}};
  const Cover c(d);
  const Certificate cert = find_coloring(c, DefectConstraint::uniform(1));
  REQUIRE(cert.feasible());
  CHECK(max_defect(c, *cert.coloring) <= 1);
}

TEST_CASE("enumeration on K2") {
  const std::vector<std::pair<VertexId, VertexId>> e{{0, 1}};
  const Cover c = identity_cover(Graph(2, e), 2);
  CHECK(enumerate_colorings(c, DefectConstraint::uniform(0)).size() == 2);
  CHECK(enumerate_colorings(c, DefectConstraint::uniform(1)).size() == 4);
  CHECK_THROWS_AS(enumerate_colorings(c, DefectConstraint::uniform(1), 3), BudgetExceeded);
}

TEST_CASE("pins and per-vertex caps") {
  const Cover c = identity_cover(path(3), 2);
  PartialColoring pin(3);
  pin.assign(0, 1);
  pin.assign(2, 1);
  const Certificate cert = find_coloring(c, DefectConstraint::uniform(0), pin);
  REQUIRE(cert.feasible());
  CHECK((*cert.coloring)[1] == 0);
  const auto k = DefectConstraint::uniform(1).with(1, 0);
  PartialColoring clash(3);
  clash.assign(0, 0);
  clash.assign(1, 0);
  CHECK_FALSE(find_coloring(c, k, clash).feasible());
  clash.assign(1, 7);
  CHECK_THROWS_AS(find_coloring(c, k, clash), CoverError);
}

TEST_CASE("budget exhaustion throws") {
  const Cover t = twisted_r();
  CHECK_THROWS_AS(find_coloring(t, DefectConstraint::uniform(1), {}, SearchOptions{1}), BudgetExceeded);
}

TEST_CASE("solver agrees with the enumeration oracle on random small covers") {
  for (int i = 0; i < 300; ++i) {
    Rng rng(derive_seed(31, i));
    const int n = rng.uniform_int(1, 8);
    const Graph g = random_graph(rng, n, 0.5);
    const int k = rng.uniform_int(1, 3);
    const Cover c = random_cover(rng, g, k, rng.chance(0.5) ? 1.0 : 0.7);
    std::vector<int> caps(n);
    DefectConstraint dc = DefectConstraint::uniform(rng.uniform_int(0, 2));
    for (VertexId v = 0; v < n; ++v) {
      if (rng.chance(0.2)) dc.with(v, static_cast<int>(rng.below(2)));
      caps[v] = dc.cap(v);
    }
    const auto expected = oracle::colorings(c, caps);
    CHECK(as_vectors(enumerate_colorings(c, dc)) == expected);
    const Certificate cert = find_coloring(c, dc);
    CHECK(cert.feasible() == !expected.empty());
    if (cert.feasible()) {
      CHECK(satisfies(c, dc, *cert.coloring));
      CHECK(std::binary_search(expected.begin(), expected.end(), cert.coloring->values()));
    }
  }
}

TEST_CASE("greedy coloring") {
  SUBCASE("path with 2-fold identity cover") {
    const Cover c = identity_cover(path(3), 2);
    const PartialColoring phi = greedy_color(c, degeneracy(c.base()));
    CHECK(phi.total());
    CHECK(max_defect(c, phi) == 0);
  }
  SUBCASE("C5 with random 3-fold covers") {
    for (int i = 0; i < 50; ++i) {
      Rng rng(derive_seed(32, i));
      const Cover c = random_cover(rng, cycle(5), 3);
      const PartialColoring phi = greedy_color(c, degeneracy(c.base()));
      CHECK(max_defect(c, phi) == 0);
      CHECK_FALSE(oracle::colorings(c, 0).empty());
    }
  }
  SUBCASE("too few colors") {
    const Cover c = identity_cover(cycle(5), 2);
    CHECK_THROWS_AS(greedy_color(c, degeneracy(c.base())), CoverError);
  }
}

TEST_CASE("contribution set matches enumeration of hub defects") {
  for (int i = 0; i < 30; ++i) {
    Rng rng(derive_seed(33, i));
    const Cover c = random_cover(rng, build_T5(), 2);
    const int a = static_cast<int>(rng.below(2));
    const int b = static_cast<int>(rng.below(2));
    const ContributionSet set = contribution_set(c, t_role::u, t_role::v, a, b, 1);
    std::vector<int> caps(9, 1);
    caps[t_role::u] = caps[t_role::v] = 100;
    std::set<std::pair<int, int>> expected;
    for (const auto& col : oracle::colorings(c, caps, {{t_role::u, a}, {t_role::v, b}})) {
      const auto def = oracle::defects(c, col);
      expected.emplace(def[t_role::u], def[t_role::v]);
    }
    CHECK(set.pairs == expected);
  }
}

TEST_CASE("contribution set of a good copy contains (0,0)") {
  const Cover c = identity_cover(build_T5(), 3);
  CHECK(contribution_set(c, t_role::u, t_role::v, 0, 1, 1).contains(0, 0));
}

TEST_CASE("bad three-colour copy cannot avoid hub defects") {
  const Cover c = build_bad_cover_T3(1, 1);
  const ContributionSet set = contribution_set(c, t3_role::u, t3_role::v, 0, 0, 3);
  CHECK_FALSE(set.contains(0, 0));
  CHECK_FALSE(set.pairs.empty());
}

TEST_CASE("hub feasibility") {
  ContributionSet zero{{{0, 0}, {1, 0}}};
  std::vector<ContributionSet> sets(5, zero);
  CHECK(hub_feasible(sets, 0, 0).feasible);

  ContributionSet forced{{{1, 0}, {0, 1}, {2, 0}, {1, 2}}};
  std::vector<ContributionSet> seven(7, forced);
  CHECK_FALSE(hub_feasible(seven, 3, 3).feasible);
  std::vector<ContributionSet> six(6, forced);
  const HubSelection sel = hub_feasible(six, 3, 3);
  REQUIRE(sel.feasible);
  int su = 0, sv = 0;
  for (auto [a, b] : sel.picks) {
    su += a;
    sv += b;
  }
  CHECK(su <= 3);
  CHECK(sv <= 3);
  CHECK(sel.picks.size() == 6);
  std::vector<ContributionSet> with_empty{zero, ContributionSet{}};
  CHECK_FALSE(hub_feasible(with_empty, 5, 5).feasible);
}

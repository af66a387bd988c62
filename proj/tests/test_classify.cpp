#include <doctest.h>

#include "defcor/classify.hpp"
#include "defcor/gadgets.hpp"
#include "defcor/io.hpp"
#include "defcor/random.hpp"
#include "oracle.hpp"

using namespace defcor;

namespace {

// Cover of R (ids as in r_role); matchings in build_R's edge order
// ab, ad, bc, cd, bd, written (first endpoint index, second endpoint index).
Cover r_cover(std::vector<int> sizes, std::vector<Matching> m) {
  return Cover(CoverData{build_R(), std::move(sizes), std::move(m)});
}

Cover twisted_r() { return build_named_gadget("twisted-r", {}).cover; }

bool one_defective_with_zero_at(const Cover& c, VertexId v) {
  std::vector<int> caps(c.num_vertices(), 1);
  caps[v] = 0;
  return !oracle::colorings(c, caps).empty();
}

Census identity_census() { return bad_pair_census(identity_cover(build_T5(), 3)); }

}  // namespace

TEST_CASE("twist detection") {
  CHECK(is_twisted(twisted_r()));
  const Cover plain = r_cover({1, 2, 1, 2}, {{{0, 0}}, {{0, 0}}, {{0, 0}}, {{0, 0}}, {{0, 0}, {1, 1}}});
  CHECK_FALSE(is_twisted(plain));
  // Drop each cycle edge in turn.
  const Cover t = twisted_r();
  for (int e = 0; e < 5; ++e) {
    for (std::size_t k = 0; k < t.matching(e).size(); ++k) {
      CoverData d = t.data();
      d.matchings[e].erase(d.matchings[e].begin() + static_cast<long>(k));
      CHECK_FALSE(is_twisted(Cover(d)));
    }
  }
  CHECK_THROWS_AS(is_twisted(r_cover({1, 2, 2, 2}, std::vector<Matching>(5))), ProfileError);
}

TEST_CASE("twist witness realizes the pattern") {
  const auto lab = find_twist(twisted_r());
  REQUIRE(lab);
  const Cover t = twisted_r();
  auto col = [&](int role, int k) { return Color{lab->vertex[role], lab->colors[role][k]}; };
  // a1 b1 d2 c1 b2 d1 a1.
  CHECK(t.conflict(col(0, 0), col(1, 0)));
  CHECK(t.conflict(col(1, 0), col(3, 1)));
  CHECK(t.conflict(col(3, 1), col(2, 0)));
  CHECK(t.conflict(col(2, 0), col(1, 1)));
  CHECK(t.conflict(col(1, 1), col(3, 0)));
  CHECK(t.conflict(col(3, 0), col(0, 0)));
}

TEST_CASE("wedge detection") {
  CHECK(is_wedged_1212(twisted_r()));
  const Cover plain = r_cover({1, 2, 1, 2}, {{{0, 0}}, {{0, 0}}, {}, {}, {}});
  CHECK_FALSE(is_wedged_1212(plain));
  // b1 ~ a1 ~ d1 and c1 ~ b2 ~ d2 ~ c2.
  const Cover w = r_cover({1, 2, 2, 2}, {{{0, 0}}, {{0, 0}}, {{1, 0}}, {{1, 1}}, {{1, 1}}});
  CHECK(is_wedged_1222(w));
  CHECK(is_wedged(w));
  CHECK_FALSE(is_wedged_1222(r_cover({1, 2, 2, 2}, {{{0, 0}}, {{0, 0}}, {}, {}, {}})));
}

TEST_CASE("on maximal 1-2-1-2 covers, twisted means no 1-defective coloring") {
  for (int i = 0; i < 400; ++i) {
    Rng rng(derive_seed(41, i));
    const Cover c = i % 2 ? random_R_cover(rng, {1, 2, 1, 2}) : random_twisted_R_cover(rng);
    const bool twisted = is_twisted(c);
    CHECK(twisted == oracle::colorings(c, 1).empty());
    if (twisted) CHECK(is_wedged_1212(c));
  }
}

TEST_CASE("maximal 1-2-2-2 cover with no 1-defective coloring that spares c") {
  // a1 ~ b2, a1 ~ d2; b-c straight; c-d and b-d crossed.
  const Cover c = r_cover({1, 2, 2, 2},
                          {{{0, 1}}, {{0, 1}}, {{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}});
  CHECK(all_matchings_maximal(c));
  CHECK_FALSE(one_defective_with_zero_at(c, r_role::c));
  CHECK(one_defective_with_zero_at(c, r_role::a));
  CHECK_FALSE(is_wedged_1222(c));
}

TEST_CASE("unwedged non-maximal 1-2-1-2 cover with no 1-defective coloring that spares a") {
  const Cover c = r_cover({1, 2, 1, 2}, {{{0, 1}}, {}, {{0, 0}}, {{0, 1}}, {{0, 0}, {1, 1}}});
  CHECK_FALSE(all_matchings_maximal(c));
  CHECK_FALSE(is_twisted(c));
  CHECK_FALSE(is_wedged_1212(c));
  CHECK_FALSE(one_defective_with_zero_at(c, r_role::a));
}

TEST_CASE("residual classification") {
  SUBCASE("identity cover at a hub pair is good") {
    PartialColoring phi(9);
    phi.assign(t_role::u, 0);
    phi.assign(t_role::v, 1);
    const Subcover s = subcover(identity_cover(build_T5(), 3), phi);
    CHECK(classify_residual(s.cover).good());
  }
  SUBCASE("two colors on x, z and y is good") {
    CoverData d{build_T5().induced(std::vector<VertexId>{2, 3, 4, 5, 6, 7, 8}), std::vector<int>(7, 2), {}};
    d.matchings.assign(d.base.num_edges(), Matching{{0, 1}, {1, 0}});
    CHECK(classify_residual(Cover(d)).good());
  }
  SUBCASE("wrong list sizes are rejected") {
    CoverData d{build_T5().induced(std::vector<VertexId>{2, 3, 4, 5, 6, 7, 8}), std::vector<int>(7, 3), {}};
    d.matchings.assign(d.base.num_edges(), Matching{});
    CHECK_THROWS_AS(classify_residual(Cover(d)), ProfileError);
  }
}

TEST_CASE("planted residuals are classified with the planted kind") {
  struct Case {
    PlantedResidual plant;
    BadKind kind;
  };
  const std::vector<Case> cases{
      {{2, 1, 2, Plant::wedge, Plant::wedge}, BadKind::one},
      {{1, 1, 2, Plant::twist, Plant::none}, BadKind::two_i},
      {{2, 1, 1, Plant::none, Plant::twist}, BadKind::three_i},
      {{1, 2, 1, Plant::twist, Plant::twist}, BadKind::four},
      {{1, 1, 1, Plant::twist, Plant::none}, BadKind::five_i},
  };
  for (const auto& c : cases) {
    for (int i = 0; i < 10; ++i) {
      Rng rng(derive_seed(42, i));
      const Census census = bad_pair_census(random_planted_T_cover(rng, c.plant));
      bool found = false;
      for (const auto& e : census.entries) found = found || e.cls.bad == c.kind;
      CHECK_MESSAGE(found, to_string(c.kind));
    }
  }
}

TEST_CASE("pair types") {
  CHECK(pair_type(BadKind::one) == PairType{2, 1});
  CHECK(pair_type(BadKind::three_ii) == PairType{2, 1});
  CHECK(pair_type(BadKind::two_i) == PairType{1, 1});
  CHECK(pair_type(BadKind::five_ii) == PairType{1, 1});
  CHECK(pair_type(BadKind::four) == PairType{1, 2});
  CHECK(to_string(PairType{1, 2}) == "1-2");
}

TEST_CASE("census") {
  const Census id = identity_census();
  CHECK(id.entries.size() == 9);
  CHECK(id.bad_count() == 0);
  CHECK(census_violations(id).empty());
  for (int i = 0; i < 300; ++i) {
    Rng rng(derive_seed(43, i));
    const Cover c = i % 2 ? random_cover(rng, build_T5(), 3)
                          : random_planted_T_cover(rng, random_bad_profile(rng));
    const Census census = bad_pair_census(c);
    CHECK(census.bad_count() <= 6);
    CHECK(census_violations(census).empty());
  }
}

TEST_CASE("census violations are reported") {
  Census fake = identity_census();
  for (int b = 0; b < 2; ++b) {
    fake.entries[b].cls.bad = BadKind::four;
    fake.entries[b].type = PairType{1, 2};
  }
  CHECK_FALSE(census_violations(fake).empty());
}

TEST_CASE("good residual of a maximal T cover with no 1-defective coloring") {
  const char* text = R"({"edges":[
    {"u":0,"v":3,"matching":[[0,1]]},{"u":0,"v":4,"matching":[[0,1]]},
    {"u":3,"v":4,"matching":[[0,1],[1,0]]},{"u":1,"v":3,"matching":[]},
    {"u":1,"v":4,"matching":[[0,0]]},{"u":1,"v":5,"matching":[[0,0]]},
    {"u":1,"v":6,"matching":[[0,1]]},{"u":5,"v":6,"matching":[[0,1],[1,0]]},
    {"u":2,"v":5,"matching":[]},{"u":2,"v":6,"matching":[[0,0]]}],
    "vertices":[{"id":0,"label":"x","list_size":1},{"id":1,"label":"z","list_size":1},
    {"id":2,"label":"y","list_size":1},{"id":3,"label":"u1","list_size":2},
    {"id":4,"label":"v1","list_size":2},{"id":5,"label":"u2","list_size":2},
    {"id":6,"label":"v2","list_size":2}]})";
  const Cover r = cover_from_json(json::parse(text)).cover;
  CHECK(classify_residual(r).good());
  CHECK(oracle::colorings(r, 1).empty());
}

TEST_CASE("light pair") {
  SUBCASE("identity copies") {
    const Cover c = identity_cover(build_T_k(4), 3);
    const LightPair p = find_light_pair(c);
    CHECK(p.bad_copies.empty());
    const PartialColoring phi = extend_from_light_pair(c, p);
    CHECK(max_defect(c, phi) <= 1);
  }
  SUBCASE("one copy with bad pairs") {
    Rng rng(derive_seed(44, 0));
    const Cover bad = random_planted_T_cover(rng, {1, 1, 1, Plant::twist, Plant::twist});
    const Cover id = identity_cover(build_T5(), 3);
    const std::vector<Cover> copies{bad, id, id, id};
    const Cover c = glue_T_copies(copies);
    const Census census = bad_pair_census(bad);
    REQUIRE(census.bad_count() >= 1);
    const LightPair p = find_light_pair(c);
    CHECK(p.bad_copies.size() <= 1);
    CHECK((p.bad_copies.empty() == census.at(p.alpha, p.beta).cls.good()));
  }
  SUBCASE("random covers always have a light pair") {
    for (int i = 0; i < 200; ++i) {
      Rng rng(derive_seed(45, i));
      const Cover c = random_cover(rng, build_T_k(4), 3);
      CHECK(find_light_pair(c).bad_copies.size() <= 2);
    }
  }
}

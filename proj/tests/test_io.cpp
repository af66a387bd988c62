#include <doctest.h>

#include "defcor/gadgets.hpp"
#include "defcor/io.hpp"
#include "defcor/random.hpp"
#include "defcor/verify.hpp"

using namespace defcor;

TEST_CASE("json round trip on every gadget") {
  for (const auto& name : gadget_names()) {
    const NamedGadget g = build_named_gadget(name, {});
    const json doc = cover_to_json(g.cover, g.outer_cycle);
    const CoverFile back = cover_from_json(json::parse(doc.dump()));
    CHECK_MESSAGE(back.cover == g.cover, name);
    CHECK(back.outer_cycle == g.outer_cycle);
    CHECK(cover_to_json(back.cover, back.outer_cycle) == doc);
  }
}

TEST_CASE("json round trip on random covers") {
  for (int i = 0; i < 50; ++i) {
    Rng rng(derive_seed(61, i));
    const Cover c = random_cover(rng, random_graph(rng, 7, 0.5), 3, 0.7);
    CHECK(cover_from_json(cover_to_json(c)).cover == c);
  }
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(cover_from_json(json::parse(R"({"vertices":3})")), ParseError);
  CHECK_THROWS_AS(cover_from_json(json::parse(R"({"vertices":[{"id":0,"list_size":1}],"edges":[{"u":0,"v":0,"matching":[]}]})")),
                  GraphError);
  CHECK_THROWS_AS(
      cover_from_json(json::parse(
          R"({"vertices":[{"id":0,"list_size":1},{"id":1,"list_size":1}],"edges":[{"u":0,"v":1,"matching":[[0,3]]}]})")),
      CoverError);
}

TEST_CASE("dot export") {
  const std::string dot = cover_to_dot(build_fan_gadget().cover, "fan");
  CHECK(dot.rfind("graph fan {", 0) == 0);
  CHECK(dot.find("list_size") != std::string::npos);
  CHECK(dot.back() == '\n');
}

TEST_CASE("certificate json") {
  const std::vector<std::pair<VertexId, VertexId>> e{{0, 1}};
  const Cover c = identity_cover(Graph(2, e), 2);
  const json doc = certificate_to_json(find_coloring(c, DefectConstraint::uniform(0)));
  CHECK(doc["kind"] == "coloring");
  CHECK(doc["coloring"]["0"] != doc["coloring"]["1"]);
}

TEST_CASE("reports do not depend on the thread count") {
  VerifyOptions one;
  one.seed = 9;
  VerifyOptions four = one;
  four.threads = 4;
  for (const std::string target : {"lemma-5.8", "thm-4.1", "lemma-bad"}) {
    const json a = run_fuzz(target, 60, one).to_json(false);
    const json b = run_fuzz(target, 60, four).to_json(false);
    CHECK(a == b);
  }
  one.iters = four.iters = 20;
  CHECK(verify_claim("cor-g63-4corr", one).to_json(false) == verify_claim("cor-g63-4corr", four).to_json(false));
}

TEST_CASE("harness plumbing") {
  CHECK(claim_ids().size() == 11);
  CHECK(fuzz_targets().size() == 9);
  CHECK_THROWS_AS(verify_claim("lemma-9.9"), UnknownClaim);
  CHECK_THROWS_AS(run_fuzz("nope", 1), UnknownClaim);
  const VerificationReport r = verify_claim("thm-1.4-tight");
  CHECK(r.verdict == Verdict::verified);
  CHECK(r.exit_code() == 0);
  const json doc = r.to_json();
  for (const char* key : {"claim", "verdict", "checks", "seed", "elapsed_ms"}) CHECK(doc.contains(key));
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                       [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
  try {
    parallel_for(50, 4, [](int i) {
      if (i == 7 || i == 31) throw std::runtime_error(std::to_string(i));
    });
    FAIL("no exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "7");
  }
}

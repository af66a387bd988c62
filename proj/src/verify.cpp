#include "defcor/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "defcor/classify.hpp"
#include "defcor/gadgets.hpp"
#include "defcor/outerplanar.hpp"
#include "defcor/random.hpp"

namespace defcor {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::falsified: return "falsified";
    case Verdict::error: return "error";
  }
  return "error";
}

json VerificationReport::to_json(bool timing) const {
  json doc{{"claim", claim}, {"verdict", defcor::to_string(verdict)}, {"seed", seed}};
  json list = json::array();
  for (const auto& c : checks) {
    json item{{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}};
    if (!c.data.is_null()) item["data"] = c.data;
    list.push_back(std::move(item));
  }
  doc["checks"] = std::move(list);
  if (!error.empty()) doc["error"] = error;
  if (timing) doc["elapsed_ms"] = elapsed_ms;
  return doc;
}

int VerificationReport::exit_code() const {
  switch (verdict) {
    case Verdict::verified: return 0;
    case Verdict::falsified: return 1;
    case Verdict::error: return 2;
  }
  return 2;
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex guard;
  int failed_at = count;
  std::exception_ptr failure;
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(guard);
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(threads, count); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

using Clock = std::chrono::steady_clock;

CheckResult make_check(std::string id, bool passed, std::string detail, json data = nullptr) {
  return {std::move(id), passed, std::move(detail), std::move(data)};
}

std::string pair_id(const std::string& prefix, int a, int b) {
  return prefix + "-" + std::to_string(a) + "-" + std::to_string(b);
}

json pairs_to_json(const std::set<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

PartialColoring hub_pin(int n, VertexId hub1, int c1, VertexId hub2, int c2) {
  PartialColoring pin(n);
  pin.assign(hub1, c1);
  pin.assign(hub2, c2);
  return pin;
}

// ---------------------------------------------------------------------------
// Fuzz targets

struct Outcome {
  std::string failure;
  json instance;
  std::vector<std::string> tags;
};

using IterFn = std::function<Outcome(Rng&, const SearchOptions&)>;

constexpr int kMaxReproducers = 10;

Outcome fail_with(std::string why, const Cover& c, json extra = nullptr) {
  Outcome o;
  o.failure = std::move(why);
  o.instance = {{"cover", cover_to_json(c)}};
  if (!extra.is_null()) o.instance["context"] = std::move(extra);
  return o;
}

bool feasible(const Cover& c, const DefectConstraint& k, const SearchOptions& opt,
              const PartialColoring& pin = {}) {
  return find_coloring(c, k, pin, opt).feasible();
}

Outcome fuzz_lemma_5_2(Rng& rng, const SearchOptions& opt) {
  const Cover c = rng.chance(0.5) ? random_R_cover(rng, {1, 2, 1, 2}) : random_twisted_R_cover(rng);
  const bool twisted = is_twisted(c);
  const bool wedged = is_wedged_1212(c);
  Outcome o;
  o.tags.push_back(twisted ? "twisted" : wedged ? "wedged" : "plain");
  if (twisted && !wedged) return fail_with("twisted cover is not wedged", c);
  const bool colorable = feasible(c, DefectConstraint::uniform(1), opt);
  if (twisted && colorable) return fail_with("twisted cover has a 1-defective coloring", c);
  if (!twisted && !colorable) return fail_with("untwisted cover has no 1-defective coloring", c);
  if (!wedged) {
    for (VertexId a = 0; a < 4; ++a) {
      if (c.list_size(a) != 1) continue;
      if (!feasible(c, DefectConstraint::uniform(1).with(a, 0), opt))
        return fail_with("unwedged cover has no 1-defective coloring with def(a) = 0", c, {{"a", a}});
    }
  }
  return o;
}

// The one-color vertex of a 1-2-2-2 cover of R and its non-neighbor.
std::pair<VertexId, VertexId> tip_and_opposite(const Cover& c) {
  VertexId a = 0;
  while (c.list_size(a) != 1) ++a;
  VertexId opposite = 0;
  while (opposite == a || c.base().adjacent(a, opposite)) ++opposite;
  return {a, opposite};
}

Outcome fuzz_lemma_5_4(Rng& rng, const SearchOptions& opt) {
  const Cover c = rng.chance(0.5) ? random_R_cover(rng, {1, 2, 2, 2}) : random_half_twisted_R_cover(rng);
  const auto [a, opposite] = tip_and_opposite(c);
  const bool wedged = is_wedged_1222(c);
  Outcome o;
  o.tags.push_back(wedged ? "wedged" : "plain");
  const bool part_i = feasible(c, DefectConstraint::uniform(1).with(opposite, 0), opt);
  const bool part_ii = wedged || feasible(c, DefectConstraint::uniform(1).with(a, 0), opt);
  if (!part_i) o.tags.push_back(wedged ? "violates-i-wedged" : "violates-i-unwedged");
  if (!part_ii) o.tags.push_back("violates-ii");
  if (!part_i) {
    Outcome f = fail_with("(i) no 1-defective coloring with def(c) = 0", c, {{"a", a}, {"c", opposite}});
    f.tags = std::move(o.tags);
    return f;
  }
  if (!part_ii) {
    Outcome f = fail_with("(ii) unwedged cover has no 1-defective coloring with def(a) = 0", c, {{"a", a}});
    f.tags = std::move(o.tags);
    return f;
  }
  return o;
}

Outcome fuzz_lemma_5_6(Rng& rng, const SearchOptions& opt) {
  const Cover c = rng.below(3) == 0 ? random_R_cover(rng, {1, 2, 2, 2}) : random_half_twisted_R_cover(rng);
  const VertexId cv = tip_and_opposite(c).second;
  Outcome o;
  bool any = false;
  for (int deleted = 0; deleted < 2; ++deleted) {
    if (!is_twisted(delete_color(c, {cv, deleted}).cover)) continue;
    any = true;
    const int kept = 1 - deleted;
    json ctx{{"c", cv}, {"twisted_without", deleted}};
    if (is_wedged_1212(delete_color(c, {cv, kept}).cover))
      return fail_with("the other one-color restriction is wedged", c, ctx);
    PartialColoring pin(4);
    pin.assign(cv, deleted);
    if (!feasible(c, DefectConstraint::uniform(0), opt, pin))
      return fail_with("no proper coloring using the deleted color at c", c, ctx);
  }
  o.tags.push_back(any ? "half-twisted" : "untwisted");
  return o;
}

Cover mixed_T_cover(Rng& rng, int planted_weight) {
  static const Graph t = build_T5();
  if (static_cast<int>(rng.below(4)) < planted_weight)
    return random_planted_T_cover(rng, random_bad_profile(rng));
  return random_cover(rng, t, 3);
}

Outcome fuzz_lemma_5_8(Rng& rng, const SearchOptions&) {
  const Cover c = mixed_T_cover(rng, 2);
  const Census census = bad_pair_census(c);
  Outcome o;
  o.tags.push_back("bad-pairs=" + std::to_string(census.bad_count()));
  if (census.bad_count() > 6)
    return fail_with("cover is bad for " + std::to_string(census.bad_count()) + " pairs", c);
  return o;
}

Outcome fuzz_lemma_6(Rng& rng, const SearchOptions&) {
  const Cover c = mixed_T_cover(rng, 2);
  const Census census = bad_pair_census(c);
  Outcome o;
  for (const auto& e : census.entries) {
    if (e.type) o.tags.push_back("type-" + to_string(*e.type));
  }
  const auto violations = census_violations(census);
  if (!violations.empty()) return fail_with(violations.front(), c, {{"census", census_to_json(census)}});
  return o;
}

Outcome fuzz_lemma_good(Rng& rng, const SearchOptions& opt) {
  const Cover c = mixed_T_cover(rng, 1);
  const Census census = bad_pair_census(c);
  Outcome o;
  Outcome failed;
  for (const auto& e : census.entries) {
    if (!e.cls.good()) continue;
    o.tags.push_back("good");
    const auto pin = hub_pin(t_role::kVertices, t_role::u, e.alpha, t_role::v, e.beta);
    const auto caps = DefectConstraint::uniform(1).with(t_role::u, 0).with(t_role::v, 0);
    if (feasible(c, caps, opt, pin)) continue;
    o.tags.push_back("good-without-extension");
    if (failed.failure.empty()) {
      failed = fail_with("good pair has no extension with hub defects (0,0)", c,
                         {{"pair", {e.alpha, e.beta}}});
    }
  }
  if (failed.failure.empty()) return o;
  failed.tags = std::move(o.tags);
  return failed;
}

Outcome fuzz_lemma_bad(Rng& rng, const SearchOptions& opt) {
  const Cover c = mixed_T_cover(rng, 3);
  const Census census = bad_pair_census(c);
  Outcome o;
  for (const auto& e : census.entries) {
    if (e.cls.good()) continue;
    o.tags.push_back(to_string(*e.cls.bad));
    const auto pin = hub_pin(t_role::kVertices, t_role::u, e.alpha, t_role::v, e.beta);
    for (auto [cu, cv] : {std::pair{1, 0}, std::pair{0, 1}}) {
      const auto caps = DefectConstraint::uniform(1).with(t_role::u, cu).with(t_role::v, cv);
      if (!feasible(c, caps, opt, pin)) {
        return fail_with("bad pair has no extension with hub caps (" + std::to_string(cu) + "," +
                             std::to_string(cv) + ")",
                         c, {{"pair", {e.alpha, e.beta}}, {"kind", to_string(*e.cls.bad)}});
      }
    }
  }
  return o;
}

Outcome fuzz_thm_4_1(Rng& rng, const SearchOptions& opt) {
  const int n = rng.uniform_int(3, 12);
  const double keep = rng.chance(0.5) ? 1.0 : 0.7;
  const OuterplaneGraph g = random_near_triangulation(rng, n);
  const Cover c = random_cover(rng, g.graph(), 2, keep);
  const auto [lo, hi] = lowest_outer_edge(g);
  Outcome o;
  o.tags.push_back(std::string("n=") + (n < 10 ? "0" : "") + std::to_string(n));
  for (auto [p, q] : {std::pair{lo, hi}, std::pair{hi, lo}}) {
    for (int cp = 0; cp < 2; ++cp) {
      for (int cq = 0; cq < 2; ++cq) {
        json ctx{{"outer_cycle", g.outer_cycle()}, {"u", p}, {"v", q}, {"pins", {cp, cq}}};
        PartialColoring phi;
        try {
          phi = color_near_triangulation(g, c, p, q, cp, cq);
        } catch (const Falsified& e) {
          return fail_with(e.what(), c, ctx);
        }
        const bool conflicting = c.conflict({p, cp}, {q, cq});
        const auto caps = DefectConstraint::uniform(3)
                              .with(p, conflicting ? 1 : 0)
                              .with(q, conflicting ? 2 : 1);
        if (!satisfies(c, caps, phi)) return fail_with("coloring breaks the endpoint contract", c, ctx);
        if (!feasible(c, caps, opt, hub_pin(n, p, cp, q, cq)))
          return fail_with("solver finds no coloring under the contract caps", c, ctx);
      }
    }
  }
  // Sparser outerplane graph through the full pipeline, checked against
  // plain enumeration.
  const OuterplaneGraph sparse = random_outerplane(rng, n, 0.5);
  const Cover sc = random_cover(rng, sparse.graph(), 2, keep);
  json ctx{{"outer_cycle", sparse.outer_cycle()}};
  PartialColoring phi;
  try {
    phi = color_outerplanar(sparse, sc);
  } catch (const Falsified& e) {
    return fail_with(e.what(), sc, ctx);
  }
  const auto all = enumerate_colorings(sc, DefectConstraint::uniform(3), opt.node_budget);
  if (!phi.total() || max_defect(sc, phi) > 3 || !std::binary_search(all.begin(), all.end(), phi))
    return fail_with("outerplanar coloring is not among the 3-defective colorings", sc, ctx);
  return o;
}

Outcome fuzz_light_pair(Rng& rng, const SearchOptions& opt) {
  std::vector<Cover> copies;
  for (int m = 0; m < 4; ++m) copies.push_back(mixed_T_cover(rng, 2));
  const Cover c = glue_T_copies(copies);
  Outcome o;
  try {
    const LightPair pair = find_light_pair(c, 4);
    o.tags.push_back("light-pair-bad-copies=" + std::to_string(pair.bad_copies.size()));
    const PartialColoring phi = extend_from_light_pair(c, pair, 4);
    if (!phi.total() || max_defect(c, phi) > 1) return fail_with("assembled coloring is not 1-defective", c);
  } catch (const Falsified& e) {
    // Separates a gap in the argument from a counterexample to the statement.
    const bool direct = feasible(c, DefectConstraint::uniform(1), opt);
    Outcome f = fail_with(e.what(), c, {{"direct_search_1_defective", direct}});
    f.tags = std::move(o.tags);
    f.tags.push_back(direct ? "assembly-failed-but-1-defective" : "no-1-defective-coloring");
    return f;
  }
  return o;
}

struct Target {
  IterFn fn;
  int default_iters;
};

const std::map<std::string, Target>& targets() {
  static const std::map<std::string, Target> table{
      {"lemma-5.2", {fuzz_lemma_5_2, 2000}},
      {"lemma-5.4", {fuzz_lemma_5_4, 2000}},
      {"lemma-5.6", {fuzz_lemma_5_6, 2000}},
      {"lemma-5.8", {fuzz_lemma_5_8, 10000}},
      {"lemma-6.x", {fuzz_lemma_6, 10000}},
      {"lemma-good", {fuzz_lemma_good, 2000}},
      {"lemma-bad", {fuzz_lemma_bad, 2000}},
      {"thm-4.1", {fuzz_thm_4_1, 500}},
      {"thm-5.10-light-pair", {fuzz_light_pair, 10000}},
  };
  return table;
}

CheckResult fuzz_check(const std::string& id, int iters, const VerifyOptions& opt) {
  const Target& target = targets().at(id);
  std::vector<Outcome> outcomes(iters);
  parallel_for(iters, opt.threads, [&](int i) {
    Rng rng(derive_seed(opt.seed, static_cast<std::uint64_t>(i)));
    outcomes[i] = target.fn(rng, opt.search);
  });
  std::map<std::string, int> counts;
  for (const auto& o : outcomes) {
    for (const auto& t : o.tags) ++counts[t];
  }
  json data{{"iterations", iters}, {"counts", counts}};
  std::ostringstream summary;
  for (const auto& [tag, n] : counts) summary << "; " << tag << " " << n;

  int failures = 0;
  int first = -1;
  for (int i = 0; i < iters; ++i) {
    const Outcome& o = outcomes[i];
    if (o.failure.empty()) continue;
    if (first < 0) first = i;
    const std::uint64_t seed = derive_seed(opt.seed, static_cast<std::uint64_t>(i));
    json repro{{"target", id}, {"iteration", i}, {"iteration_seed", seed}, {"failure", o.failure},
               {"instance", o.instance}};
    if (!opt.reproducer_dir.empty() && failures < kMaxReproducers) {
      write_text_file(opt.reproducer_dir + "/" + id + "-iter" + std::to_string(i) + ".json",
                      repro.dump(2) + "\n");
    }
    if (failures == 0) data["counterexample"] = std::move(repro);
    ++failures;
  }
  data["failures"] = failures;
  if (failures > 0) {
    std::ostringstream detail;
    detail << failures << " of " << iters << " instances fail; first at iteration " << first << ": "
           << outcomes[first].failure << summary.str();
    return make_check(id, false, detail.str(), std::move(data));
  }
  return make_check(id, true, std::to_string(iters) + " instances" + summary.str(), std::move(data));
}

// ---------------------------------------------------------------------------
// Registered claims

int iterations(const VerifyOptions& opt, int fallback) { return opt.iters.value_or(fallback); }

std::vector<CheckResult> claim_lemma_3_1(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  using namespace t3_role;
  {
    const Cover c = build_bad_cover_T3(1, 1);
    const Graph& g = c.base();
    bool ok = g.num_vertices() == kVertices && g.num_edges() == 38;
    // Spine colors left once both hubs are colored; ears lose one color to
    // their hub.
    std::vector<int> forced;
    for (int i = 1; i <= 5; ++i) {
      int free = 0, which = -1;
      for (int k = 0; k < 3; ++k) {
        if (c.partner(z(i), k, u) < 0 && c.partner(z(i), k, v) < 0) {
          ++free;
          which = k;
        }
      }
      ok = ok && free == 1;
      forced.push_back(which + 1);
    }
    for (int j = 1; j <= 4; ++j) {
      ok = ok && c.partner(u, 0, x(j)) >= 0 && c.partner(v, 0, y(j)) >= 0;
    }
    ok = ok && std::all_of(forced.begin(), forced.end(), [](int f) { return f == 2; });
    out.push_back(make_check("fixture-structure", ok,
                             "15 vertices, 38 edges; each spine vertex keeps only color 2 once the hubs "
                             "are colored; each ear loses one color to its hub",
                             {{"spine_forced_colors", forced}}));
  }
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const Cover c = build_bad_cover_T3(a, b);
      const auto caps = DefectConstraint::uniform(3).with(u, 0).with(v, 0);
      const Certificate cert = find_coloring(c, caps, {}, opt.search);
      const ContributionSet set = contribution_set(c, u, v, 0, 0, 3, opt.search);
      const bool ok = !cert.feasible() && !set.contains(0, 0) && !set.pairs.empty();
      int min_sum = 1 << 20;
      for (auto [p, q] : set.pairs) min_sum = std::min(min_sum, p + q);
      std::ostringstream detail;
      detail << "no 3-defective coloring with def(u) = def(v) = 0 (" << cert.stats.nodes
             << " nodes); " << set.pairs.size() << " achievable (def u, def v) pairs, minimum sum "
             << min_sum;
      out.push_back(make_check(pair_id("pair", a, b), ok, detail.str(),
                               {{"achievable", pairs_to_json(set.pairs)}, {"search_nodes", cert.stats.nodes}}));
    }
  }
  return out;
}

std::vector<CheckResult> claim_thm_1_2(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const G63 g = build_G63();

  std::vector<Subcover> copies;
  for (int m = 0; m < g.copies; ++m) copies.push_back(restrict_cover(g.cover, g.copy_vertices(m)));

  // Each copy, cut down to its blocked hub colors, is the blocking cover.
  int matching = 0;
  std::vector<int> mismatched;
  std::vector<int> indices(g.copies);
  std::vector<char> iso(g.copies, 0);
  parallel_for(g.copies, opt.threads, [&](int m) {
    const auto [alpha, beta] = g.blocked_pair[m];
    const std::vector<VertexId> all = [&] {
      std::vector<VertexId> ids(t3_role::kVertices);
      for (int i = 0; i < t3_role::kVertices; ++i) ids[i] = i;
      return ids;
    }();
    const Subcover cut = restrict_cover(copies[m].cover, all, [&](VertexId w, int k) {
      if (w == t3_role::u) return k == alpha - 1;
      if (w == t3_role::v) return k == beta - 1;
      return true;
    });
    iso[m] = isomorphic(cut.cover, build_bad_cover_T3(alpha, beta));
  });
  for (int m = 0; m < g.copies; ++m) {
    if (iso[m]) {
      ++matching;
    } else {
      mismatched.push_back(m);
    }
  }
  out.push_back(make_check("copies-block", mismatched.empty(),
                           std::to_string(matching) + " of 63 copies restrict to the blocking cover of their pair",
                           {{"mismatched", mismatched}}));

  // Contribution sets, computed once per distinct (copy cover, hub pair).
  std::map<std::string, int> key_index;
  std::vector<std::tuple<int, int, int>> jobs;  // copy, alpha, beta
  std::vector<std::vector<int>> job_of(9, std::vector<int>(g.copies));
  for (int p = 0; p < 9; ++p) {
    for (int m = 0; m < g.copies; ++m) {
      json doc = cover_to_json(copies[m].cover);
      for (auto& v : doc["vertices"]) v.erase("label");
      const std::string key = doc.dump() + "|" + std::to_string(p);
      auto [it, inserted] = key_index.emplace(key, static_cast<int>(jobs.size()));
      if (inserted) jobs.emplace_back(m, p / 3, p % 3);
      job_of[p][m] = it->second;
    }
  }
  std::vector<ContributionSet> sets(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), opt.threads, [&](int j) {
    const auto [m, a, b] = jobs[j];
    sets[j] = contribution_set(copies[m].cover, t3_role::u, t3_role::v, a, b, 3, opt.search);
  });

  for (int p = 0; p < 9; ++p) {
    std::vector<ContributionSet> per_copy;
    int forced = 0;
    for (int m = 0; m < g.copies; ++m) {
      per_copy.push_back(sets[job_of[p][m]]);
      forced += !per_copy.back().contains(0, 0);
    }
    const HubSelection sel = hub_feasible(per_copy, 3, 3);
    std::ostringstream detail;
    detail << forced << " copies cannot avoid a hub defect; no selection keeps both hubs within 3";
    if (sel.feasible) detail.str("hub selection within (3,3) exists");
    out.push_back(make_check(pair_id("pair", p / 3 + 1, p % 3 + 1), !sel.feasible, detail.str(),
                             {{"copies_without_00", forced}, {"distinct_copy_covers", jobs.size() / 9}}));
  }
  return out;
}

std::vector<CheckResult> claim_cor_g63(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const G63 g = build_G63();
  const Graph& base = g.cover.base();
  const DegeneracyOrder order = degeneracy(base);
  out.push_back(make_check("degeneracy", order.degeneracy == 3,
                           "degeneracy " + std::to_string(order.degeneracy)));
  const int iters = iterations(opt, 100);
  std::vector<char> ok(iters, 0);
  parallel_for(iters, opt.threads, [&](int i) {
    Rng rng(derive_seed(opt.seed, static_cast<std::uint64_t>(i)));
    const Cover c = random_cover(rng, base, 4);
    const PartialColoring phi = greedy_color(c, order);
    ok[i] = phi.total() && max_defect(c, phi) == 0;
  });
  const auto bad = std::count(ok.begin(), ok.end(), 0);
  out.push_back(make_check("greedy-4-fold", bad == 0,
                           std::to_string(iters - bad) + " of " + std::to_string(iters) +
                               " random 4-fold covers colored properly"));
  return out;
}

std::vector<CheckResult> claim_thm_4_1(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const FanGadget fan = build_fan_gadget();
  const OuterplaneGraph g(fan.cover.base(), fan.outer_cycle);
  {
    const PartialColoring phi = color_outerplanar(g, fan.cover);
    const int worst = max_defect(fan.cover, phi);
    out.push_back(make_check("fan", phi.total() && worst <= 3,
                             "fan gadget colored with maximum defect " + std::to_string(worst),
                             {{"coloring", certificate_to_json({Certificate::Kind::coloring, phi, {}})["coloring"]}}));
  }
  {
    const auto [lo, hi] = lowest_outer_edge(g);
    bool ok = true;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (auto [p, q] : {std::pair{lo, hi}, std::pair{hi, lo}}) {
          const PartialColoring phi = color_near_triangulation(g, fan.cover, p, q, a, b);
          const bool conflicting = fan.cover.conflict({p, a}, {q, b});
          const auto caps = DefectConstraint::uniform(3).with(p, conflicting ? 1 : 0).with(q, conflicting ? 2 : 1);
          ok = ok && satisfies(fan.cover, caps, phi);
        }
      }
    }
    out.push_back(make_check("fan-pins", ok, "all 4 pins of the lowest outer edge, both orientations"));
  }
  {
    const FanGadget big = build_fan_gadget(5000);
    const auto start = Clock::now();
    const PartialColoring phi = color_outerplanar(OuterplaneGraph(big.cover.base(), big.outer_cycle), big.cover);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    const int worst = max_defect(big.cover, phi);
    (void)ms;
    out.push_back(make_check("large-fan", phi.total() && worst <= 3,
                             "10000-vertex fan colored with maximum defect " + std::to_string(worst)));
  }
  out.push_back(fuzz_check("thm-4.1", iterations(opt, 500), opt));
  return out;
}

std::vector<CheckResult> claim_thm_1_4_tight(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const FanGadget fan = build_fan_gadget();
  const Certificate two = find_coloring(fan.cover, DefectConstraint::uniform(2), {}, opt.search);
  out.push_back(make_check("no-2-defective", !two.feasible(),
                           "exhaustive search over the 24-vertex 2-fold fan cover: " +
                               std::string(two.feasible() ? "coloring found" : "infeasible") + " (" +
                               std::to_string(two.stats.nodes) + " nodes)"));
  const Certificate three = find_coloring(fan.cover, DefectConstraint::uniform(3), {}, opt.search);
  out.push_back(make_check("3-defective-exists", three.feasible(),
                           three.feasible() ? "3-defective coloring found" : "no 3-defective coloring",
                           certificate_to_json(three)["coloring"]));
  return out;
}

std::vector<CheckResult> claim_lemma_8_1(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::array<int, 4> order{1, 2, 3, 4};
  do {
    const auto [i, j, k, l] = order;
    int blocked = 0;
    for (int alpha = 1; alpha <= 4; ++alpha) {
      for (int beta = 1; beta <= 4; ++beta) {
        const Cover c = build_H_rot(i, j, k, l, alpha, beta);
        const auto pin = hub_pin(t_role::kVertices, t_role::u, alpha - 1, t_role::v, beta - 1);
        blocked += !find_coloring(c, DefectConstraint::uniform(0), pin, opt.search).feasible();
      }
    }
    std::ostringstream id;
    id << "order-" << i << j << k << "-" << l;
    out.push_back(make_check(id.str(), blocked == 16,
                             std::to_string(blocked) + " of 16 hub pins have no proper extension"));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<CheckResult> claim_lemma_8_2(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::array<int, 4> sigma{1, 2, 3, 4};
  do {
    const Cover c = build_H_sigma(sigma);
    int blocked = 0;
    for (int i = 1; i <= 4; ++i) {
      const auto pin = hub_pin(t_role::kVertices, t_role::u, i - 1, t_role::v, sigma[i - 1] - 1);
      blocked += !find_coloring(c, DefectConstraint::uniform(0), pin, opt.search).feasible();
    }
    std::ostringstream id;
    id << "sigma-" << sigma[0] << sigma[1] << sigma[2] << sigma[3];
    out.push_back(make_check(id.str(), blocked == 4,
                             std::to_string(blocked) + " of 4 pins (i, sigma(i)) have no proper extension"));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<CheckResult> claim_t4_not_4corr(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const auto partition = t4_partition();
  {
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (const auto& col : partition) {
      std::array<int, 4> sorted = col;
      std::sort(sorted.begin(), sorted.end());
      ok = ok && sorted == std::array<int, 4>{1, 2, 3, 4};
      for (int i = 0; i < 4; ++i) seen.emplace(i + 1, col[i]);
    }
    ok = ok && seen.size() == 16 && partition[0] == std::array<int, 4>{1, 2, 3, 4};
    out.push_back(make_check("partition", ok, "four permutations partition [4] x [4]; A1 is the diagonal"));
  }
  const Cover c = build_T4_counterexample();
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      int m = 0;
      while (partition[m][i - 1] != j) ++m;
      const Subcover copy = restrict_cover(c, t_k_copy_vertices(m));
      const auto pin = hub_pin(t_role::kVertices, t_role::u, i - 1, t_role::v, j - 1);
      const bool blocked = !find_coloring(copy.cover, DefectConstraint::uniform(0), pin, opt.search).feasible();
      out.push_back(make_check(pair_id("pair", i, j), blocked,
                               "copy " + std::to_string(m + 1) +
                                   (blocked ? " has no proper extension" : " extends")));
    }
  }
  const Certificate whole = find_coloring(c, DefectConstraint::uniform(0), {}, opt.search);
  out.push_back(make_check("whole-graph", !whole.feasible(),
                           "direct search on the 30-vertex cover: " +
                               std::string(whole.feasible() ? "colorable" : "infeasible") + " (" +
                               std::to_string(whole.stats.nodes) + " nodes)"));
  return out;
}

using ClaimFn = std::function<std::vector<CheckResult>(const VerifyOptions&)>;

const std::map<std::string, ClaimFn>& claims() {
  static const std::map<std::string, ClaimFn> table{
      {"lemma-3.1", claim_lemma_3_1},
      {"thm-1.2", claim_thm_1_2},
      {"cor-g63-4corr", claim_cor_g63},
      {"thm-4.1", claim_thm_4_1},
      {"thm-1.4-tight", claim_thm_1_4_tight},
      {"lemma-5.8",
       [](const VerifyOptions& o) {
         return std::vector<CheckResult>{fuzz_check("lemma-5.8", iterations(o, 10000), o),
                                         fuzz_check("lemma-6.x", iterations(o, 10000), o)};
       }},
      {"lemma-good",
       [](const VerifyOptions& o) {
         return std::vector<CheckResult>{fuzz_check("lemma-good", iterations(o, 2000), o)};
       }},
      {"lemma-bad",
       [](const VerifyOptions& o) {
         return std::vector<CheckResult>{fuzz_check("lemma-bad", iterations(o, 2000), o)};
       }},
      {"lemma-8.1", claim_lemma_8_1},
      {"lemma-8.2", claim_lemma_8_2},
      {"thm-t4-not-4corr", claim_t4_not_4corr},
  };
  return table;
}

VerificationReport finish(VerificationReport report, Clock::time_point start,
                          const std::function<std::vector<CheckResult>()>& run) {
  try {
    report.checks = run();
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    const bool all = std::all_of(report.checks.begin(), report.checks.end(),
                                 [](const CheckResult& c) { return c.passed; });
    report.verdict = all ? Verdict::verified : Verdict::falsified;
  } catch (const Falsified& e) {
    report.verdict = Verdict::falsified;
    report.error = e.what();
  } catch (const std::exception& e) {
    report.verdict = Verdict::error;
    report.error = e.what();
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{
      "lemma-3.1", "thm-1.2",   "thm-4.1",   "thm-1.4-tight",    "lemma-5.8",    "lemma-good",
      "lemma-bad", "lemma-8.1", "lemma-8.2", "thm-t4-not-4corr", "cor-g63-4corr"};
  return ids;
}

const std::vector<std::string>& fuzz_targets() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [name, t] : targets()) out.push_back(name);
    return out;
  }();
  return ids;
}

int default_iterations(const std::string& target) {
  auto it = targets().find(target);
  if (it == targets().end()) throw UnknownClaim("unknown fuzz target '" + target + "'");
  return it->second.default_iters;
}

VerificationReport verify_claim(const std::string& claim, const VerifyOptions& options) {
  auto it = claims().find(claim);
  if (it == claims().end()) throw UnknownClaim("unknown claim '" + claim + "'");
  VerificationReport report;
  report.claim = claim;
  report.seed = options.seed;
  return finish(std::move(report), Clock::now(), [&] { return it->second(options); });
}

VerificationReport run_fuzz(const std::string& target, int iters, const VerifyOptions& options) {
  if (targets().find(target) == targets().end())
    throw UnknownClaim("unknown fuzz target '" + target + "'");
  VerificationReport report;
  report.claim = target;
  report.seed = options.seed;
  return finish(std::move(report), Clock::now(),
                [&] { return std::vector<CheckResult>{fuzz_check(target, iters, options)}; });
}

}  // namespace defcor

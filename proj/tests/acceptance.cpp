// Prints one PASS/FAIL line per acceptance criterion. Criteria listed with
// --known-falsified still print FAIL (marked "known") but do not affect the
// exit status.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "defcor/gadgets.hpp"
#include "defcor/io.hpp"
#include "defcor/random.hpp"
#include "defcor/solver.hpp"
#include "defcor/verify.hpp"
#include "oracle.hpp"

using namespace defcor;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void add(const VerificationReport& r) {
    if (!detail.empty()) detail += "; ";
    detail += r.claim + " " + to_string(r.verdict);
    if (r.verdict == Verdict::verified) return;
    passed = false;
    if (!r.error.empty()) detail += " (" + r.error + ")";
    for (const auto& c : r.checks) {
      if (!c.passed) detail += " [" + c.id + ": " + c.detail + "]";
    }
  }
};

Outcome claims(std::initializer_list<const char*> ids, const VerifyOptions& opt) {
  Outcome out;
  for (const char* id : ids) out.add(verify_claim(id, opt));
  return out;
}

Outcome fuzzes(std::initializer_list<std::pair<const char*, int>> targets, const VerifyOptions& opt) {
  Outcome out;
  for (auto [id, n] : targets) out.add(run_fuzz(id, n, opt));
  return out;
}

Outcome infrastructure(const VerifyOptions& opt) {
  Outcome out;
  auto fail = [&](const std::string& why) {
    out.passed = false;
    out.detail += (out.detail.empty() ? "" : "; ") + why;
  };

  int gadgets = 0;
  for (const auto& name : gadget_names()) {
    const NamedGadget g = build_named_gadget(name, {});
    const json doc = cover_to_json(g.cover, g.outer_cycle);
    const CoverFile back = cover_from_json(json::parse(doc.dump()));
    if (!(back.cover == g.cover) || back.outer_cycle != g.outer_cycle || cover_to_json(back.cover, back.outer_cycle) != doc)
      fail("round trip differs for " + name);
    ++gadgets;
  }

  int instances = 0;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(opt.seed, 900000 + i));
    const int n = rng.uniform_int(1, 9);
    const int k = rng.uniform_int(1, 3);
    const int d = rng.uniform_int(0, 2);
    const Cover c = random_cover(rng, random_graph(rng, n, 0.45), k, rng.chance(0.5) ? 1.0 : 0.6);
    const auto expect = oracle::colorings(c, d);
    const DefectConstraint cap = DefectConstraint::uniform(d);
    const Certificate cert = find_coloring(c, cap);
    bool ok = cert.feasible() == !expect.empty();
    if (ok && cert.feasible()) ok = std::binary_search(expect.begin(), expect.end(), cert.coloring->values());
    if (ok) {
      const auto all = enumerate_colorings(c, cap);
      ok = all.size() == expect.size();
      for (std::size_t j = 0; ok && j < all.size(); ++j) ok = all[j].values() == expect[j];
    }
    if (!ok) fail("solver disagrees with enumeration on instance " + std::to_string(i) + ": " + cover_to_json(c).dump());
    ++instances;
  }

  VerifyOptions one = opt, many = opt;
  one.threads = 1;
  many.threads = 4;
  one.iters = many.iters = 20;
  for (const char* id : {"lemma-5.8", "thm-4.1", "lemma-bad"}) {
    if (run_fuzz(id, 200, one).to_json(false) != run_fuzz(id, 200, many).to_json(false))
      fail(std::string("report of ") + id + " depends on the thread count");
  }
  for (const char* id : {"cor-g63-4corr", "lemma-8.2"}) {
    if (verify_claim(id, one).to_json(false) != verify_claim(id, many).to_json(false))
      fail(std::string("report of ") + id + " depends on the thread count");
  }
  if (out.passed) {
    std::ostringstream s;
    s << gadgets << " gadgets round-trip, solver matches enumeration on " << instances
      << " covers, reports identical for 1 and 4 threads";
    out.detail = s.str();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  VerifyOptions opt;
  std::vector<int> known;
  app.add_option("--seed", opt.seed, "Seed");
  app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--known-falsified", known, "Criteria whose failure is documented")->delimiter(',');
  CLI11_PARSE(app, argc, argv);
  const std::set<int> known_set(known.begin(), known.end());

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, [&] { return claims({"lemma-3.1"}, opt); }},
      {2, [&] { return claims({"thm-1.2"}, opt); }},
      {3, [&] { return claims({"cor-g63-4corr"}, opt); }},
      {4, [&] { return claims({"thm-4.1"}, opt); }},
      {5, [&] { return claims({"thm-1.4-tight"}, opt); }},
      {6, [&] { return claims({"lemma-5.8"}, opt); }},
      {7, [&] {
         return fuzzes({{"lemma-5.2", 2000}, {"lemma-5.4", 2000}, {"lemma-5.6", 2000},
                        {"lemma-good", 2000}, {"lemma-bad", 2000}},
                       opt);
       }},
      {8, [&] { return fuzzes({{"thm-5.10-light-pair", 10000}}, opt); }},
      {9, [&] { return claims({"lemma-8.1", "lemma-8.2", "thm-t4-not-4corr"}, opt); }},
      {10, [&] { return infrastructure(opt); }},
  };

  int status = 0;
  for (const auto& [n, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool is_known = !o.passed && known_set.count(n);
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << n << (is_known ? " (known, see README)" : "")
              << ": " << o.detail << " [" << static_cast<int>(secs * 1000) << " ms]" << std::endl;
    if (!o.passed && !is_known) status = 1;
  }
  return status;
}

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "defcor/classify.hpp"
#include "defcor/gadgets.hpp"
#include "defcor/io.hpp"
#include "defcor/outerplanar.hpp"
#include "defcor/solver.hpp"
#include "defcor/verify.hpp"

using namespace defcor;

namespace {

constexpr int kExitError = 2;

SearchOptions search_options() {
  SearchOptions opt;
  if (const char* env = std::getenv("DEFCOR_NODE_BUDGET")) {
    try {
      opt.node_budget = std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("DEFCOR_NODE_BUDGET is not a number: ") + env);
    }
  }
  return opt;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

// "v=K" with both sides non-negative integers.
std::pair<int, int> parse_assignment(const std::string& s, const char* what) {
  const auto eq = s.find('=');
  try {
    if (eq == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const int a = std::stoi(s.substr(0, eq), &used);
    if (used != eq) throw std::invalid_argument(s);
    const std::string rhs = s.substr(eq + 1);
    const int b = std::stoi(rhs, &used);
    if (used != rhs.size() || a < 0 || b < 0) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + s + "', expected VERTEX=VALUE");
  }
}

void log_report(const VerificationReport& r) {
  for (const auto& c : r.checks)
    std::cerr << (c.passed ? "PASS " : "FAIL ") << r.claim << "/" << c.id << ": " << c.detail << "\n";
  if (!r.error.empty()) std::cerr << to_string(r.verdict) << ": " << r.error << "\n";
  std::cerr << r.claim << ": " << to_string(r.verdict) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defective correspondence coloring: solver, gadgets and claim verification"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  std::string out;
  bool no_timing = false;

  auto* verify = app.add_subcommand("verify", "Run the acceptance procedure of a registered claim");
  std::string claim;
  bool list_claims = false;
  verify->add_option("claim", claim, "Claim id, or 'all'");
  verify->add_flag("--list", list_claims, "List registered claim ids");

  auto* fuzz = app.add_subcommand("fuzz", "Seeded random property check");
  std::string target;
  int iters = 0;
  fuzz->add_option("--target", target, "Fuzz target")->required();
  fuzz->add_option("--iters", iters, "Number of instances (default depends on the target)")
      ->check(CLI::PositiveNumber);

  for (auto* sub : {verify, fuzz}) {
    sub->add_option("--seed", vopt.seed, "Seed of the run");
    sub->add_option("--threads", vopt.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", out, "Write the JSON report here instead of stdout");
    sub->add_option("--reproducers", vopt.reproducer_dir, "Directory for counterexample files");
    sub->add_flag("--no-timing", no_timing, "Omit elapsed_ms so reports are byte-identical across runs");
  }
  verify->add_option("--iters", iters, "Override iteration counts of randomized checks")
      ->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "Search for a defective coloring of a cover file");
  std::string cover_path;
  int defect = 0;
  std::vector<std::string> caps, pins;
  solve->add_option("cover", cover_path, "Cover JSON file")->required();
  solve->add_option("--defect", defect, "Global defect cap")->check(CLI::NonNegativeNumber);
  solve->add_option("--cap", caps, "Per-vertex cap VERTEX=K");
  solve->add_option("--pin", pins, "Pinned color VERTEX=INDEX (0-based list index)");
  solve->add_option("--out", out, "Write the certificate here instead of stdout");

  auto* classify = app.add_subcommand("classify", "Bad-pair census of a 3-fold cover of T");
  classify->add_option("cover", cover_path, "Cover JSON file")->required();
  classify->add_option("--out", out, "Output file");

  auto* outer = app.add_subcommand("outerplanar", "3-defective coloring of an outerplane cover");
  outer->add_option("cover", cover_path, "Cover JSON file with an outer_cycle")->required();
  outer->add_option("--out", out, "Output file");

  auto* gadget = app.add_subcommand("gadget", "Emit a named construction");
  std::string gadget_name, format = "json";
  std::vector<int> params;
  bool list_gadgets = false;
  gadget->add_option("name", gadget_name, "Gadget name");
  gadget->add_option("params", params, "Integer parameters");
  gadget->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  gadget->add_option("--out", out, "Output file");
  gadget->add_flag("--list", list_gadgets, "List gadget names");

  auto* validate = app.add_subcommand("validate", "Parse and validate a cover file");
  validate->add_option("cover", cover_path, "Cover JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    vopt.search = search_options();
    if (iters > 0) vopt.iters = iters;

    if (*verify) {
      if (list_claims) {
        for (const auto& id : claim_ids()) std::cout << id << "\n";
        return 0;
      }
      if (claim.empty()) throw std::invalid_argument("missing claim id (see verify --list)");
      std::vector<std::string> ids = claim == "all" ? claim_ids() : std::vector<std::string>{claim};
      json docs = json::array();
      int code = 0;
      for (const auto& id : ids) {
        const VerificationReport r = verify_claim(id, vopt);
        log_report(r);
        docs.push_back(r.to_json(!no_timing));
        code = std::max(code, r.exit_code());
      }
      emit((ids.size() == 1 ? docs[0] : docs).dump(2) + "\n", out);
      return code;
    }

    if (*fuzz) {
      const int n = iters > 0 ? iters : default_iterations(target);
      const VerificationReport r = run_fuzz(target, n, vopt);
      log_report(r);
      emit(r.to_json(!no_timing).dump(2) + "\n", out);
      return r.exit_code();
    }

    if (*solve) {
      const CoverFile file = read_cover_file(cover_path);
      DefectConstraint k = DefectConstraint::uniform(defect);
      for (const auto& s : caps) {
        const auto [v, cap] = parse_assignment(s, "cap");
        k.with(v, cap);
      }
      PartialColoring pin(file.cover.num_vertices());
      for (const auto& s : pins) {
        const auto [v, idx] = parse_assignment(s, "pin");
        if (v >= file.cover.num_vertices()) throw std::invalid_argument("pin vertex out of range: " + s);
        pin.assign(v, idx);
      }
      const Certificate cert = find_coloring(file.cover, k, pin, vopt.search);
      std::cerr << (cert.feasible() ? "coloring found" : "infeasible") << " (" << cert.stats.nodes
                << " nodes)\n";
      emit(certificate_to_json(cert).dump(2) + "\n", out);
      return 0;
    }

    if (*classify) {
      const CoverFile file = read_cover_file(cover_path);
      emit(census_to_json(bad_pair_census(file.cover)).dump(2) + "\n", out);
      return 0;
    }

    if (*outer) {
      const CoverFile file = read_cover_file(cover_path);
      const OuterplaneGraph g(file.cover.base(), file.outer_cycle);
      const PartialColoring phi = color_outerplanar(g, file.cover);
      Certificate cert{Certificate::Kind::coloring, phi, {}};
      json doc = certificate_to_json(cert);
      doc["max_defect"] = max_defect(file.cover, phi);
      emit(doc.dump(2) + "\n", out);
      return 0;
    }

    if (*gadget) {
      if (list_gadgets) {
        for (const auto& name : gadget_names()) std::cout << name << "\n";
        return 0;
      }
      if (gadget_name.empty()) throw std::invalid_argument("missing gadget name (see gadget --list)");
      const NamedGadget g = build_named_gadget(gadget_name, params);
      emit(format == "dot" ? cover_to_dot(g.cover, gadget_name)
                           : cover_to_json(g.cover, g.outer_cycle).dump(2) + "\n",
           out);
      return 0;
    }

    if (*validate) {
      const CoverFile file = read_cover_file(cover_path);
      if (!file.outer_cycle.empty()) OuterplaneGraph(file.cover.base(), file.outer_cycle);
      std::cout << file.cover.num_vertices() << " vertices, " << file.cover.base().num_edges()
                << " edges, smallest list " << file.cover.min_list_size() << "\n";
      return 0;
    }
  } catch (const Falsified& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

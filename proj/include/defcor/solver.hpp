#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "defcor/cover.hpp"

namespace defcor {

/// Per-vertex defect caps: `global_cap` unless overridden.
struct DefectConstraint {
  int global_cap = 0;
  std::map<VertexId, int> per_vertex;

  static DefectConstraint uniform(int d) { return {d, {}}; }
  DefectConstraint& with(VertexId v, int cap) {
    per_vertex[v] = cap;
    return *this;
  }
  int cap(VertexId v) const {
    auto it = per_vertex.find(v);
    return it == per_vertex.end() ? global_cap : it->second;
  }
  std::vector<int> caps(int num_vertices) const;
};

/// Vertex budget exhaustion. All searches count one node per tentative
/// color assignment.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("search node budget of " + std::to_string(budget) + " exceeded"),
        budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

/// Falsification of a statement that should hold for every input; carries
/// a description of the counterexample.
class Falsified : public std::runtime_error {
 public:
  explicit Falsified(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

struct Certificate {
  enum class Kind { coloring, infeasible };
  Kind kind = Kind::infeasible;
  std::optional<PartialColoring> coloring;
  SearchStats stats;

  bool feasible() const noexcept { return kind == Kind::coloring; }
};

/// True iff `phi` is total, uses list colors and meets every cap.
bool satisfies(const Cover& c, const DefectConstraint& k, const PartialColoring& phi);

/// Exact backtracking search for a total coloring extending `pin` with
/// every defect within its cap. Vertices are chosen dynamically by fewest
/// remaining admissible colors (ties by id); colors are tried in list order.
/// An empty `pin` means no pins. Throws CoverError for pins outside lists
/// and BudgetExceeded when the budget runs out.
Certificate find_coloring(const Cover& c, const DefectConstraint& k,
                          const PartialColoring& pin = {}, const SearchOptions& options = {});

/// Every satisfying total coloring, in lexicographic order of the color
/// vector. Plain odometer over the product of the lists; throws
/// BudgetExceeded if that product exceeds `budget`.
std::vector<PartialColoring> enumerate_colorings(const Cover& c, const DefectConstraint& k,
                                                 std::uint64_t budget = kDefaultNodeBudget);

/// Proper coloring along the reverse of a degeneracy peel order. Throws
/// CoverError when some list has at most `order.degeneracy` colors.
PartialColoring greedy_color(const Cover& c, const DegeneracyOrder& order);

/// Achievable (defect on hub1, defect on hub2) pairs of one gadget copy.
struct ContributionSet {
  std::set<std::pair<int, int>> pairs;
  bool contains(int a, int b) const { return pairs.count({a, b}) > 0; }
};

/// Pins hub1/hub2 to the given colors, caps every other vertex at `d` and
/// enumerates all internal colorings, recording the exact hub defects.
ContributionSet contribution_set(const Cover& copy, VertexId hub1, VertexId hub2,
                                 int hub1_color, int hub2_color, int d,
                                 const SearchOptions& options = {});

struct HubSelection {
  bool feasible = false;
  /// One chosen pair per input set when feasible.
  std::vector<std::pair<int, int>> picks;
};

/// Whether one pair per set can be chosen with coordinate sums within
/// (cap1, cap2). Dynamic program over reachable sum states.
HubSelection hub_feasible(std::span<const ContributionSet> sets, int cap1, int cap2);

}  // namespace defcor

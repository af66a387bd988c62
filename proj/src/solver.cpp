#include "defcor/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace defcor {

std::vector<int> DefectConstraint::caps(int num_vertices) const {
  std::vector<int> out(num_vertices, global_cap);
  for (auto [v, cap] : per_vertex) {
    if (cap < 0) throw std::invalid_argument("negative defect cap");
    if (v >= 0 && v < num_vertices) out[v] = cap;
  }
  if (global_cap < 0) throw std::invalid_argument("negative defect cap");
  return out;
}

bool satisfies(const Cover& c, const DefectConstraint& k, const PartialColoring& phi) {
  if (phi.size() != c.num_vertices() || !phi.total()) return false;
  for (VertexId v = 0; v < phi.size(); ++v) {
    if (phi[v] < 0 || phi[v] >= c.list_size(v)) return false;
  }
  const auto d = defects(c, phi);
  for (VertexId v = 0; v < phi.size(); ++v) {
    if (d[v] > k.cap(v)) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Incremental defect bookkeeping shared by the searches. Defects only grow
/// as more vertices get colored, so partial counts are sound lower bounds.
class DefectState {
 public:
  DefectState(const Cover& c, std::vector<int> caps)
      : c_(c), caps_(std::move(caps)), color_(c.num_vertices(), -1), def_(c.num_vertices(), 0) {}

  bool colored(VertexId v) const { return color_[v] >= 0; }
  int color(VertexId v) const { return color_[v]; }
  int defect(VertexId v) const { return def_[v]; }

  /// Whether coloring v with `index` keeps every partial defect in its cap.
  bool admissible(VertexId v, int index) const {
    int own = def_[v];
    const auto arcs = c_.base().arcs(v);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const VertexId w = arcs[a].to;
      if (color_[w] >= 0 && c_.partner_at(v, a, index) == color_[w]) {
        if (++own > caps_[v] || def_[w] + 1 > caps_[w]) return false;
      }
    }
    return own <= caps_[v];
  }

  void assign(VertexId v, int index) {
    color_[v] = index;
    const auto arcs = c_.base().arcs(v);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const VertexId w = arcs[a].to;
      if (color_[w] >= 0 && w != v && c_.partner_at(v, a, index) == color_[w]) {
        ++def_[v];
        ++def_[w];
      }
    }
  }

  void unassign(VertexId v) {
    const int index = color_[v];
    const auto arcs = c_.base().arcs(v);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const VertexId w = arcs[a].to;
      if (color_[w] >= 0 && c_.partner_at(v, a, index) == color_[w]) {
        --def_[v];
        --def_[w];
      }
    }
    color_[v] = -1;
  }

  bool within_caps() const {
    for (std::size_t v = 0; v < def_.size(); ++v) {
      if (def_[v] > caps_[v]) return false;
    }
    return true;
  }

  PartialColoring coloring() const { return PartialColoring(color_); }

 private:
  const Cover& c_;
  std::vector<int> caps_;
  std::vector<int> color_;
  std::vector<int> def_;
};

class BacktrackSearch {
 public:
  BacktrackSearch(const Cover& c, std::vector<int> caps, std::uint64_t budget)
      : c_(c), state_(c, std::move(caps)), budget_(budget) {}

  DefectState& state() { return state_; }
  std::uint64_t nodes() const { return nodes_; }

  bool run(int remaining) {
    if (remaining == 0) return true;
    // Fail-first: fewest admissible colors, then smallest id.
    VertexId best = -1;
    int best_count = std::numeric_limits<int>::max();
    for (VertexId v = 0; v < c_.num_vertices(); ++v) {
      if (state_.colored(v)) continue;
      int count = 0;
      for (int i = 0; i < c_.list_size(v); ++i) count += state_.admissible(v, i) ? 1 : 0;
      if (count < best_count) {
        best = v;
        best_count = count;
        if (count == 0) return false;
      }
    }
    for (int i = 0; i < c_.list_size(best); ++i) {
      if (!state_.admissible(best, i)) continue;
      if (++nodes_ > budget_) throw BudgetExceeded(budget_);
      state_.assign(best, i);
      if (run(remaining - 1)) return true;
      state_.unassign(best);
    }
    return false;
  }

 private:
  const Cover& c_;
  DefectState state_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Certificate find_coloring(const Cover& c, const DefectConstraint& k, const PartialColoring& pin,
                          const SearchOptions& options) {
  const auto start = Clock::now();
  const PartialColoring pins = pin.size() == 0 ? PartialColoring(c.num_vertices()) : pin;
  check_in_lists(c, pins);

  BacktrackSearch search(c, k.caps(c.num_vertices()), options.node_budget);
  int remaining = c.num_vertices();
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    if (!pins.colored(v)) continue;
    search.state().assign(v, pins[v]);
    --remaining;
  }
  Certificate cert;
  if (search.state().within_caps() && search.run(remaining)) {
    cert.kind = Certificate::Kind::coloring;
    cert.coloring = search.state().coloring();
  }
  cert.stats.nodes = search.nodes();
  cert.stats.elapsed_ms = ms_since(start);
  return cert;
}

std::vector<PartialColoring> enumerate_colorings(const Cover& c, const DefectConstraint& k,
                                                 std::uint64_t budget) {
  const int n = c.num_vertices();
  double product = 1.0;
  for (VertexId v = 0; v < n; ++v) product *= c.list_size(v);
  if (product > static_cast<double>(budget)) throw BudgetExceeded(budget);
  std::vector<PartialColoring> out;
  if (product == 0.0) return out;

  std::vector<int> digits(n, 0);
  while (true) {
    PartialColoring phi(digits);
    if (satisfies(c, k, phi)) out.push_back(phi);
    int pos = n - 1;
    while (pos >= 0 && ++digits[pos] == c.list_size(pos)) digits[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

PartialColoring greedy_color(const Cover& c, const DegeneracyOrder& order) {
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    if (c.list_size(v) < order.degeneracy + 1)
      throw CoverError("vertex " + std::to_string(v) + " has a list of size " +
                       std::to_string(c.list_size(v)) + " but the order needs " +
                       std::to_string(order.degeneracy + 1));
  }
  PartialColoring phi(c.num_vertices());
  for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
    const VertexId v = *it;
    std::vector<bool> blocked(c.list_size(v), false);
    const auto arcs = c.base().arcs(v);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const VertexId w = arcs[a].to;
      if (!phi.colored(w)) continue;
      const int mine = c.partner(w, phi[w], v);
      if (mine >= 0) blocked[mine] = true;
    }
    auto free = std::find(blocked.begin(), blocked.end(), false);
    if (free == blocked.end())
      throw CoverError("greedy coloring ran out of colors at vertex " + std::to_string(v) +
                       "; the order is not a valid peel order");
    phi.assign(v, static_cast<int>(free - blocked.begin()));
  }
  return phi;
}

namespace {

class ContributionEnumerator {
 public:
  ContributionEnumerator(const Cover& c, std::vector<int> caps, VertexId hub1, VertexId hub2,
                         std::uint64_t budget)
      : c_(c), state_(c, std::move(caps)), hub1_(hub1), hub2_(hub2), budget_(budget) {}

  DefectState& state() { return state_; }

  void run(const std::vector<VertexId>& order, std::size_t depth, ContributionSet& out) {
    if (depth == order.size()) {
      out.pairs.emplace(state_.defect(hub1_), state_.defect(hub2_));
      return;
    }
    const VertexId v = order[depth];
    for (int i = 0; i < c_.list_size(v); ++i) {
      if (!state_.admissible(v, i)) continue;
      if (++nodes_ > budget_) throw BudgetExceeded(budget_);
      state_.assign(v, i);
      run(order, depth + 1, out);
      state_.unassign(v);
    }
  }

 private:
  const Cover& c_;
  DefectState state_;
  VertexId hub1_;
  VertexId hub2_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ContributionSet contribution_set(const Cover& copy, VertexId hub1, VertexId hub2,
                                 int hub1_color, int hub2_color, int d,
                                 const SearchOptions& options) {
  PartialColoring pin(copy.num_vertices());
  pin.assign(hub1, hub1_color);
  pin.assign(hub2, hub2_color);
  check_in_lists(copy, pin);

  // Hubs are uncapped here; the feasibility step owns their caps.
  std::vector<int> caps(copy.num_vertices(), d);
  caps[hub1] = std::numeric_limits<int>::max() / 2;
  caps[hub2] = std::numeric_limits<int>::max() / 2;

  ContributionEnumerator search(copy, caps, hub1, hub2, options.node_budget);
  search.state().assign(hub1, hub1_color);
  search.state().assign(hub2, hub2_color);
  std::vector<VertexId> order;
  for (VertexId v = 0; v < copy.num_vertices(); ++v) {
    if (v != hub1 && v != hub2) order.push_back(v);
  }
  ContributionSet out;
  search.run(order, 0, out);
  return out;
}

HubSelection hub_feasible(std::span<const ContributionSet> sets, int cap1, int cap2) {
  const int width = cap2 + 1;
  const int states = (cap1 + 1) * width;
  // layers[i][s]: pair picked from set i-1 to reach state s, or unreachable.
  struct Step {
    bool reachable = false;
    int from = -1;
    std::pair<int, int> pick{};
  };
  std::vector<std::vector<Step>> layers(sets.size() + 1, std::vector<Step>(states));
  layers[0][0].reachable = true;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (int s = 0; s < states; ++s) {
      if (!layers[i][s].reachable) continue;
      const int a0 = s / width;
      const int b0 = s % width;
      for (auto [a, b] : sets[i].pairs) {
        const int a1 = a0 + a;
        const int b1 = b0 + b;
        if (a1 > cap1 || b1 > cap2) continue;
        Step& next = layers[i + 1][a1 * width + b1];
        if (!next.reachable) next = {true, s, {a, b}};
      }
    }
  }
  HubSelection out;
  int end = -1;
  for (int s = 0; s < states; ++s) {
    if (layers[sets.size()][s].reachable) {
      end = s;
      break;
    }
  }
  if (end < 0) return out;
  out.feasible = true;
  out.picks.resize(sets.size());
  for (std::size_t i = sets.size(); i > 0; --i) {
    out.picks[i - 1] = layers[i][end].pick;
    end = layers[i][end].from;
  }
  return out;
}

}  // namespace defcor

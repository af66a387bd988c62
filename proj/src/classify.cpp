#include "defcor/classify.hpp"

#include <algorithm>
#include <numeric>

#include "defcor/gadgets.hpp"

namespace defcor {

namespace {

using Profile = std::array<int, 4>;

std::string profile_string(const Cover& r) {
  std::string s;
  for (VertexId v = 0; v < r.num_vertices(); ++v) {
    if (v) s += ",";
    s += std::to_string(r.list_size(v));
  }
  return s;
}

/// Permutations of 0..n-1.
std::vector<std::vector<int>> orderings(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Calls visit(labeling) for every role assignment matching `profile` and
/// every ordering of the lists, until visit returns true.
template <typename Visit>
std::optional<RLabeling> search_labelings(const Cover& r, const Profile& profile,
                                          const char* pattern, Visit visit) {
  const Graph& g = r.base();
  if (g.num_vertices() != 4 || g.num_edges() != 5)
    throw ProfileError(std::string(pattern) + ": base graph is not K4 minus an edge");
  std::array<VertexId, 2> apart{-1, -1};
  for (VertexId p = 0; p < 4 && apart[0] < 0; ++p) {
    for (VertexId q = p + 1; q < 4; ++q) {
      if (!g.adjacent(p, q)) {
        apart = {p, q};
        break;
      }
    }
  }
  std::array<VertexId, 2> joined{};
  for (VertexId v = 0, k = 0; v < 4; ++v) {
    if (v != apart[0] && v != apart[1]) joined[k++] = v;
  }

  bool any_fits = false;
  for (int ac = 0; ac < 2; ++ac) {
    for (int bd = 0; bd < 2; ++bd) {
      RLabeling lab;
      lab.vertex[r_role::a] = apart[ac];
      lab.vertex[r_role::c] = apart[1 - ac];
      lab.vertex[r_role::b] = joined[bd];
      lab.vertex[r_role::d] = joined[1 - bd];
      bool fits = true;
      for (int role = 0; role < 4; ++role) fits = fits && r.list_size(lab.vertex[role]) == profile[role];
      if (!fits) continue;
      any_fits = true;
      const auto oa = orderings(profile[0]);
      const auto ob = orderings(profile[1]);
      const auto oc = orderings(profile[2]);
      const auto od = orderings(profile[3]);
      for (const auto& pa : oa)
        for (const auto& pb : ob)
          for (const auto& pc : oc)
            for (const auto& pd : od) {
              lab.colors = {pa, pb, pc, pd};
              if (visit(lab)) return lab;
            }
    }
  }
  if (!any_fits)
    throw ProfileError(std::string(pattern) + ": list sizes (" + profile_string(r) +
                       ") do not fit the required profile");
  return std::nullopt;
}

/// Whether color k1 (1-based) of role1 conflicts with color k2 of role2.
struct RoleView {
  const Cover& r;
  const RLabeling& lab;
  bool operator()(int role1, int k1, int role2, int k2) const {
    return r.conflict({lab.vertex[role1], lab.colors[role1][k1 - 1]},
                      {lab.vertex[role2], lab.colors[role2][k2 - 1]});
  }
};

using namespace r_role;

}  // namespace

std::optional<RLabeling> find_twist(const Cover& r) {
  return search_labelings(r, {1, 2, 1, 2}, "twisted", [&](const RLabeling& lab) {
    RoleView e{r, lab};
    // a1 b1 d2 c1 b2 d1 a1
    return e(a, 1, b, 1) && e(b, 1, d, 2) && e(d, 2, c, 1) && e(c, 1, b, 2) &&
           e(b, 2, d, 1) && e(d, 1, a, 1);
  });
}

std::optional<RLabeling> find_wedge_1212(const Cover& r) {
  return search_labelings(r, {1, 2, 1, 2}, "wedged", [&](const RLabeling& lab) {
    RoleView e{r, lab};
    if (!e(a, 1, b, 1) || !e(a, 1, d, 1)) return false;
    const int extra = (e(b, 2, d, 2) ? 1 : 0) + (e(c, 1, b, 2) ? 1 : 0) + (e(c, 1, d, 2) ? 1 : 0);
    return extra >= 2;
  });
}

std::optional<RLabeling> find_wedge_1222(const Cover& r) {
  return search_labelings(r, {1, 2, 2, 2}, "wedged", [&](const RLabeling& lab) {
    RoleView e{r, lab};
    // b1 ~ a1 ~ d1 and c1 ~ b2 ~ d2 ~ c2
    return e(b, 1, a, 1) && e(a, 1, d, 1) && e(c, 1, b, 2) && e(b, 2, d, 2) && e(d, 2, c, 2);
  });
}

std::optional<RLabeling> find_wedge(const Cover& r) {
  int twos = 0;
  for (VertexId v = 0; v < r.num_vertices(); ++v) twos += r.list_size(v) == 2 ? 1 : 0;
  if (r.num_vertices() == 4 && twos == 3) return find_wedge_1222(r);
  return find_wedge_1212(r);
}

std::string to_string(BadKind kind) {
  switch (kind) {
    case BadKind::one: return "1-bad";
    case BadKind::two_i: return "2-bad(i)";
    case BadKind::two_ii: return "2-bad(ii)";
    case BadKind::three_i: return "3-bad(i)";
    case BadKind::three_ii: return "3-bad(ii)";
    case BadKind::four: return "4-bad";
    case BadKind::five_i: return "5-bad(i)";
    case BadKind::five_ii: return "5-bad(ii)";
  }
  return "?";
}

PairType pair_type(BadKind kind) {
  switch (kind) {
    case BadKind::one:
    case BadKind::three_i:
    case BadKind::three_ii: return {2, 1};
    case BadKind::two_i:
    case BadKind::two_ii:
    case BadKind::five_i:
    case BadKind::five_ii: return {1, 1};
    case BadKind::four: return {1, 2};
  }
  return {};
}

std::string to_string(PairType t) {
  return std::to_string(t.first) + "-" + std::to_string(t.second);
}

namespace {

const std::array<VertexId, 4> kR1{residual_role::x, residual_role::u1, residual_role::v1,
                                  residual_role::z};
const std::array<VertexId, 4> kR2{residual_role::z, residual_role::u2, residual_role::v2,
                                  residual_role::y};

/// Rewrites a labeling of a restricted cover in the coordinates of its parent.
RLabeling lift_labeling(const Subcover& sub, RLabeling lab) {
  for (int role = 0; role < 4; ++role) {
    const VertexId local = lab.vertex[role];
    for (int& c : lab.colors[role]) c = sub.color_origin[local][c];
    lab.vertex[role] = sub.vertex_origin[local];
  }
  return lab;
}

const Graph& residual_graph() {
  static const Graph g = [] {
    const std::vector<VertexId> keep{t_role::x, t_role::z, t_role::y, t_role::u1,
                                     t_role::v1, t_role::u2, t_role::v2};
    return build_T5().induced(keep);
  }();
  return g;
}

bool same_edge_set(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (const Edge& e : a.edges()) {
    if (!b.adjacent(e.u, e.v)) return false;
  }
  return true;
}

}  // namespace

ResidualClass classify_residual(const Cover& residual) {
  using namespace residual_role;
  if (!same_edge_set(residual.base(), residual_graph()))
    throw ProfileError("residual cover is not a cover of T minus {u, v}");
  for (VertexId w : {u1, v1, u2, v2}) {
    if (residual.list_size(w) != 2)
      throw ProfileError("residual list of " + residual.base().label(w) + " must have size 2");
  }
  for (VertexId w : {x, z, y}) {
    if (residual.list_size(w) < 1 || residual.list_size(w) > 2)
      throw ProfileError("residual list of " + residual.base().label(w) +
                         " must have size 1 or 2");
  }
  const Subcover r1 = restrict_cover(residual, kR1);
  const Subcover r2 = restrict_cover(residual, kR2);
  const int lx = residual.list_size(x);
  const int lz = residual.list_size(z);
  const int ly = residual.list_size(y);

  ResidualClass out;
  auto twist = [](const Subcover& s) {
    auto lab = find_twist(s.cover);
    return lab ? std::optional(lift_labeling(s, *lab)) : std::nullopt;
  };
  auto wedge = [](const Subcover& s) {
    auto lab = find_wedge(s.cover);
    return lab ? std::optional(lift_labeling(s, *lab)) : std::nullopt;
  };
  auto both_wedged = [&](BadKind kind) {
    auto w1 = wedge(r1);
    if (!w1) return false;
    auto w2 = wedge(r2);
    if (!w2) return false;
    out.bad = kind;
    out.witnesses = {*w1, *w2};
    return true;
  };
  auto twisted = [&](const Subcover& s, BadKind kind) {
    auto t = twist(s);
    if (!t) return false;
    out.bad = kind;
    out.witnesses = {*t};
    return true;
  };

  if (lx == 2 && lz == 1 && ly == 2) {
    both_wedged(BadKind::one);
  } else if (lx == 1 && lz == 1 && ly == 2) {
    twisted(r1, BadKind::two_i) || both_wedged(BadKind::two_ii);
  } else if (lx == 2 && lz == 1 && ly == 1) {
    twisted(r2, BadKind::three_i) || both_wedged(BadKind::three_ii);
  } else if (lx == 1 && lz == 2 && ly == 1) {
    // Both orders of the two z colors are tried.
    for (auto [z1, z2] : {std::pair{0, 1}, std::pair{1, 0}}) {
      const Subcover r1_cut = delete_color(r1.cover, {3, z2});  // z is vertex 3 of kR1
      const Subcover r2_cut = delete_color(r2.cover, {0, z1});  // z is vertex 0 of kR2
      auto t1 = find_twist(r1_cut.cover);
      if (!t1) continue;
      auto t2 = find_twist(r2_cut.cover);
      if (!t2) continue;
      out.bad = BadKind::four;
      out.witnesses = {lift_labeling(r1, lift_labeling(r1_cut, *t1)),
                       lift_labeling(r2, lift_labeling(r2_cut, *t2))};
      out.z_pair = std::pair{r1.color_origin[3][z1], r1.color_origin[3][z2]};
      break;
    }
  } else if (lx == 1 && lz == 1 && ly == 1) {
    twisted(r1, BadKind::five_i) || twisted(r2, BadKind::five_i) ||
        both_wedged(BadKind::five_ii);
  }
  return out;
}

int Census::bad_count() const {
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.cls.good(); }));
}

Census bad_pair_census(const Cover& t_cover) {
  if (t_cover.num_vertices() != t_role::kVertices)
    throw ProfileError("census expects a cover of T");
  if (t_cover.list_size(t_role::u) != 3 || t_cover.list_size(t_role::v) != 3)
    throw ProfileError("census expects hub lists of size 3");
  Census census;
  for (int alpha = 0; alpha < 3; ++alpha) {
    for (int beta = 0; beta < 3; ++beta) {
      PartialColoring phi(t_role::kVertices);
      phi.assign(t_role::u, alpha);
      phi.assign(t_role::v, beta);
      CensusEntry entry{alpha, beta, classify_residual(subcover(t_cover, phi).cover), {}};
      if (entry.cls.bad) entry.type = pair_type(*entry.cls.bad);
      census.entries.push_back(std::move(entry));
    }
  }
  return census;
}

std::vector<std::string> census_violations(const Census& census) {
  std::vector<std::string> out;
  auto bad = [&](int a, int b) { return !census.at(a, b).cls.good(); };
  auto type = [&](int a, int b) { return *census.at(a, b).type; };
  auto name = [](int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  const PairType one_two{1, 2};
  const PairType two_one{2, 1};

  if (census.bad_count() > 6)
    out.push_back("bad for " + std::to_string(census.bad_count()) + " > 6 pairs");

  // Two bad pairs in one row (or column) never share type 1-2 or 2-1.
  for (int fixed = 0; fixed < 3; ++fixed) {
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        for (bool row : {true, false}) {
          const int a1 = row ? fixed : p, b1 = row ? p : fixed;
          const int a2 = row ? fixed : q, b2 = row ? q : fixed;
          if (!bad(a1, b1) || !bad(a2, b2)) continue;
          for (const PairType& t : {one_two, two_one}) {
            if (type(a1, b1) == t && type(a2, b2) == t)
              out.push_back("pairs " + name(a1, b1) + " and " + name(a2, b2) +
                            " are both of type " + to_string(t));
          }
        }
      }
    }
  }
  // Two bad pairs sharing no coordinate are not both of type 1-2.
  for (int a1 = 0; a1 < 3; ++a1)
    for (int b1 = 0; b1 < 3; ++b1)
      for (int a2 = a1 + 1; a2 < 3; ++a2)
        for (int b2 = 0; b2 < 3; ++b2) {
          if (b2 == b1 || !bad(a1, b1) || !bad(a2, b2)) continue;
          if (type(a1, b1) == one_two && type(a2, b2) == one_two)
            out.push_back("disjoint pairs " + name(a1, b1) + " and " + name(a2, b2) +
                          " are both of type 1-2");
        }
  // A fully bad row (column) is neither all 1-* nor all *-1.
  for (int fixed = 0; fixed < 3; ++fixed) {
    for (bool row : {true, false}) {
      auto at = [&](int k) { return row ? std::pair{fixed, k} : std::pair{k, fixed}; };
      bool all_bad = true;
      for (int k = 0; k < 3; ++k) all_bad = all_bad && bad(at(k).first, at(k).second);
      if (!all_bad) continue;
      bool first_ones = true;
      bool second_ones = true;
      for (int k = 0; k < 3; ++k) {
        const PairType t = type(at(k).first, at(k).second);
        first_ones = first_ones && t.first == 1;
        second_ones = second_ones && t.second == 1;
      }
      const std::string line = std::string(row ? "row " : "column ") + std::to_string(fixed);
      if (first_ones) out.push_back(line + " has three bad pairs of type 1-*");
      if (second_ones) out.push_back(line + " has three bad pairs of type *-1");
    }
  }
  return out;
}

LightPair find_light_pair(const Cover& t4_cover, int copies) {
  std::array<std::array<std::vector<int>, 3>, 3> bad_for;
  for (int m = 0; m < copies; ++m) {
    const auto ids = t_k_copy_vertices(m);
    const Census census = bad_pair_census(restrict_cover(t4_cover, ids).cover);
    for (const auto& e : census.entries) {
      if (!e.cls.good()) bad_for[e.alpha][e.beta].push_back(m);
    }
  }
  for (int alpha = 0; alpha < 3; ++alpha) {
    for (int beta = 0; beta < 3; ++beta) {
      if (bad_for[alpha][beta].size() <= 2) return {alpha, beta, bad_for[alpha][beta]};
    }
  }
  throw Falsified("every hub pair is bad for at least three copies");
}

PartialColoring extend_from_light_pair(const Cover& t4_cover, const LightPair& pair,
                                       int copies) {
  if (pair.bad_copies.size() > 2) throw Falsified("light pair is bad for more than two copies");
  PartialColoring total(t4_cover.num_vertices());
  for (int m = 0; m < copies; ++m) {
    const auto ids = t_k_copy_vertices(m);
    const Subcover copy = restrict_cover(t4_cover, ids);
    int cap_u = 0;
    int cap_v = 0;
    auto pos = std::find(pair.bad_copies.begin(), pair.bad_copies.end(), m);
    if (pos == pair.bad_copies.begin() && pos != pair.bad_copies.end()) cap_u = 1;
    if (pos != pair.bad_copies.end() && pos != pair.bad_copies.begin()) cap_v = 1;
    PartialColoring pin(t_role::kVertices);
    pin.assign(t_role::u, pair.alpha);
    pin.assign(t_role::v, pair.beta);
    const DefectConstraint caps = DefectConstraint::uniform(1).with(t_role::u, cap_u).with(t_role::v, cap_v);
    const Certificate cert = find_coloring(copy.cover, caps, pin);
    if (!cert.feasible())
      throw Falsified("copy " + std::to_string(m) + " has no extension with hub defects (" +
                      std::to_string(cap_u) + "," + std::to_string(cap_v) + ")");
    const PartialColoring lifted = copy.lift(*cert.coloring, t4_cover.num_vertices());
    for (VertexId v : lifted.domain()) total.assign(v, lifted[v]);
  }
  if (max_defect(t4_cover, total) > 1) throw Falsified("assembled coloring is not 1-defective");
  return total;
}

}  // namespace defcor

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "defcor/cover.hpp"
#include "defcor/solver.hpp"

namespace defcor {

class ProfileError : public std::runtime_error {
 public:
  explicit ProfileError(const std::string& what) : std::runtime_error(what) {}
};

/// Assignment of the roles a, b, c, d of R to the vertices of a 4-vertex
/// cover, with an ordering of each role's list: colors[role][k] is the
/// local index of the color playing role_{k+1}.
struct RLabeling {
  std::array<VertexId, 4> vertex{};
  std::array<std::vector<int>, 4> colors;
};

/// Detectors for covers of a graph isomorphic to R (K4 minus one edge).
/// Each searches every role assignment and color ordering consistent with
/// the list sizes and returns a realizing labeling, if any. They throw
/// ProfileError when the list sizes do not fit the pattern: (1,2,1,2) for
/// twisted / wedged_1212 and (1,2,2,2) for wedged_1222, listed as
/// (a, b, c, d) with a, c the non-adjacent pair.
std::optional<RLabeling> find_twist(const Cover& r);
std::optional<RLabeling> find_wedge_1212(const Cover& r);
std::optional<RLabeling> find_wedge_1222(const Cover& r);

inline bool is_twisted(const Cover& r) { return find_twist(r).has_value(); }
inline bool is_wedged_1212(const Cover& r) { return find_wedge_1212(r).has_value(); }
inline bool is_wedged_1222(const Cover& r) { return find_wedge_1222(r).has_value(); }

/// Wedged test dispatched on the list-size profile.
std::optional<RLabeling> find_wedge(const Cover& r);
inline bool is_wedged(const Cover& r) { return find_wedge(r).has_value(); }

enum class BadKind {
  one,
  two_i,
  two_ii,
  three_i,
  three_ii,
  four,
  five_i,
  five_ii,
};

std::string to_string(BadKind kind);

/// Residual list-size signature of a bad pair, written (first, second):
/// 2-1, 1-1 or 1-2.
struct PairType {
  int first = 0;
  int second = 0;
  friend bool operator==(const PairType&, const PairType&) = default;
};

PairType pair_type(BadKind kind);
std::string to_string(PairType t);

struct ResidualClass {
  std::optional<BadKind> bad;  ///< empty means good
  /// Labelings that realize the matched clause (R1 first, then R2).
  std::vector<RLabeling> witnesses;
  /// For four-bad: the ordered (z1, z2) that worked, as residual local
  /// indices; z2 is deleted from R1 and z1 from R2.
  std::optional<std::pair<int, int>> z_pair;

  bool good() const noexcept { return !bad.has_value(); }
};

/// Classifies a cover of T minus {u, v}, laid out as in residual_role.
/// Throws ProfileError unless u1, v1, u2, v2 have lists of size 2 and
/// x, z, y lists of size 1 or 2, or if the base graph is not T minus {u, v}.
ResidualClass classify_residual(const Cover& residual);

struct CensusEntry {
  int alpha = 0;  ///< local index in L(u)
  int beta = 0;   ///< local index in L(v)
  ResidualClass cls;
  std::optional<PairType> type;
};

/// Classification of every pair of L(u) x L(v) of a 3-fold cover of T
/// (ids as in t_role), in row-major order.
struct Census {
  std::vector<CensusEntry> entries;
  int bad_count() const;
  const CensusEntry& at(int alpha, int beta) const { return entries.at(alpha * 3 + beta); }
};

Census bad_pair_census(const Cover& t_cover);

/// Census consistency: at most six bad pairs, and the pair-type
/// restrictions on rows, columns and disjoint pairs. Returns one message per
/// violation (empty when consistent).
std::vector<std::string> census_violations(const Census& census);

/// A hub pair of a 3-fold cover of T(4) that is bad for few copies.
struct LightPair {
  int alpha = 0;
  int beta = 0;
  std::vector<int> bad_copies;
};

/// Returns the first pair (row-major) bad for at most two copies. Throws
/// Falsified if none exists.
LightPair find_light_pair(const Cover& t4_cover, int copies = 4);

/// Builds a 1-defective coloring of the whole T(k) cover from a light pair:
/// the first bad copy is extended with (def u <= 1, def v = 0), the second
/// with (0, <= 1), every good copy with (0, 0). Throws Falsified when an
/// extension fails to exist or the union is not 1-defective.
PartialColoring extend_from_light_pair(const Cover& t4_cover, const LightPair& pair,
                                       int copies = 4);

}  // namespace defcor

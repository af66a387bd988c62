#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "defcor/cover.hpp"
#include "defcor/graph.hpp"

namespace defcor {

/// R = K4 minus the edge ac.
namespace r_role {
inline constexpr VertexId a = 0, b = 1, c = 2, d = 3;
}

/// The two-hub gadget T: hubs u, v; R1 = T[x, u1, v1, z] and
/// R2 = T[z, u2, v2, y] with x!~z and z!~y; N(u) = {x, u1, z, u2, y} and
/// N(v) = {x, v1, z, v2, y}.
namespace t_role {
inline constexpr VertexId u = 0, v = 1, x = 2, z = 3, y = 4, u1 = 5, v1 = 6, u2 = 7, v2 = 8;
inline constexpr int kVertices = 9;
}  // namespace t_role

/// Vertex ids of T minus {u, v} as laid out by subcover(): every T id
/// shifted down by two.
namespace residual_role {
inline constexpr VertexId x = 0, z = 1, y = 2, u1 = 3, v1 = 4, u2 = 5, v2 = 6;
}

/// The three-colour blocking gadget: hubs u, v, a spine z1..z5 and ears
/// x1..x4 (on u's side) and y1..y4 (on v's side).
namespace t3_role {
inline constexpr VertexId u = 0, v = 1;
inline constexpr VertexId z(int i) { return 1 + i; }   // i in 1..5
inline constexpr VertexId x(int j) { return 6 + j; }   // j in 1..4
inline constexpr VertexId y(int j) { return 10 + j; }  // j in 1..4
inline constexpr int kVertices = 15;
}  // namespace t3_role

Graph build_R();
Graph build_T5();

/// k copies of T glued at u and at v. Ids: u = 0, v = 1, and copy m
/// (0-based) occupies 2 + 7m .. 8 + 7m in the order x, z, y, u1, v1, u2, v2.
Graph build_T_k(int k);

/// Vertices of copy m of T(k), listed in T's id order (so that restricting a
/// T(k) cover to them yields a cover of T).
std::vector<VertexId> t_k_copy_vertices(int m);

Graph build_T3_gadget();

/// Blocking cover of the three-colour gadget for the hub pair (alpha, beta),
/// both in 1..3. Hub lists are the single colors alpha and beta; every other
/// list has three colors.
Cover build_bad_cover_T3(int alpha, int beta);

/// 63 copies of the three-colour gadget sharing hubs u = 0 and v = 1, with
/// hub lists of size three. Copies 7p .. 7p+6 block the hub pair
/// (p / 3 + 1, p % 3 + 1).
struct G63 {
  Cover cover;
  int copies = 63;
  /// Hub pair (1-based) each copy is built to block.
  std::vector<std::pair<int, int>> blocked_pair;
  /// Vertices of copy m in three-colour gadget id order.
  std::vector<VertexId> copy_vertices(int m) const;
};
G63 build_G63();

/// Fan z1..z_len with apex u and ears y_i ~ z_i, z_{i+1}. Two colors per
/// list, identity matchings except a swap on every y_i z_{i+1}.
struct FanGadget {
  Cover cover;
  std::vector<VertexId> outer_cycle;
};
FanGadget build_fan_gadget(int length = 12);

/// 4-fold cover of T: (u, alpha) ~ (x, i), (z, j), (y, k), (u1, l), (u2, l);
/// (v, beta) ~ (w, l) for every w in N(v); identity elsewhere. All
/// arguments are 1-based.
Cover build_H_rot(int i, int j, int k, int l, int alpha, int beta);

/// Union of the four rotations with hub pairs (i, sigma(i)). `sigma` is a
/// 1-based permutation of 1..4.
Cover build_H_sigma(const std::array<int, 4>& sigma);

/// The partition of [4] x [4] into four permutations used for T(4).
std::array<std::array<int, 4>, 4> t4_partition();

/// Cover of T(k) whose copy m is copies[m], a cover of T; hub colors are
/// shared by index.
Cover glue_T_copies(std::span<const Cover> copies);

/// 4-fold cover of T(4) whose copy m carries H(A_m).
Cover build_T4_counterexample();

/// Names accepted by build_named_gadget().
std::vector<std::string> gadget_names();

/// Named gadget for export. Optional outer cycle for outerplane gadgets.
struct NamedGadget {
  Cover cover;
  std::vector<VertexId> outer_cycle;
};
NamedGadget build_named_gadget(const std::string& name, const std::vector<int>& params);

}  // namespace defcor

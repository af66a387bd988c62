#pragma once

// Fixture: blocking cover of the three-colour gadget, hub pair (1, 1).
//
// Provenance: hand transcription of the published drawings of the gadget and
// its cover. The drawings themselves are not machine readable; the layout
// below is pinned by the structural facts the accompanying argument relies
// on, and by the exhaustive check in tests/test_gadgets.cpp:
//   * once u and v take their only colors, every spine vertex z_i keeps
//     only color 2 (u blocks color 1, v blocks color 3);
//   * every ear x_j, y_j loses color 2;
//   * an ear colored 1 conflicts with its left spine neighbor, an ear
//     colored 3 with its right one, so z2, z3, z4 cannot all stay within
//     three conflicts.
//
// Colors are written 1..3 as in the drawings and shifted to 0-based local
// indices by the builder.

#include <array>
#include <utility>

namespace defcor::t3_fixture {

/// Spine: z_i z_{i+1} carry the identity matching.
inline constexpr std::array<std::pair<int, int>, 3> kSpineMatching{{{1, 1}, {2, 2}, {3, 3}}};

/// Ear to its left spine vertex (x_j z_j, y_j z_j): (ear color, spine color).
inline constexpr std::array<std::pair<int, int>, 3> kLeftMatching{{{1, 2}, {2, 1}, {3, 3}}};

/// Ear to its right spine vertex (x_j z_{j+1}, y_j z_{j+1}).
inline constexpr std::array<std::pair<int, int>, 3> kRightMatching{{{3, 2}, {2, 3}, {1, 1}}};

/// Single cross edge from the hub color to each hub neighbor.
inline constexpr int kUToSpine = 1;  // alpha ~ (z_i, 1)
inline constexpr int kVToSpine = 3;  // beta ~ (z_i, 3)
inline constexpr int kUToEar = 2;    // alpha ~ (x_j, 2)
inline constexpr int kVToEar = 2;    // beta ~ (y_j, 2)

}  // namespace defcor::t3_fixture

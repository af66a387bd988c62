#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "defcor/cover.hpp"
#include "defcor/graph.hpp"
#include "defcor/outerplanar.hpp"

namespace defcor {

/// Seeded generator used by every randomized check.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded integers use rejection sampling on the raw 64-bit
/// output and shuffles are Fisher-Yates driven by that, so a given seed
/// produces the same instances on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  int uniform_int(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
};

/// Seed of iteration `index` of a run seeded with `seed` (splitmix64 of the
/// pair), so iterations are independent of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform maximal matching between lists of sizes a and b, as index pairs.
Matching random_maximal_matching(Rng& rng, int a, int b);

/// Random matching: a uniform maximal one with each pair kept with
/// probability `keep`.
Matching random_matching(Rng& rng, int a, int b, double keep);

/// Cover of g with the given list sizes; every matching is drawn by
/// random_matching(keep). keep = 1 gives uniform maximal matchings.
Cover random_cover(Rng& rng, const Graph& g, std::span<const int> list_sizes, double keep = 1.0);
Cover random_cover(Rng& rng, const Graph& g, int k, double keep = 1.0);

/// Cover of R (ids as in r_role) with list sizes (a, b, c, d), vertex ids
/// shuffled so that detectors see unlabeled input.
Cover random_R_cover(Rng& rng, const std::array<int, 4>& sizes, double keep = 1.0);

/// 1-2-1-2 cover of R built around a twisted 6-cycle, then relabeled.
Cover random_twisted_R_cover(Rng& rng);

/// 1-2-2-2 cover of R whose restriction to one c-color is twisted, with the
/// other c-color matched at random. Vertex ids and colors are shuffled.
Cover random_half_twisted_R_cover(Rng& rng);

/// How one R-half of T is seeded before random completion.
enum class Plant { none, twist, wedge };

/// Residual to plant at the hub pair (first color of u, first color of v)
/// of a 3-fold cover of T: list sizes of x, z, y after the pin, and the
/// pattern seeded on R1 = T[x, u1, v1, z] and R2 = T[z, u2, v2, y].
struct PlantedResidual {
  int lx = 1, lz = 1, ly = 1;
  Plant r1 = Plant::none;
  Plant r2 = Plant::none;
};

/// A size profile of some bad clause with random seeded patterns.
PlantedResidual random_bad_profile(Rng& rng);

/// Random 3-fold cover of T (ids as in t_role, all matchings maximal) whose
/// residual at the planted pair has the requested sizes and patterns. A twist
/// needs the R-half's x (or y) list to have one color; with two z colors R1
/// uses the first and R2 the second. Every list is shuffled afterwards.
Cover random_planted_T_cover(Rng& rng, const PlantedResidual& plant);

/// Random outerplane near triangulation on n >= 3 vertices with shuffled ids.
OuterplaneGraph random_near_triangulation(Rng& rng, int n);

/// Random outerplane graph: a near triangulation with each chord dropped
/// with probability `drop`.
OuterplaneGraph random_outerplane(Rng& rng, int n, double drop);

/// Random graph with n vertices and edge probability p.
Graph random_graph(Rng& rng, int n, double p);

}  // namespace defcor

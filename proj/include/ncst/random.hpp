#pragma once

// Seeded instance generators. std::mt19937_64 is fully specified by the
// standard, and bounded draws use our own rejection step rather than
// std::uniform_int_distribution (whose algorithm is implementation-defined),
// so a seed reproduces the same instance on every platform.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ncst/geometry.hpp"
#include "ncst/graph.hpp"

namespace ncst {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
  }

  std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(size) - 1)); }
  bool coin() { return uniform(0, 1) == 1; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 step; derives independent per-instance seeds from one base seed.
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace detail {

inline bool compatible(const std::vector<Point>& pts, const Point& p) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == p) return false;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (orient(pts[i], pts[j], p) == Sign::Zero) return false;
    }
  }
  return true;
}

}  // namespace detail

/// n points uniform in [0, bound]^2, redrawing any point that duplicates an
/// earlier one or is collinear with two of them.
inline std::vector<Point> random_general_position(Rng& rng, std::size_t n, std::int64_t bound = kCoordinateBound) {
  std::vector<Point> pts;
  while (pts.size() < n) {
    const Point p{rng.uniform(0, bound), rng.uniform(0, bound)};
    if (detail::compatible(pts, p)) pts.push_back(p);
  }
  return pts;
}

/// n points in convex position: general-position samples are added one at a
/// time until their hull has at least n vertices; the first n hull vertices in
/// CCW order (from the lexicographic minimum) are returned.
inline std::vector<Point> random_convex_position(Rng& rng, std::size_t n, std::int64_t bound = kCoordinateBound) {
  std::vector<Point> pts = random_general_position(rng, std::max<std::size_t>(n, 3), bound);
  for (;;) {
    const auto hull = convex_hull_ccw(pts);
    if (hull.size() >= n) {
      std::vector<Point> out;
      for (std::size_t i = 0; i < n; ++i) out.push_back(pts[hull[i]]);
      return out;
    }
    Point p;
    do {
      p = Point{rng.uniform(0, bound), rng.uniform(0, bound)};
    } while (!detail::compatible(pts, p));
    pts.push_back(p);
  }
}

/// k distinct edges of the config chosen uniformly (partial Fisher-Yates).
inline EdgeSet random_edge_subset(Rng& rng, const Config& config, std::size_t k) {
  std::vector<std::size_t> idx(config.edge_count());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  EdgeSet out;
  for (std::size_t i = 0; i < k && i < idx.size(); ++i) {
    std::swap(idx[i], idx[i + rng.index(idx.size() - i)]);
    out.insert(idx[i]);
  }
  return out;
}

}  // namespace ncst

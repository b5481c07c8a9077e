#pragma once

// Explicit avoiding trees built from the proofs of the blocker bounds, plus the
// central-edge obstruction test used to certify the diameter-4 counterexample.
// Each construction validates its precondition and throws PreconditionError
// naming the violated condition.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncst/graph.hpp"

namespace ncst {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Apex x, reference ray x->y, pivot b and the closed cone between rays x->y and x->b.
struct ConeWitness {
  Vertex apex = 0;
  Vertex ray_vertex = 0;
  Vertex pivot = 0;
  std::vector<Vertex> cone_members;
  bool rotated_clockwise = false;
};

struct PerlesResult {
  EdgeSet tree;
  std::optional<Vertex> star_center;  // set when the chosen component is a single vertex
  std::optional<ConeWitness> cone;
};

namespace detail {

/// Strict CCW angular order around `apex`, measured from ray apex->ref in [0, 2pi).
inline bool ccw_before(const Point& apex, const Point& ref, const Point& p, const Point& q) {
  auto upper = [&](const Point& r) {
    const std::int64_t c = cross(apex, ref, r);
    return c > 0 || (c == 0 && dot(apex, ref, r) > 0);
  };
  const bool hp = upper(p);
  const bool hq = upper(q);
  if (hp != hq) return hp;
  return orient(apex, p, q) == Sign::Positive;
}

}  // namespace detail

/// A simple spanning tree of diameter at most 3 that avoids `b_edges`, which
/// must have at most n - 2 edges.
///
/// Takes the tree component A of (V, b_edges) containing the lowest vertex.
/// A singleton A = {x'} yields the star at x'. Otherwise x is the lowest leaf
/// of A with neighbor y; rotating the ray x->y counterclockwise, b is the first
/// vertex outside A. The tree joins x to every vertex outside the closed cone
/// H spanned by x->y and x->b, and b to every other vertex of H. When the
/// counterclockwise sweep to b is reflex the cone is not convex, and the
/// rotation runs clockwise instead, which then sweeps less than a half-turn.
inline PerlesResult perles_sst3_detailed(const Config& config, const EdgeSet& b_edges) {
  const std::size_t n = config.n();
  if (b_edges.size() > n - 2) {
    throw PreconditionError("perles_sst3: |B| = " + std::to_string(b_edges.size()) + " exceeds n - 2 = " +
                            std::to_string(n - 2));
  }
  const auto label = component_labels(config, b_edges);
  const std::size_t comps = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::size_t> vertex_count(comps, 0);
  std::vector<std::size_t> edge_count(comps, 0);
  for (Vertex v = 0; v < n; ++v) ++vertex_count[label[v]];
  b_edges.for_each([&](std::size_t i) { ++edge_count[label[config.edge(i).u]]; });

  // Labels are numbered by lowest member, so the first tree label is the one we want.
  std::size_t chosen = comps;
  for (std::size_t c = 0; c < comps && chosen == comps; ++c) {
    if (edge_count[c] + 1 == vertex_count[c]) chosen = c;
  }
  if (chosen == comps) throw std::logic_error("perles_sst3: no tree component despite |B| <= n - 2");

  PerlesResult result;
  if (vertex_count[chosen] == 1) {
    const Vertex center = static_cast<Vertex>(std::find(label.begin(), label.end(), chosen) - label.begin());
    result.tree = config.incident(center);
    result.star_center = center;
    return result;
  }

  Vertex x = n;
  for (Vertex v = 0; v < n && x == n; ++v) {
    if (label[v] == chosen && degree(config, b_edges, v) == 1) x = v;
  }
  const Vertex y = config.edge((config.incident(x) & b_edges).indices().front()).other(x);
  const Point& px = config.point(x);
  const Point& py = config.point(y);

  std::vector<Vertex> outside;
  for (Vertex v = 0; v < n; ++v) {
    if (label[v] != chosen) outside.push_back(v);
  }
  auto by_ccw = [&](Vertex p, Vertex q) { return detail::ccw_before(px, py, config.point(p), config.point(q)); };
  Vertex pivot = *std::min_element(outside.begin(), outside.end(), by_ccw);
  bool clockwise = false;
  if (orient(px, py, config.point(pivot)) == Sign::Negative) {
    pivot = *std::max_element(outside.begin(), outside.end(), by_ccw);
    clockwise = true;
  }

  const Point& pb = config.point(pivot);
  const Sign s = orient(px, py, pb);
  ConeWitness cone{x, y, pivot, {}, clockwise};
  EdgeSet tree;
  for (Vertex v = 0; v < n; ++v) {
    const Point& pv = config.point(v);
    const bool in_cone =
        v == x || v == y || v == pivot || (orient(px, py, pv) == s && orient(px, pb, pv) == -s);
    if (in_cone) {
      cone.cone_members.push_back(v);
      if (v != pivot) tree.insert(config.edge_index(pivot, v));
    } else {
      tree.insert(config.edge_index(x, v));
    }
  }
  result.tree = tree;
  result.cone = std::move(cone);
  return result;
}

inline EdgeSet perles_sst3(const Config& config, const EdgeSet& b_edges) {
  return perles_sst3_detailed(config, b_edges).tree;
}

/// Vertices a, b and a line through two integer points p, q (p != q) such that
/// a and every B-neighbor of b lie on one side, and b and every B-neighbor of
/// a on the other. Neighbors may lie on the line itself provided a and b share
/// no neighbor there.
struct SeparatedPair {
  Vertex a = 0;
  Vertex b = 0;
  Point p;
  Point q;
};

/// Diameter-3 simple spanning tree through [a,b] avoiding `b_edges`: a takes
/// every vertex on its side, b every vertex on its side, and vertices on the
/// line go to a unless they are B-neighbors of a.
inline EdgeSet separated_pair_sst3(const Config& config, const EdgeSet& b_edges, const SeparatedPair& pair) {
  const std::size_t n = config.n();
  const Vertex a = pair.a;
  const Vertex b = pair.b;
  if (a >= n || b >= n || a == b) throw PreconditionError("separated_pair_sst3: a and b must be distinct vertices");
  if (pair.p == pair.q) throw PreconditionError("separated_pair_sst3: line points coincide");
  if (b_edges.contains(config.edge_index(a, b))) {
    throw PreconditionError("separated_pair_sst3: [a,b] belongs to B");
  }
  auto side = [&](Vertex v) { return side_of_line(pair.p, pair.q, config.point(v)); };
  const Sign side_a = side(a);
  if (side_a == Sign::Zero) throw PreconditionError("separated_pair_sst3: a lies on the line");
  if (side(b) != -side_a) throw PreconditionError("separated_pair_sst3: b is not strictly opposite a");

  const auto adj = adjacency(config, b_edges);
  std::vector<bool> neighbor_of_a(n, false);
  for (Vertex w : adj[a]) {
    neighbor_of_a[w] = true;
    if (side(w) == side_a) {
      throw PreconditionError("separated_pair_sst3: B-neighbor " + std::to_string(w) + " of a lies on a's side");
    }
  }
  for (Vertex w : adj[b]) {
    const Sign sw = side(w);
    if (sw == -side_a) {
      throw PreconditionError("separated_pair_sst3: B-neighbor " + std::to_string(w) + " of b lies on b's side");
    }
    if (sw == Sign::Zero && neighbor_of_a[w]) {
      throw PreconditionError("separated_pair_sst3: a and b share the neighbor " + std::to_string(w) +
                              " on the line");
    }
  }

  EdgeSet tree;
  tree.insert(config.edge_index(a, b));
  for (Vertex v = 0; v < n; ++v) {
    if (v == a || v == b) continue;
    const Sign sv = side(v);
    const bool to_a = sv == side_a || (sv == Sign::Zero && !neighbor_of_a[v]);
    tree.insert(to_a ? config.edge_index(a, v) : config.edge_index(b, v));
  }
  return tree;
}

/// Diameter-4 simple spanning tree avoiding `b_edges`, built by dropping the
/// hull vertex `b`, finding a diameter-3 tree on the rest, and reattaching b
/// through the free boundary edge [a,b].
inline EdgeSet boundary_leaf_sst4(const Config& config, const EdgeSet& b_edges, Vertex b, Vertex a) {
  const std::size_t n = config.n();
  if (a >= n || b >= n || a == b) throw PreconditionError("boundary_leaf_sst4: a and b must be distinct vertices");
  if (!config.on_hull(b)) throw PreconditionError("boundary_leaf_sst4: b = " + std::to_string(b) + " is not a hull vertex");
  if (!boundary_edges(config).contains(config.edge_index(a, b))) {
    throw PreconditionError("boundary_leaf_sst4: [a,b] is not a boundary edge");
  }
  if (b_edges.contains(config.edge_index(a, b))) throw PreconditionError("boundary_leaf_sst4: [a,b] belongs to B");
  const EdgeSet restricted = b_edges - config.incident(b);
  if (restricted.size() + 3 > n) {
    throw PreconditionError("boundary_leaf_sst4: B restricted to V \\ {b} has " + std::to_string(restricted.size()) +
                            " edges, more than n - 3 = " + std::to_string(n - 3));
  }

  EdgeSet tree;
  tree.insert(config.edge_index(a, b));
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v) {
    if (v != b) keep.push_back(v);
  }
  if (keep.size() == 2) {
    tree.insert(config.edge_index(keep[0], keep[1]));
    return tree;
  }

  std::vector<Point> sub_points;
  for (Vertex v : keep) sub_points.push_back(config.point(v));
  const Config sub(std::move(sub_points));
  std::vector<Vertex> to_sub(n, n);
  for (std::size_t i = 0; i < keep.size(); ++i) to_sub[keep[i]] = i;
  EdgeSet sub_b;
  restricted.for_each([&](std::size_t i) {
    const Edge& e = config.edge(i);
    sub_b.insert(sub.edge_index(to_sub[e.u], to_sub[e.v]));
  });
  perles_sst3(sub, sub_b).for_each([&](std::size_t i) {
    const Edge& e = sub.edge(i);
    tree.insert(config.edge_index(keep[e.u], keep[e.v]));
  });
  return tree;
}

/// Four points (in any order) are in convex position: none lies inside the
/// triangle of the other three.
inline bool in_convex_position(const Point& p0, const Point& p1, const Point& p2, const Point& p3) {
  const Point pts[4] = {p0, p1, p2, p3};
  for (int i = 0; i < 4; ++i) {
    const Point& a = pts[(i + 1) % 4];
    const Point& b = pts[(i + 2) % 4];
    const Point& c = pts[(i + 3) % 4];
    const Sign s1 = orient(a, b, pts[i]);
    const Sign s2 = orient(b, c, pts[i]);
    const Sign s3 = orient(c, a, pts[i]);
    if (s1 == s2 && s2 == s3) return false;
  }
  return true;
}

/// A pair (z, w) certifying that [x,y] is the central edge of no diameter-3
/// simple spanning tree avoiding B: x, y, z, w distinct and in convex position,
/// [x,w] and [y,z] in B, and neither {[x,y],[z,w]} nor {[x,w],[y,z]} crossing,
/// so that [x,z] and [y,w] must cross. First pair in (z, w) order, or nullopt.
inline std::optional<std::pair<Vertex, Vertex>> central_edge_obstruction(const Config& config, const EdgeSet& b_edges,
                                                                         Vertex x, Vertex y) {
  const std::size_t n = config.n();
  if (x >= n || y >= n || x == y) throw PreconditionError("central_edge_obstruction: x and y must be distinct vertices");
  if (b_edges.contains(config.edge_index(x, y))) throw PreconditionError("central_edge_obstruction: [x,y] belongs to B");
  const Point& px = config.point(x);
  const Point& py = config.point(y);
  for (Vertex z = 0; z < n; ++z) {
    if (z == x || z == y || !b_edges.contains(config.edge_index(y, z))) continue;
    for (Vertex w = 0; w < n; ++w) {
      if (w == x || w == y || w == z || !b_edges.contains(config.edge_index(x, w))) continue;
      const Point& pz = config.point(z);
      const Point& pw = config.point(w);
      if (!in_convex_position(px, py, pz, pw)) continue;
      if (segments_cross(px, py, pz, pw) || segments_cross(px, pw, py, pz)) continue;
      return std::pair{z, w};
    }
  }
  return std::nullopt;
}

}  // namespace ncst

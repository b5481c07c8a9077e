#pragma once

// The complete geometric graph on a validated point set, its edge subsets,
// and the abstract tree analyses used by every higher layer.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ncst/geometry.hpp"

namespace ncst {

inline constexpr std::size_t kMaxVertices = 32;
inline constexpr std::size_t kMaxEdges = kMaxVertices * (kMaxVertices - 1) / 2;
inline constexpr std::size_t kEdgeWords = (kMaxEdges + 63) / 64;

using Vertex = std::size_t;

/// Undirected edge in canonical order u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  constexpr bool has(Vertex w) const { return u == w || v == w; }
  constexpr Vertex other(Vertex w) const { return w == u ? v : u; }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Set of canonical edge indices of one Config. Index order coincides with the
/// (u,v)-lexicographic order of the edges, so iteration is canonical.
class EdgeSet {
 public:
  constexpr EdgeSet() = default;

  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  bool intersects(const EdgeSet& o) const {
    for (std::size_t k = 0; k < kEdgeWords; ++k) {
      if (words_[k] & o.words_[k]) return true;
    }
    return false;
  }
  bool is_subset_of(const EdgeSet& o) const {
    for (std::size_t k = 0; k < kEdgeWords; ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < kEdgeWords; ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Low 64 edge indices packed in one word; exact when the Config has at most 64 edges.
  std::uint64_t low_word() const { return words_[0]; }
  static EdgeSet from_low_word(std::uint64_t w) {
    EdgeSet s;
    s.words_[0] = w;
    return s;
  }

  EdgeSet& operator|=(const EdgeSet& o) {
    for (std::size_t k = 0; k < kEdgeWords; ++k) words_[k] |= o.words_[k];
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& o) {
    for (std::size_t k = 0; k < kEdgeWords; ++k) words_[k] &= o.words_[k];
    return *this;
  }
  EdgeSet& operator-=(const EdgeSet& o) {
    for (std::size_t k = 0; k < kEdgeWords; ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

  /// Lexicographic order of the sorted index sequences.
  friend bool canonical_less(const EdgeSet& a, const EdgeSet& b) {
    for (std::size_t k = 0; k < kEdgeWords; ++k) {
      const std::uint64_t diff = a.words_[k] ^ b.words_[k];
      if (!diff) continue;
      const std::uint64_t bit = diff & (~diff + 1);
      const bool a_has = a.words_[k] & bit;
      const EdgeSet& other = a_has ? b : a;
      // `other` lacks the first differing index; it is smaller only if it has nothing beyond it.
      bool other_has_more = (other.words_[k] & ~(bit | (bit - 1))) != 0;
      for (std::size_t j = k + 1; j < kEdgeWords && !other_has_more; ++j) other_has_more = other.words_[j] != 0;
      return a_has ? other_has_more : !other_has_more;
    }
    return false;
  }

 private:
  std::array<std::uint64_t, kEdgeWords> words_{};
};

struct CanonicalLess {
  bool operator()(const EdgeSet& a, const EdgeSet& b) const { return canonical_less(a, b); }
};

/// A general-position point set with its hull and the complete edge list.
/// Immutable after construction.
class Config {
 public:
  explicit Config(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.size() < 3) throw GeometryError("Config: need at least 3 points");
    if (points_.size() > kMaxVertices) {
      throw GeometryError("Config: at most " + std::to_string(kMaxVertices) + " points supported");
    }
    if (auto violation = assert_general_position(points_)) throw GeometryError(violation->describe(points_));
    hull_ = convex_hull_ccw(points_);

    const std::size_t n = points_.size();
    on_hull_.assign(n, false);
    for (auto h : hull_) on_hull_[h] = true;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges_.push_back({u, v});
    }
    incident_.assign(n, EdgeSet{});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].u].insert(i);
      incident_[edges_[i].v].insert(i);
    }
    crossing_.assign(edges_.size(), EdgeSet{});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (std::size_t j = i + 1; j < edges_.size(); ++j) {
        const Edge& e = edges_[i];
        const Edge& f = edges_[j];
        if (segments_cross(points_[e.u], points_[e.v], points_[f.u], points_[f.v])) {
          crossing_[i].insert(j);
          crossing_[j].insert(i);
        }
      }
    }
  }

  std::size_t n() const { return points_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(Vertex v) const { return points_[v]; }
  const std::vector<Vertex>& hull() const { return hull_; }
  bool on_hull(Vertex v) const { return on_hull_[v]; }
  bool is_convex_position() const { return hull_.size() == points_.size(); }

  const Edge& edge(std::size_t i) const { return edges_[i]; }
  std::size_t edge_index(Vertex a, Vertex b) const {
    const Edge e = Edge::of(a, b);
    const std::size_t n = points_.size();
    return e.u * n - e.u * (e.u + 1) / 2 + (e.v - e.u - 1);
  }
  std::size_t edge_index(const Edge& e) const { return edge_index(e.u, e.v); }

  /// Edges whose open segment properly crosses edge i.
  const EdgeSet& crossing(std::size_t i) const { return crossing_[i]; }
  const EdgeSet& incident(Vertex v) const { return incident_[v]; }

  EdgeSet make_set(std::span<const Edge> edges) const {
    EdgeSet s;
    for (const auto& e : edges) s.insert(edge_index(e));
    return s;
  }
  EdgeSet make_set(std::initializer_list<std::pair<Vertex, Vertex>> pairs) const {
    EdgeSet s;
    for (auto [a, b] : pairs) s.insert(edge_index(a, b));
    return s;
  }
  std::vector<Edge> edges_of(const EdgeSet& s) const {
    std::vector<Edge> out;
    s.for_each([&](std::size_t i) { out.push_back(edges_[i]); });
    return out;
  }

 private:
  std::vector<Point> points_;
  std::vector<Vertex> hull_;
  std::vector<bool> on_hull_;
  std::vector<Edge> edges_;
  std::vector<EdgeSet> incident_;
  std::vector<EdgeSet> crossing_;
};

inline EdgeSet complete_edges(const Config& config) {
  EdgeSet s;
  for (std::size_t i = 0; i < config.edge_count(); ++i) s.insert(i);
  return s;
}

inline EdgeSet boundary_edges(const Config& config) {
  EdgeSet s;
  const auto& hull = config.hull();
  for (std::size_t i = 0; i < hull.size(); ++i) s.insert(config.edge_index(hull[i], hull[(i + 1) % hull.size()]));
  return s;
}

inline bool is_noncrossing(const Config& config, const EdgeSet& edges) {
  bool ok = true;
  edges.for_each([&](std::size_t i) {
    if (ok && config.crossing(i).intersects(edges)) ok = false;
  });
  return ok;
}

inline EdgeSet complement(const Config& config, const EdgeSet& edges) { return complete_edges(config) - edges; }

inline std::size_t degree(const Config& config, const EdgeSet& edges, Vertex v) {
  return (config.incident(v) & edges).size();
}

inline std::vector<std::vector<Vertex>> adjacency(const Config& config, const EdgeSet& edges) {
  std::vector<std::vector<Vertex>> adj(config.n());
  edges.for_each([&](std::size_t i) {
    const Edge& e = config.edge(i);
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  });
  return adj;
}

/// Component label per vertex; labels are numbered by lowest member vertex.
inline std::vector<std::size_t> component_labels(const Config& config, const EdgeSet& edges) {
  const auto adj = adjacency(config, edges);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(config.n(), kUnset);
  std::size_t next = 0;
  for (Vertex s = 0; s < config.n(); ++s) {
    if (label[s] != kUnset) continue;
    std::vector<Vertex> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[v]) {
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

/// Breadth-first distances from `source`; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const std::vector<std::vector<Vertex>>& adj, Vertex source) {
  std::vector<int> dist(adj.size(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// Diameter of a spanning tree by two breadth-first sweeps.
inline int tree_diameter(const std::vector<std::vector<Vertex>>& adj) {
  const auto first = bfs_distances(adj, 0);
  const Vertex far = static_cast<Vertex>(std::max_element(first.begin(), first.end()) - first.begin());
  const auto second = bfs_distances(adj, far);
  return *std::max_element(second.begin(), second.end());
}

struct TreeAnalysis {
  bool is_spanning_tree = false;
  std::size_t components = 0;
  std::optional<int> diameter;
  bool is_caterpillar = false;
  /// Vertex sequence of the derived graph when it has at least one edge.
  std::vector<Vertex> derived_path;
  std::optional<std::vector<Vertex>> spine;
  std::optional<Edge> central_edge;
};

namespace detail {

inline std::vector<Vertex> tree_path(const std::vector<std::vector<Vertex>>& adj, Vertex from, Vertex to) {
  std::vector<Vertex> parent(adj.size(), adj.size());
  std::vector<Vertex> queue{from};
  parent[from] = from;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : adj[v]) {
      if (parent[w] == adj.size()) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// Spanning/diameter/caterpillar analysis. Non-trees get partial data
/// (component count only) rather than an error.
inline TreeAnalysis analyze_tree(const Config& config, const EdgeSet& edges) {
  TreeAnalysis out;
  const std::size_t n = config.n();
  const auto labels = component_labels(config, edges);
  out.components = *std::max_element(labels.begin(), labels.end()) + 1;
  out.is_spanning_tree = out.components == 1 && edges.size() == n - 1;
  if (!out.is_spanning_tree) return out;

  const auto adj = adjacency(config, edges);
  out.diameter = tree_diameter(adj);

  std::vector<bool> inner(n, false);
  for (Vertex v = 0; v < n; ++v) inner[v] = adj[v].size() >= 2;
  std::vector<std::size_t> inner_degree(n, 0);
  std::size_t inner_edges = 0;
  edges.for_each([&](std::size_t i) {
    const Edge& e = config.edge(i);
    if (inner[e.u] && inner[e.v]) {
      ++inner_degree[e.u];
      ++inner_degree[e.v];
      ++inner_edges;
    }
  });
  out.is_caterpillar = std::all_of(inner_degree.begin(), inner_degree.end(), [](std::size_t d) { return d <= 2; });

  if (out.is_caterpillar && inner_edges > 0) {
    Vertex start = n;
    for (Vertex v = 0; v < n && start == n; ++v) {
      if (inner[v] && inner_degree[v] == 1) start = v;
    }
    std::vector<Vertex> path{start};
    Vertex prev = n;
    for (bool extended = true; extended;) {
      extended = false;
      for (Vertex w : adj[path.back()]) {
        if (inner[w] && w != prev) {
          prev = path.back();
          path.push_back(w);
          extended = true;
          break;
        }
      }
    }
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    out.derived_path = std::move(path);
  }

  std::vector<std::vector<int>> dist(n);
  for (Vertex v = 0; v < n; ++v) dist[v] = bfs_distances(adj, v);

  if (out.is_caterpillar) {
    std::optional<std::vector<Vertex>> best;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (dist[a][b] != *out.diameter) continue;
        auto path = detail::tree_path(adj, a, b);
        if (!best || path < *best) best = std::move(path);
      }
    }
    out.spine = std::move(best);
  }

  if (*out.diameter == 3) {
    std::vector<int> ecc(n);
    for (Vertex v = 0; v < n; ++v) ecc[v] = *std::max_element(dist[v].begin(), dist[v].end());
    edges.for_each([&](std::size_t i) {
      const Edge& e = config.edge(i);
      if (ecc[e.u] == 2 && ecc[e.v] == 2) out.central_edge = e;
    });
  }
  return out;
}

}  // namespace ncst

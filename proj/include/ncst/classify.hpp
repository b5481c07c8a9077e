#pragma once

// Star and comb recognition with checkable certificates.
//
// A comb is a spanning caterpillar B such that
//   (1) the B-edges lying on the hull boundary form a simple path, the spine;
//   (2) every vertex off the spine has exactly one B-edge, ending at an
//       interior spine vertex, and B has no other edges;
//   (3) for every e in B the line through e crosses no open segment of B.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncst/graph.hpp"

namespace ncst {

struct LineClearance {
  Edge edge;
  std::size_t segments_checked = 0;
};

struct CombCertificate {
  std::vector<Vertex> spine;
  EdgeSet spine_edges;
  std::map<Vertex, Edge> teeth;
  std::vector<LineClearance> line_clearances;
};

struct CombViolation {
  int condition = 0;  // 1, 2 or 3
  std::string detail;
};

struct CombResult {
  std::optional<CombCertificate> certificate;
  std::vector<CombViolation> violations;

  bool is_comb() const { return certificate.has_value(); }
};

struct ClassifyResult {
  std::optional<Vertex> star_center;
  std::optional<CombCertificate> comb;
  std::vector<CombViolation> failure_reasons;

  bool is_star() const { return star_center.has_value(); }
  bool is_comb() const { return comb.has_value(); }
  bool is_star_or_comb() const { return is_star() || is_comb(); }
};

inline std::string edge_name(const Edge& e) { return "[" + std::to_string(e.u) + "," + std::to_string(e.v) + "]"; }

/// Center of `b` when it is exactly the full star at one vertex.
inline std::optional<Vertex> is_star(const Config& config, const EdgeSet& b) {
  for (Vertex v = 0; v < config.n(); ++v) {
    if (config.incident(v) == b) return v;
  }
  return std::nullopt;
}

namespace detail {

/// Vertex sequence of a simple path given as an edge set, oriented so that
/// the first endpoint is the smaller. Empty when the edges do not form one path.
inline std::vector<Vertex> as_simple_path(const Config& config, const EdgeSet& edges) {
  if (edges.empty()) return {};
  const auto adj = adjacency(config, edges);
  std::size_t touched = 0;
  Vertex start = config.n();
  for (Vertex v = 0; v < config.n(); ++v) {
    if (adj[v].empty()) continue;
    ++touched;
    if (adj[v].size() > 2) return {};
    if (adj[v].size() == 1 && start == config.n()) start = v;
  }
  if (start == config.n() || touched != edges.size() + 1) return {};  // cycle or forest
  std::vector<Vertex> path{start};
  Vertex prev = config.n();
  while (path.size() < touched) {
    const Vertex cur = path.back();
    const Vertex next = adj[cur][0] != prev ? adj[cur][0] : (adj[cur].size() > 1 ? adj[cur][1] : config.n());
    if (next == config.n()) return {};  // disconnected
    prev = cur;
    path.push_back(next);
  }
  if (path.front() > path.back()) std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// Checks all three comb conditions and returns either a certificate or every
/// violated condition. Condition 3 is evaluated even when condition 1 fails.
inline CombResult comb_certificate(const Config& config, const EdgeSet& b) {
  CombResult result;
  const std::size_t n = config.n();
  const EdgeSet on_boundary = b & boundary_edges(config);

  CombCertificate cert;
  bool spine_ok = false;
  if (on_boundary.empty()) {
    result.violations.push_back({1, "no edge of B lies on the hull boundary"});
  } else {
    cert.spine = detail::as_simple_path(config, on_boundary);
    if (cert.spine.empty()) {
      result.violations.push_back({1, "boundary edges of B do not form a simple path"});
    } else {
      spine_ok = true;
      cert.spine_edges = on_boundary;
    }
  }

  if (spine_ok) {
    std::vector<int> position(n, -1);
    for (std::size_t i = 0; i < cert.spine.size(); ++i) position[cert.spine[i]] = static_cast<int>(i);
    const int last = static_cast<int>(cert.spine.size()) - 1;
    EdgeSet accounted = cert.spine_edges;
    for (Vertex v = 0; v < n; ++v) {
      if (position[v] >= 0) continue;
      const EdgeSet at_v = config.incident(v) & b;
      if (at_v.size() != 1) {
        result.violations.push_back({2, "off-spine vertex " + std::to_string(v) + " has " +
                                            std::to_string(at_v.size()) + " B-edges"});
        accounted |= at_v;
        continue;
      }
      const Edge tooth = config.edge(at_v.indices().front());
      const int at = position[tooth.other(v)];
      if (at <= 0 || at >= last) {
        result.violations.push_back({2, "tooth " + edge_name(tooth) + " does not end at an interior spine vertex"});
      }
      cert.teeth.emplace(v, tooth);
      accounted |= at_v;
    }
    const EdgeSet extra = b - accounted;
    extra.for_each([&](std::size_t i) {
      result.violations.push_back({2, "edge " + edge_name(config.edge(i)) + " is neither spine nor tooth"});
    });
  }

  b.for_each([&](std::size_t i) {
    const Edge& e = config.edge(i);
    LineClearance clearance{e, 0};
    b.for_each([&](std::size_t j) {
      if (j == i) return;
      const Edge& f = config.edge(j);
      ++clearance.segments_checked;
      if (line_meets_open_segment(config.point(e.u), config.point(e.v), config.point(f.u), config.point(f.v))) {
        result.violations.push_back({3, "line through " + edge_name(e) + " crosses edge " + edge_name(f)});
      }
    });
    cert.line_clearances.push_back(clearance);
  });

  if (result.violations.empty()) result.certificate = std::move(cert);
  return result;
}

inline ClassifyResult classify(const Config& config, const EdgeSet& b) {
  ClassifyResult out;
  out.star_center = is_star(config, b);
  auto comb = comb_certificate(config, b);
  out.comb = std::move(comb.certificate);
  out.failure_reasons = std::move(comb.violations);
  return out;
}

/// For a caterpillar tree: some spine has both terminal edges on the hull
/// boundary. False for non-caterpillars; stars have no such requirement and
/// also return false unless a boundary leaf edge pair exists.
inline bool has_boundary_terminal_spine(const Config& config, const EdgeSet& tree) {
  const auto analysis = analyze_tree(config, tree);
  if (!analysis.is_caterpillar || analysis.derived_path.empty()) return false;
  const EdgeSet boundary = boundary_edges(config);
  const auto adj = adjacency(config, tree);
  auto boundary_leaf_at = [&](Vertex v) {
    return std::any_of(adj[v].begin(), adj[v].end(), [&](Vertex w) {
      return adj[w].size() == 1 && boundary.contains(config.edge_index(v, w));
    });
  };
  return boundary_leaf_at(analysis.derived_path.front()) && boundary_leaf_at(analysis.derived_path.back());
}

/// Among vertices strictly on the given side of l(a,b), the one maximizing the
/// angle at b between rays b->a and b->c. Nullopt when that side is empty.
inline std::optional<Vertex> max_angle_vertex(const Config& config, Vertex a, Vertex b, Sign side) {
  std::optional<Vertex> best;
  const Point& pb = config.point(b);
  // Angles measured from ray b->a increase in the direction given by this sign.
  const Sign turn = -side;
  for (Vertex c = 0; c < config.n(); ++c) {
    if (c == a || c == b) continue;
    if (side_of_line(config.point(a), pb, config.point(c)) != side) continue;
    if (!best || orient(pb, config.point(*best), config.point(c)) == turn) best = c;
  }
  return best;
}

}  // namespace ncst

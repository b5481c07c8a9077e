#pragma once

// A 7-point configuration whose 6-edge path B blocks every simple spanning
// tree of diameter at most 3 but misses one of diameter 4. Coordinates come
// from tools/fig7_search.cpp (seeded) and are mirrored in fixtures/fig7.json.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncst/constructions.hpp"
#include "ncst/instance.hpp"

namespace ncst {

struct CentralEdgeElimination {
  Edge edge;
  // "in_B", "common_B_neighbor", "obstruction" or empty when nothing applies.
  std::string reason;
  std::optional<std::pair<Vertex, Vertex>> obstruction;
};

/// For every edge [x,y], the first local reason it cannot be the central edge
/// of a diameter-3 tree avoiding B.
inline std::vector<CentralEdgeElimination> eliminate_central_edges(const Config& config, const EdgeSet& b_edges) {
  std::vector<CentralEdgeElimination> out;
  const auto adj = adjacency(config, b_edges);
  for (std::size_t i = 0; i < config.edge_count(); ++i) {
    const Edge e = config.edge(i);
    CentralEdgeElimination r{e, {}, std::nullopt};
    if (b_edges.contains(i)) {
      r.reason = "in_B";
    } else {
      for (Vertex k : adj[e.u]) {
        if (k != e.v && b_edges.contains(config.edge_index(e.v, k))) r.reason = "common_B_neighbor";
      }
      if (r.reason.empty()) {
        r.obstruction = central_edge_obstruction(config, b_edges, e.u, e.v);
        if (r.obstruction) r.reason = "obstruction";
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline constexpr std::array<Point, 7> kFig7Points{{
    {109, -102}, {190, -40}, {305, -9}, {396, -15}, {506, -3}, {605, -39}, {709, -115},
}};

inline constexpr std::array<std::pair<Vertex, Vertex>, 6> kFig7Path{{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}};

inline constexpr std::array<std::pair<Vertex, Vertex>, 6> kFig7Witness{{{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {2, 4}}};

inline Instance fig7_instance() {
  Instance inst;
  inst.name = "fig7";
  inst.points.assign(kFig7Points.begin(), kFig7Points.end());
  for (const auto& [u, v] : kFig7Path) inst.edges["B"].push_back(Edge::of(u, v));
  for (const auto& [u, v] : kFig7Witness) inst.edges["T"].push_back(Edge::of(u, v));
  std::sort(inst.edges["T"].begin(), inst.edges["T"].end());
  return inst;
}

}  // namespace ncst

#pragma once

// Random inputs for the tree constructions and the post-condition checks
// applied to their outputs.

#include <optional>
#include <string>
#include <vector>

#include "ncst/constructions.hpp"
#include "ncst/graph.hpp"
#include "ncst/random.hpp"

namespace ncst {

/// Post-conditions of an avoiding-tree construction; returns the failed ones.
inline std::vector<std::string> check_avoiding_tree(const Config& config, const EdgeSet& tree, const EdgeSet& b_edges,
                                                    int max_diameter) {
  std::vector<std::string> failures;
  const auto analysis = analyze_tree(config, tree);
  if (!analysis.is_spanning_tree) failures.emplace_back("spanning_tree");
  if (!is_noncrossing(config, tree)) failures.emplace_back("noncrossing");
  if (!analysis.diameter || *analysis.diameter > max_diameter) {
    failures.emplace_back("diameter_at_most_" + std::to_string(max_diameter));
  }
  if (tree.intersects(b_edges)) failures.emplace_back("disjoint_from_B");
  return failures;
}

struct PairInstance {
  EdgeSet b_edges;
  SeparatedPair pair;
};

/// Draws a, b and a line until a and b are strictly on opposite sides (half
/// the lines pass through a third vertex, so on-line neighbors occur), then
/// samples B from the edges compatible with the separation conditions.
inline PairInstance random_pair_instance(Rng& rng, const Config& config) {
  const std::size_t n = config.n();
  for (;;) {
    PairInstance inst;
    auto& pr = inst.pair;
    pr.a = rng.index(n);
    pr.b = rng.index(n - 1);
    if (pr.b >= pr.a) ++pr.b;
    const bool through_vertex = n > 2 && rng.coin();
    if (through_vertex) {
      Vertex v;
      do {
        v = rng.index(n);
      } while (v == pr.a || v == pr.b);
      pr.p = config.point(v);
    } else {
      pr.p = {rng.uniform(0, kCoordinateBound), rng.uniform(0, kCoordinateBound)};
    }
    pr.q = {rng.uniform(0, kCoordinateBound), rng.uniform(0, kCoordinateBound)};
    if (pr.p == pr.q) continue;
    auto side = [&](Vertex v) { return side_of_line(pr.p, pr.q, config.point(v)); };
    const Sign sa = side(pr.a);
    if (sa == Sign::Zero || side(pr.b) != -sa) continue;

    std::vector<bool> nb_a(n, false), nb_b(n, false);
    const std::int64_t density = rng.uniform(1, 6);  // inclusion chance density/10
    for (std::size_t i = 0; i < config.edge_count(); ++i) {
      if (rng.uniform(1, 10) > density) continue;
      const Edge& e = config.edge(i);
      if (e == Edge::of(pr.a, pr.b)) continue;
      bool ok = true;
      for (Vertex end : {pr.a, pr.b}) {
        if (!e.has(end)) continue;
        const Vertex w = e.other(end);
        const Sign sw = side(w);
        const bool at_a = end == pr.a;
        if (sw == (at_a ? sa : -sa)) ok = false;
        if (sw == Sign::Zero && (at_a ? nb_b[w] : nb_a[w])) ok = false;
      }
      if (!ok) continue;
      if (e.has(pr.a)) nb_a[e.other(pr.a)] = true;
      if (e.has(pr.b)) nb_b[e.other(pr.b)] = true;
      inst.b_edges.insert(i);
    }
    return inst;
  }
}

struct LeafInstance {
  EdgeSet b_edges;
  Vertex b = 0;
  Vertex a = 0;
};

/// Hull vertex b with a free boundary edge [a,b], at least two B-edges at b,
/// and at most n - 3 B-edges away from b. Requires n >= 4.
inline LeafInstance random_leaf_instance(Rng& rng, const Config& config) {
  const std::size_t n = config.n();
  const auto& hull = config.hull();
  const std::size_t h = rng.index(hull.size());
  LeafInstance inst;
  inst.b = hull[h];
  inst.a = rng.coin() ? hull[(h + 1) % hull.size()] : hull[(h + hull.size() - 1) % hull.size()];

  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v) {
    if (v != inst.a && v != inst.b) others.push_back(v);
  }
  rng.shuffle(others);
  const std::size_t at_b = 2 + rng.index(others.size() - 1);
  for (std::size_t i = 0; i < at_b; ++i) inst.b_edges.insert(config.edge_index(inst.b, others[i]));

  std::vector<std::size_t> away;
  for (std::size_t i = 0; i < config.edge_count(); ++i) {
    if (!config.edge(i).has(inst.b)) away.push_back(i);
  }
  rng.shuffle(away);
  const std::size_t count = rng.index(n - 2);  // 0 .. n-3
  for (std::size_t i = 0; i < count; ++i) inst.b_edges.insert(away[i]);
  return inst;
}

}  // namespace ncst

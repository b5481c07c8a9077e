// Seeded search for the diameter-4 counterexample fixture.
//
// Candidates: a1..a7 on a concave-down arc with jitter, a4 pushed below the
// arc. B is the path a1-a2-...-a7. A candidate is accepted when B blocks every
// SST of diameter <= 3 (enumeration oracle), some SST of diameter 4 avoids B,
// B is neither star nor comb, and every edge is ruled out as a central edge by
// a local reason. Prints the accepted instance (with witness "T") as JSON.
//
//   fig7_search [seed]

#include <cstdlib>
#include <iostream>
#include <string>

#include "ncst/classify.hpp"
#include "ncst/enumeration.hpp"
#include "ncst/fig7.hpp"
#include "ncst/random.hpp"

int main(int argc, char** argv) {
  using namespace ncst;
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  Rng rng(seed);
  for (int attempt = 1; attempt <= 100000; ++attempt) {
    std::vector<Point> pts;
    for (std::int64_t k = 1; k <= 7; ++k) {
      const std::int64_t dx = k - 4;
      pts.push_back({100 * k + rng.uniform(-15, 15), -12 * dx * dx + rng.uniform(-15, 15)});
    }
    pts[3].y -= rng.uniform(0, 120);
    if (assert_general_position(pts)) continue;
    const Config c(pts);
    EdgeSet b;
    for (Vertex v = 0; v + 1 < 7; ++v) b.insert(c.edge_index(v, v + 1));

    if (!blocks(c, b, Family::trees_diam_at_most(3)).blocks) continue;
    const auto t4 = blocks(c, b, Family::trees_diam_at_most(4));
    if (t4.blocks) continue;
    if (classify(c, b).is_star_or_comb()) continue;
    bool all = true;
    for (const auto& r : eliminate_central_edges(c, b)) all = all && !r.reason.empty();
    if (!all) continue;

    std::cerr << "accepted after " << attempt << " attempts\n";
    std::cout << emit_instance(make_instance(c, {{"B", b}, {"T", *t4.witness}}, "fig7", seed));
    return 0;
  }
  std::cerr << "no candidate accepted\n";
  return 1;
}

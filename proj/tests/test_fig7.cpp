#include <gtest/gtest.h>

#include "ncst/classify.hpp"
#include "ncst/enumeration.hpp"
#include "ncst/fig7.hpp"
#include "ncst/svg.hpp"
#include "oracle.hpp"

using namespace ncst;

namespace {

std::vector<oracle::Pt> oracle_points() {
  std::vector<oracle::Pt> pts;
  for (const auto& p : kFig7Points) pts.push_back({p.x, p.y});
  return pts;
}

oracle::EdgeList oracle_edges(const std::vector<Edge>& es) {
  oracle::EdgeList out;
  for (const auto& e : es) out.push_back({int(e.u), int(e.v)});
  return out;
}

}  // namespace

TEST(Fig7, FileMatchesEmbeddedConstants) {
  EXPECT_EQ(load_instance(NCST_FIXTURE_DIR "/fig7.json").points, fig7_instance().points);
  EXPECT_EQ(load_instance(NCST_FIXTURE_DIR "/fig7.json").edges, fig7_instance().edges);
}

TEST(Fig7, OracleConfirmsCounterexample) {
  const auto inst = fig7_instance();
  const auto pts = oracle_points();
  const auto b = oracle_edges(inst.edges.at("B"));
  const auto t = oracle_edges(inst.edges.at("T"));

  for (const auto& tree : oracle::brute_ssts(pts, 3)) EXPECT_FALSE(oracle::disjoint(tree, b));
  const auto t4 = oracle::brute_ssts(pts, 4);
  EXPECT_EQ(t4.count(t), 1U);
  EXPECT_EQ(oracle::diameter(7, t), 4);
  EXPECT_TRUE(oracle::disjoint(t, b));
}

TEST(Fig7, LibraryAgrees) {
  const auto inst = fig7_instance();
  const Config c = to_config(inst);
  const EdgeSet b = edge_set(c, inst, "B");
  EXPECT_TRUE(blocks(c, b, Family::trees_diam_at_most(3)).blocks);
  const auto r4 = blocks(c, b, Family::trees_diam_at_most(4));
  EXPECT_FALSE(r4.blocks);
  ASSERT_TRUE(r4.witness);
  EXPECT_EQ(*r4.witness, edge_set(c, inst, "T"));
  const auto cls = classify(c, b);
  EXPECT_FALSE(cls.is_star());
  EXPECT_FALSE(cls.is_comb());
  EXPECT_FALSE(cls.failure_reasons.empty());
  // a4 lies strictly inside the hull, so B is not a boundary path.
  EXPECT_FALSE(c.on_hull(3));
}

TEST(Fig7, EveryCentralEdgeEliminated) {
  const Config c = to_config(fig7_instance());
  const EdgeSet b = edge_set(c, fig7_instance(), "B");
  for (const auto& r : eliminate_central_edges(c, b)) {
    const auto gap = r.edge.v - r.edge.u;
    if (gap == 1) EXPECT_EQ(r.reason, "in_B");
    else if (gap == 2) EXPECT_EQ(r.reason, "common_B_neighbor");
    else EXPECT_EQ(r.reason, "obstruction") << edge_name(r.edge);
  }
}

TEST(Fig7, RendersSolidPathAndDashedWitness) {
  const std::string svg = render_svg(fig7_instance(), {"B", "T"});
  auto lines_in = [&](const std::string& label) {
    const auto start = svg.find("data-label=\"" + label + "\"");
    const auto end = svg.find("</g>", start);
    std::size_t k = 0;
    for (auto pos = svg.find("<line", start); pos < end; pos = svg.find("<line", pos + 1)) ++k;
    return k;
  };
  EXPECT_EQ(lines_in("B"), 6U);
  EXPECT_EQ(lines_in("T"), 6U);
  // Only the witness group is dashed.
  EXPECT_GT(svg.find("stroke-dasharray"), svg.find("data-label=\"T\""));
  EXPECT_EQ(svg.rfind("stroke-dasharray"), svg.find("stroke-dasharray"));
  std::size_t circles = 0;
  for (auto pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
  EXPECT_EQ(circles, 7U);
}

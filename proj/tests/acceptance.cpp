// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ncst/enumeration.hpp"
#include "ncst/random.hpp"
#include "ncst/scenarios.hpp"
#include "oracle.hpp"

using namespace ncst;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome scenario_gate(const std::string& name, double budget_s, ScenarioParams params = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_scenario(name, params);
  const double s = seconds_since(t0);
  std::string first;
  if (!r.passed()) first = "; first failure: " + r.failures()[0]["assertion"].get<std::string>() + " " +
                           r.failures()[0]["detail"].get<std::string>();
  return {r.passed() && s < budget_s,
          fmt("%s: %zu assertions, %zu failed, %.2fs (budget %.0fs)", name.c_str(), r.total(), r.failed(), s,
              budget_s) +
              first};
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_scenario("prop_size");
  const double s = seconds_since(t0);
  bool sizes = r.instances().size() == 31;
  for (const auto& inst : r.instances()) {
    sizes = sizes && inst["minimum_blocker_size"].get<std::size_t>() + 1 == inst["n"].get<std::size_t>();
  }
  return {r.passed() && sizes && s < 300,
          fmt("31 configs, min T<=3 blocker size n-1 on all: %s, %.2fs", sizes ? "yes" : "no", s)};
}

Outcome criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_scenario("theorem1");
  const double s = seconds_since(t0);
  std::size_t compared = 0, discrepancies = 0, sets = 0;
  for (const auto& inst : r.instances()) {
    if (inst.contains("skipped")) continue;
    ++compared;
    discrepancies += inst["discrepancies"].get<std::size_t>();
    sets += inst["minimum_blockers"].get<std::size_t>();
  }
  return {r.passed() && compared == 30 && discrepancies == 0 && s < 600,
          fmt("%zu configs with n<=7, %zu minimum SST blockers, %zu discrepancies, %.2fs", compared, sets,
              discrepancies, s)};
}

Outcome criterion3() {
  const auto a = scenario_gate("theorem2", 300);
  const auto b = scenario_gate("theorem3", 300);
  return {a.pass && b.pass, a.detail + " | " + b.detail};
}

Outcome criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  ScenarioParams p;
  p.trials = 1000;
  p.max_n = 12;
  const auto r = run_scenario("construct_fuzz", p);
  const double s = seconds_since(t0);
  std::size_t trials = 0, passed = 0;
  for (const auto& t : r.instances()) {
    if (t["construction"] == "perles_sst3") {
      trials = t["trials"].get<std::size_t>();
      passed = t["passed"].get<std::size_t>();
    }
  }
  return {trials == 1000 && passed == trials && r.passed() && s < 120,
          fmt("perles %zu/%zu, all constructions %zu assertions %zu failed, %.2fs", passed, trials, r.total(),
              r.failed(), s)};
}

Outcome criterion6() {
  const auto a = scenario_gate("fig7", 1);
  const auto b = run_scenario("fig7").to_json().dump();
  const bool stable = b == run_scenario("fig7").to_json().dump();
  return {a.pass && stable, a.detail + (stable ? ", byte-stable report" : ", report differs between runs")};
}

Outcome criterion7() {
  const std::vector<std::vector<Point>> convex{
      {{0, 0}, {6, 0}, {3, 6}},
      {{0, 0}, {6, 0}, {6, 6}, {0, 6}},
      {{0, 0}, {4, 0}, {5, 4}, {2, 6}, {-1, 4}},
  };
  const std::size_t expected[] = {3, 12, 55};
  std::string detail;
  bool ok = true;
  for (std::size_t i = 0; i < convex.size(); ++i) {
    const auto got = enumerate_ssts(Config(convex[i])).size();
    const auto formula = oracle::convex_sst_count(convex[i].size());
    ok = ok && got == expected[i] && got == formula;
    detail += fmt("n=%zu: %zu (formula %llu) ", convex[i].size(), got, static_cast<unsigned long long>(formula));
  }
  const auto tri = enumerate_ssts(Config({{0, 0}, {6, 0}, {3, 6}, {3, 2}})).size();
  ok = ok && tri == 16;
  detail += fmt("triangle+interior: %zu", tri);
  return {ok, detail};
}

Outcome criterion8() {
  Rng rng(8);
  std::size_t trials = 0, violations = 0;
  auto pt = [&](std::int64_t bound) { return Point{rng.uniform(-bound, bound), rng.uniform(-bound, bound)}; };
  for (int i = 0; i < 20000; ++i, ++trials) {
    const Point p = pt(kCoordinateBound), q = pt(kCoordinateBound), r = pt(kCoordinateBound);
    const Sign s = orient(p, q, r);
    if (s != orient(q, r, p) || s != orient(r, p, q) || s != -orient(q, p, r)) ++violations;
    if (to_int(s) != oracle::sgn(oracle::det({p.x, p.y}, {q.x, q.y}, {r.x, r.y}))) ++violations;
  }
  for (int i = 0; i < 20000; ++i, ++trials) {
    const Point a = pt(25), b = pt(25), c = pt(25), d = pt(25);
    const bool x = segments_cross(a, b, c, d);
    if (x != segments_cross(c, d, a, b) || x != segments_cross(b, a, d, c)) ++violations;
    if (!assert_general_position(std::vector<Point>{a, b, c, d}) &&
        x != oracle::proper_cross({a.x, a.y}, {b.x, b.y}, {c.x, c.y}, {d.x, d.y})) {
      ++violations;
    }
  }
  std::size_t hull_points = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto pts = random_general_position(rng, 3 + rng.index(30), 10000);
    const auto hull = convex_hull_ccw(pts);
    for (const auto& p : pts) {
      ++hull_points;
      for (std::size_t k = 0; k < hull.size(); ++k) {
        if (orient(pts[hull[k]], pts[hull[(k + 1) % hull.size()]], p) == Sign::Negative) ++violations;
      }
    }
  }
  trials += hull_points;
  return {violations == 0 && trials >= 10000, fmt("%zu checks, %zu violations", trials, violations)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"minimum T<=3 blocker size is n-1", criterion1},
      {"minimum SST blockers = size n-1 stars and combs", criterion2},
      {"T<=4 blockers are stars/combs; convex T<=3 blockers are combs", criterion3},
      {"stars and combs meet every simple spanning subgraph", [] { return scenario_gate("theorem4", 300); }},
      {"diameter-3 construction on 1000 random instances", criterion5},
      {"diameter-4 counterexample fixture", criterion6},
      {"SST counts 3, 12, 55 and 16", criterion7},
      {"predicate axioms on random inputs", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("criterion %zu [PRIMARY] %-62s %s  (%s)\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#pragma once

// Verification scenarios. Each one runs a batch of instances through the
// library, checks the stated property, and produces a JSON report. Failures
// carry the offending instance so they can be replayed with `verify -i`.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncst/classify.hpp"
#include "ncst/constructions.hpp"
#include "ncst/enumeration.hpp"
#include "ncst/fig7.hpp"
#include "ncst/fuzz.hpp"
#include "ncst/instance.hpp"
#include "ncst/random.hpp"

namespace ncst {

using Json = nlohmann::ordered_json;

inline const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"prop_size", "theorem1", "theorem2", "theorem3",
                                              "theorem4",  "fig7",     "construct_fuzz"};
  return names;
}

struct ScenarioParams {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t max_n = 12;
  bool force = false;
  bool timing = false;
  // When set, the scenario runs on this instance alone instead of its suite.
  std::optional<Instance> instance;
};

class ScenarioReport {
 public:
  explicit ScenarioReport(std::string scenario) : scenario_(std::move(scenario)) {}

  /// Records one assertion; on failure the payload instance is attached.
  bool check(bool ok, const std::string& instance_id, const std::string& assertion, const std::string& detail,
             const Instance& payload) {
    ++total_;
    if (!ok) {
      ++failed_;
      Json f;
      f["instance_id"] = instance_id;
      f["assertion"] = assertion;
      f["detail"] = detail;
      f["instance"] = instance_json(payload);
      failures_.push_back(std::move(f));
    }
    return ok;
  }

  void add_instance(Json record) { instances_.push_back(std::move(record)); }
  void set_parameters(Json p) { parameters_ = std::move(p); }
  void set_timing_ms(double ms) { timing_ms_ = ms; }

  bool passed() const { return failed_ == 0; }
  std::size_t total() const { return total_; }
  std::size_t failed() const { return failed_; }
  const Json& failures() const { return failures_; }
  const Json& instances() const { return instances_; }

  Json to_json() const {
    Json j;
    j["scenario"] = scenario_;
    j["parameters"] = parameters_;
    j["passed"] = passed();
    j["assertions"] = {{"total", total_}, {"failed", failed_}};
    j["instances"] = instances_;
    j["failures"] = failures_;
    if (timing_ms_) j["timing_ms"] = *timing_ms_;
    return j;
  }

 private:
  std::string scenario_;
  Json parameters_ = Json::object();
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  Json instances_ = Json::array();
  Json failures_ = Json::array();
  std::optional<double> timing_ms_;
};

struct SuiteEntry {
  std::string id;
  bool convex = false;
  Instance instance;
  std::string generation_error;
};

/// Convex n = 3..8 followed by 25 random general-position configurations with
/// n = 4..7, all derived from `seed`.
inline std::vector<SuiteEntry> default_suite(std::uint64_t seed) {
  std::vector<SuiteEntry> suite;
  for (std::size_t n = 3; n <= 8; ++n) {
    const std::uint64_t s = mix_seed(seed, n);
    Rng rng(s);
    Instance inst;
    inst.name = "convex-" + std::to_string(n);
    inst.seed = s;
    std::string error;
    try {
      inst.points = random_convex_position(rng, n);
    } catch (const std::exception& e) {
      error = e.what();
    }
    suite.push_back({*inst.name, true, std::move(inst), error});
  }
  for (std::size_t i = 0; i < 25; ++i) {
    const std::uint64_t s = mix_seed(seed, 1000 + i);
    Rng rng(s);
    Instance inst;
    inst.name = "random-" + std::to_string(i);
    inst.seed = s;
    std::string error;
    try {
      inst.points = random_general_position(rng, 4 + i % 4);
    } catch (const std::exception& e) {
      error = e.what();
    }
    suite.push_back({*inst.name, false, std::move(inst), error});
  }
  return suite;
}

namespace detail {

inline Json edges_json(const Config& c, const EdgeSet& s) {
  Json arr = Json::array();
  for (const auto& e : c.edges_of(s)) arr.push_back({e.u, e.v});
  return arr;
}

inline Instance with_set(const Instance& base, const Config& c, const std::string& label, const EdgeSet& s) {
  Instance out = base;
  out.edges[label] = c.edges_of(s);
  return out;
}

inline std::vector<SuiteEntry> suite_for(const ScenarioParams& params) {
  if (!params.instance) return default_suite(params.seed);
  const Config c = to_config(*params.instance);
  return {{params.instance->name.value_or("input"), c.is_convex_position(), *params.instance, {}}};
}

inline std::string describe(const Config& c, const EdgeSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : c.edges_of(s)) {
    out += (first ? "" : ",") + edge_name(e);
    first = false;
  }
  return out + "}";
}

/// All edge sets with exactly k edges (edge count <= 64), in mask order.
inline void for_each_k_subset(const Config& c, std::size_t k, const std::function<void(const EdgeSet&)>& visit) {
  const std::size_t m = c.edge_count();
  if (k > m || m > 64) return;
  if (k == 0) {
    visit(EdgeSet{});
    return;
  }
  std::uint64_t mask = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = m == 64 ? 0 : std::uint64_t{1} << m;
  while (true) {
    visit(EdgeSet::from_low_word(mask));
    // Gosper's hack: next mask with the same popcount.
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    if (ripple == 0) break;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
    if (limit != 0 && mask >= limit) break;
  }
}

inline std::vector<EdgeSet> sorted(std::vector<EdgeSet> v) {
  std::sort(v.begin(), v.end(), CanonicalLess{});
  return v;
}

inline bool suite_instance_ok(ScenarioReport& report, const SuiteEntry& entry, std::optional<Config>& config) {
  if (!entry.generation_error.empty()) {
    return report.check(false, entry.id, "instance_generation", entry.generation_error, entry.instance);
  }
  try {
    config.emplace(to_config(entry.instance));
    return report.check(true, entry.id, "instance_generation", "", entry.instance);
  } catch (const std::exception& e) {
    return report.check(false, entry.id, "instance_generation", e.what(), entry.instance);
  }
}

inline Json base_record(const SuiteEntry& entry, const Config& c) {
  Json r;
  r["id"] = entry.id;
  if (entry.instance.seed) r["seed"] = *entry.instance.seed;
  r["n"] = c.n();
  r["convex"] = entry.convex;
  return r;
}

inline void run_prop_size(const ScenarioParams& params, ScenarioReport& report) {
  for (const auto& entry : suite_for(params)) {
    std::optional<Config> c;
    if (!suite_instance_ok(report, entry, c)) continue;
    const auto mb = minimum_blockers(*c, Family::trees_diam_at_most(3), params.force);
    Json r = base_record(entry, *c);
    r["minimum_blocker_size"] = mb.size;
    r["minimum_blocker_count"] = mb.blockers.size();
    r["passed"] = report.check(mb.size + 1 == c->n(), entry.id, "size_is_n_minus_1",
                               "minimum T<=3 blocker size " + std::to_string(mb.size) + ", n = " + std::to_string(c->n()),
                               entry.instance);
    report.add_instance(std::move(r));
  }
}

inline void run_theorem1(const ScenarioParams& params, ScenarioReport& report) {
  for (const auto& entry : suite_for(params)) {
    std::optional<Config> c;
    if (!suite_instance_ok(report, entry, c)) continue;
    if (c->n() > 7 && !params.force) {
      Json r = base_record(entry, *c);
      r["skipped"] = "n > 7; pass --force to run";
      report.add_instance(std::move(r));
      continue;
    }
    const auto mb = minimum_blockers(*c, Family::sst(), params.force);
    std::vector<EdgeSet> classified;
    for_each_k_subset(*c, c->n() - 1, [&](const EdgeSet& s) {
      if (classify(*c, s).is_star_or_comb()) classified.push_back(s);
    });
    const auto found = sorted(mb.blockers);
    classified = sorted(std::move(classified));

    std::size_t missing = 0, extra = 0, unclassified = 0;
    for (const auto& s : found) {
      if (!classify(*c, s).is_star_or_comb()) {
        ++unclassified;
        report.check(false, entry.id, "minimum_blocker_is_star_or_comb", describe(*c, s),
                     with_set(entry.instance, *c, "B", s));
      }
      if (!std::binary_search(classified.begin(), classified.end(), s, CanonicalLess{})) {
        ++extra;
        report.check(false, entry.id, "minimum_blocker_in_classified_set", describe(*c, s),
                     with_set(entry.instance, *c, "B", s));
      }
    }
    for (const auto& s : classified) {
      if (!std::binary_search(found.begin(), found.end(), s, CanonicalLess{})) {
        ++missing;
        report.check(false, entry.id, "classified_set_is_minimum_blocker", describe(*c, s),
                     with_set(entry.instance, *c, "B", s));
      }
    }
    const bool ok = missing == 0 && extra == 0 && unclassified == 0;
    if (ok) report.check(true, entry.id, "sets_equal", "", entry.instance);

    Json r = base_record(entry, *c);
    r["minimum_blocker_size"] = mb.size;
    r["minimum_blockers"] = found.size();
    r["classified_star_or_comb"] = classified.size();
    r["discrepancies"] = missing + extra + unclassified;
    r["passed"] = ok;
    report.add_instance(std::move(r));
  }
}

inline void run_theorem2(const ScenarioParams& params, ScenarioReport& report) {
  for (const auto& entry : suite_for(params)) {
    std::optional<Config> c;
    if (!suite_instance_ok(report, entry, c)) continue;
    const auto mb = minimum_blockers(*c, Family::trees_diam_at_most(4), params.force);
    std::size_t bad = 0;
    for (const auto& s : mb.blockers) {
      const auto cls = classify(*c, s);
      std::string why;
      for (const auto& f : cls.failure_reasons) why += (why.empty() ? "" : "; ") + f.detail;
      if (!report.check(cls.is_star_or_comb(), entry.id, "t4_blocker_is_star_or_comb", describe(*c, s) + ": " + why,
                        with_set(entry.instance, *c, "B", s))) {
        ++bad;
      }
    }
    Json r = base_record(entry, *c);
    r["minimum_blocker_size"] = mb.size;
    r["minimum_blockers"] = mb.blockers.size();
    r["exceptions"] = bad;
    r["passed"] = bad == 0;
    report.add_instance(std::move(r));
  }
}

inline void run_theorem3(const ScenarioParams& params, ScenarioReport& report) {
  for (const auto& entry : suite_for(params)) {
    std::optional<Config> c;
    if (!suite_instance_ok(report, entry, c)) continue;
    if (!entry.convex) {
      if (params.instance) report.add_instance({{"id", entry.id}, {"skipped", "not in convex position"}});
      continue;
    }
    const auto mb = minimum_blockers(*c, Family::trees_diam_at_most(3), params.force);
    std::size_t bad = 0;
    for (const auto& s : mb.blockers) {
      const auto comb = comb_certificate(*c, s);
      std::string why;
      for (const auto& v : comb.violations) why += (why.empty() ? "" : "; ") + v.detail;
      if (!report.check(comb.is_comb(), entry.id, "t3_blocker_is_comb", describe(*c, s) + ": " + why,
                        with_set(entry.instance, *c, "B", s))) {
        ++bad;
      }
    }
    Json r = base_record(entry, *c);
    r["minimum_blocker_size"] = mb.size;
    r["minimum_blockers"] = mb.blockers.size();
    r["exceptions"] = bad;
    r["passed"] = bad == 0;
    report.add_instance(std::move(r));
  }
}

/// Every star or comb met by the three blocker scenarios must also
/// meet every simple spanning subgraph.
inline void run_theorem4(const ScenarioParams& params, ScenarioReport& report) {
  for (const auto& entry : suite_for(params)) {
    std::optional<Config> c;
    if (!suite_instance_ok(report, entry, c)) continue;
    std::vector<EdgeSet> seen;
    auto collect = [&](const std::vector<EdgeSet>& v) {
      for (const auto& s : v) {
        if (classify(*c, s).is_star_or_comb()) seen.push_back(s);
      }
    };
    if (c->n() <= 7 || params.force) collect(minimum_blockers(*c, Family::sst(), params.force).blockers);
    collect(minimum_blockers(*c, Family::trees_diam_at_most(4), params.force).blockers);
    if (entry.convex) collect(minimum_blockers(*c, Family::trees_diam_at_most(3), params.force).blockers);
    seen = sorted(std::move(seen));
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

    std::size_t bad = 0;
    for (const auto& s : seen) {
      const auto cover = has_noncrossing_edge_cover(*c, complement(*c, s));
      if (!report.check(!cover, entry.id, "complement_has_no_noncrossing_cover",
                        cover ? describe(*c, s) + " misses cover " + describe(*c, *cover) : "",
                        cover ? with_set(with_set(entry.instance, *c, "B", s), *c, "H", *cover) : entry.instance)) {
        ++bad;
      }
    }
    Json r = base_record(entry, *c);
    r["stars_and_combs"] = seen.size();
    r["exceptions"] = bad;
    r["passed"] = bad == 0;
    report.add_instance(std::move(r));
  }
}

inline void run_fig7(const ScenarioParams& params, ScenarioReport& report) {
  const Instance inst = params.instance ? *params.instance : fig7_instance();
  const std::string id = inst.name.value_or("fig7");
  std::optional<Config> c;
  if (!suite_instance_ok(report, {id, false, inst, {}}, c)) return;
  if (!report.check(inst.edges.count("B") && inst.edges.count("T"), id, "fixture_has_B_and_T", "", inst)) return;
  const EdgeSet b = edge_set(*c, inst, "B");
  const EdgeSet t = edge_set(*c, inst, "T");

  report.check(b.size() == 6 && detail::as_simple_path(*c, b).size() == 7, id, "B_is_6_edge_path", describe(*c, b),
               inst);
  report.check(blocks(*c, b, Family::trees_diam_at_most(3), params.force).blocks, id, "blocks_t3", "", inst);
  const auto r4 = blocks(*c, b, Family::trees_diam_at_most(4), params.force);
  report.check(!r4.blocks, id, "does_not_block_t4", "", inst);
  const auto failures = check_avoiding_tree(*c, t, b, 4);
  std::string why;
  for (const auto& f : failures) why += (why.empty() ? "" : ",") + f;
  report.check(failures.empty(), id, "stored_witness_avoids_B", why, inst);
  const auto diam = analyze_tree(*c, t).diameter;
  report.check(diam == 4, id, "stored_witness_diameter_4", diam ? std::to_string(*diam) : "none", inst);
  const auto cls = classify(*c, b);
  report.check(!cls.is_star() && !cls.is_comb(), id, "classified_neither", "", inst);

  Json elim = Json::object();
  std::size_t open = 0;
  for (const auto& e : eliminate_central_edges(*c, b)) {
    elim[edge_name(e.edge)] = e.reason.empty() ? "none" : e.reason;
    if (!report.check(!e.reason.empty(), id, "central_edge_eliminated", edge_name(e.edge), inst)) ++open;
  }

  Json r;
  r["id"] = id;
  r["n"] = c->n();
  r["B"] = edges_json(*c, b);
  r["witness"] = edges_json(*c, t);
  if (r4.witness) r["found_witness"] = edges_json(*c, *r4.witness);
  r["central_edge_eliminations"] = std::move(elim);
  r["passed"] = report.passed();
  report.add_instance(std::move(r));
}

inline void run_construct_fuzz(const ScenarioParams& params, ScenarioReport& report) {
  struct Tally {
    std::size_t trials = 0, passed = 0;
  };
  Tally perles, pair, leaf;
  const std::size_t max_n = std::clamp<std::size_t>(params.max_n, 3, kMaxVertices);

  auto record = [&](Tally& tally, const std::vector<std::string>& failures, const std::string& id,
                    const std::string& what, const Instance& payload) {
    ++tally.trials;
    std::string why;
    for (const auto& f : failures) why += (why.empty() ? "" : ",") + f;
    if (report.check(failures.empty(), id, what, why, payload)) ++tally.passed;
  };

  for (std::size_t trial = 0; trial < params.trials; ++trial) {
    const std::uint64_t s = mix_seed(params.seed, trial);
    Rng rng(s);
    const std::size_t n = 3 + rng.index(max_n - 2);
    const Config c(random_general_position(rng, n));
    Instance base = make_instance(c, {}, "construct_fuzz-" + std::to_string(trial), s);

    {
      const EdgeSet b = random_edge_subset(rng, c, rng.index(n - 1));
      const std::string id = *base.name + "/perles";
      Instance payload = with_set(base, c, "B", b);
      std::vector<std::string> failures;
      try {
        const EdgeSet t = perles_sst3(c, b);
        payload = with_set(payload, c, "T", t);
        failures = check_avoiding_tree(c, t, b, 3);
        if (n <= 8) {
          const auto all = enumerate_ssts(c, 3);
          if (!std::binary_search(all.begin(), all.end(), t, CanonicalLess{})) failures.emplace_back("enumerated");
        }
      } catch (const std::exception& e) {
        failures.emplace_back(std::string("threw: ") + e.what());
      }
      record(perles, failures, id, "perles_sst3", payload);
    }
    {
      const auto inst = random_pair_instance(rng, c);
      const std::string id = *base.name + "/pair a=" + std::to_string(inst.pair.a) + " b=" +
                             std::to_string(inst.pair.b) + " p=(" + std::to_string(inst.pair.p.x) + "," +
                             std::to_string(inst.pair.p.y) + ") q=(" + std::to_string(inst.pair.q.x) + "," +
                             std::to_string(inst.pair.q.y) + ")";
      Instance payload = with_set(base, c, "B", inst.b_edges);
      std::vector<std::string> failures;
      try {
        const EdgeSet t = separated_pair_sst3(c, inst.b_edges, inst.pair);
        payload = with_set(payload, c, "T", t);
        failures = check_avoiding_tree(c, t, inst.b_edges, 3);
      } catch (const std::exception& e) {
        failures.emplace_back(std::string("threw: ") + e.what());
      }
      record(pair, failures, id, "separated_pair_sst3", payload);
    }
    if (n >= 4) {
      const auto inst = random_leaf_instance(rng, c);
      const std::string id =
          *base.name + "/leaf4 b=" + std::to_string(inst.b) + " a=" + std::to_string(inst.a);
      Instance payload = with_set(base, c, "B", inst.b_edges);
      std::vector<std::string> failures;
      try {
        const EdgeSet t = boundary_leaf_sst4(c, inst.b_edges, inst.b, inst.a);
        payload = with_set(payload, c, "T", t);
        failures = check_avoiding_tree(c, t, inst.b_edges, 4);
      } catch (const std::exception& e) {
        failures.emplace_back(std::string("threw: ") + e.what());
      }
      record(leaf, failures, id, "boundary_leaf_sst4", payload);
    }
  }
  for (const auto& [name, t] : {std::pair{"perles_sst3", perles}, {"separated_pair_sst3", pair},
                                {"boundary_leaf_sst4", leaf}}) {
    report.add_instance({{"construction", name}, {"trials", t.trials}, {"passed", t.passed}});
  }
}

}  // namespace detail

class UnknownScenario : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline ScenarioReport run_scenario(const std::string& name, const ScenarioParams& params = {}) {
  ScenarioReport report(name);
  Json p;
  p["seed"] = params.seed;
  if (name == "construct_fuzz") {
    p["trials"] = params.trials;
    p["max_n"] = params.max_n;
  }
  if (params.instance) p["instance"] = params.instance->name.value_or("input");
  if (params.force) p["force"] = true;
  report.set_parameters(std::move(p));

  const auto start = std::chrono::steady_clock::now();
  if (name == "prop_size") detail::run_prop_size(params, report);
  else if (name == "theorem1") detail::run_theorem1(params, report);
  else if (name == "theorem2") detail::run_theorem2(params, report);
  else if (name == "theorem3") detail::run_theorem3(params, report);
  else if (name == "theorem4") detail::run_theorem4(params, report);
  else if (name == "fig7") detail::run_fig7(params, report);
  else if (name == "construct_fuzz") detail::run_construct_fuzz(params, report);
  else throw UnknownScenario("unknown scenario \"" + name + "\"");
  if (params.timing) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    report.set_timing_ms(ms.count());
  }
  return report;
}

}  // namespace ncst

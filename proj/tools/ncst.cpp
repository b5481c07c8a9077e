// Command-line front end.
//
//   ncst classify    -i inst.json [--set B]
//   ncst enumerate   -i inst.json [--family t3|t4|sst|sss] [--force]
//   ncst blocks      -i inst.json --family F [--set B] [--force]
//   ncst minblockers -i inst.json --family F [--force]
//   ncst construct   perles|pair|leaf4 -i inst.json [--set B] [...]
//   ncst verify      <scenario> [--seed S] [--trials N] [--max-n N] [-i inst.json] [--timing]
//   ncst render      -i inst.json -o out.svg [--sets B,T]
//
// JSON goes to stdout (or -o). Exit codes: 0 ok, 1 assertion failure, 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncst/classify.hpp"
#include "ncst/constructions.hpp"
#include "ncst/enumeration.hpp"
#include "ncst/fuzz.hpp"
#include "ncst/instance.hpp"
#include "ncst/scenarios.hpp"
#include "ncst/svg.hpp"

namespace {

using namespace ncst;

constexpr int kOk = 0;
constexpr int kAssertionFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string family = "t3";
  std::string set = "B";
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t max_n = 12;
  bool force = false;
  bool timing = false;
  std::string scenario;
  std::vector<std::string> sets{"B", "T"};
  // construct pair / leaf4
  std::optional<std::size_t> a, b;
  std::string p, q;
};

Point parse_point(const std::string& s, const char* what) {
  std::istringstream in(s);
  std::int64_t x = 0, y = 0;
  char comma = 0;
  if (!(in >> x >> comma >> y) || comma != ',' || !in.eof()) {
    throw InputError(std::string(what) + ": expected x,y, got \"" + s + "\"");
  }
  return {x, y};
}

void write_text(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw InputError(o.output + ": cannot write");
  out << text;
}

void write_json(const Options& o, const Json& j) { write_text(o, j.dump(2) + "\n"); }

Instance need_instance(const Options& o) {
  if (o.input.empty()) throw InputError("missing -i <instance.json>");
  return load_instance(o.input);
}

EdgeSet need_set(const Config& c, const Instance& inst, const std::string& label) {
  try {
    return edge_set(c, inst, label);
  } catch (const InstanceError& e) {
    throw InputError(e.what());
  }
}

Json comb_json(const Config& c, const CombCertificate& cert) {
  Json j;
  j["spine"] = cert.spine;
  j["spine_edges"] = detail::edges_json(c, cert.spine_edges);
  Json teeth = Json::object();
  for (const auto& [v, e] : cert.teeth) teeth[std::to_string(v)] = {e.u, e.v};
  j["teeth"] = std::move(teeth);
  Json clear = Json::array();
  for (const auto& lc : cert.line_clearances) {
    clear.push_back({{"edge", {lc.edge.u, lc.edge.v}}, {"segments_checked", lc.segments_checked}});
  }
  j["line_clearances"] = std::move(clear);
  return j;
}

Json classify_json(const Config& c, const EdgeSet& s) {
  const auto r = classify(c, s);
  Json j;
  j["edges"] = detail::edges_json(c, s);
  j["is_star"] = r.is_star();
  if (r.star_center) j["star_center"] = *r.star_center;
  j["is_comb"] = r.is_comb();
  if (r.comb) j["comb"] = comb_json(c, *r.comb);
  Json fails = Json::array();
  for (const auto& v : r.failure_reasons) fails.push_back({{"condition", v.condition}, {"detail", v.detail}});
  j["comb_violations"] = std::move(fails);
  return j;
}

int cmd_classify(const Options& o) {
  const auto inst = need_instance(o);
  const Config c = to_config(inst);
  write_json(o, classify_json(c, need_set(c, inst, o.set)));
  return kOk;
}

int cmd_enumerate(const Options& o) {
  const auto inst = need_instance(o);
  const Config c = to_config(inst);
  const Family f = Family::parse(o.family);
  const auto members = family_members(c, f, o.force);
  Json j;
  j["family"] = f.name();
  j["n"] = c.n();
  j["count"] = members.size();
  Json list = Json::array();
  for (const auto& m : members) list.push_back(detail::edges_json(c, m));
  j["members"] = std::move(list);
  write_json(o, j);
  return kOk;
}

int cmd_blocks(const Options& o) {
  const auto inst = need_instance(o);
  const Config c = to_config(inst);
  const Family f = Family::parse(o.family);
  const auto r = blocks(c, need_set(c, inst, o.set), f, o.force);
  Json j;
  j["family"] = f.name();
  j["blocks"] = r.blocks;
  if (r.witness) j["witness"] = detail::edges_json(c, *r.witness);
  write_json(o, j);
  return kOk;
}

int cmd_minblockers(const Options& o) {
  const auto inst = need_instance(o);
  const Config c = to_config(inst);
  const Family f = Family::parse(o.family);
  const auto mb = minimum_blockers(c, f, o.force);
  Json j;
  j["family"] = f.name();
  j["size"] = mb.size;
  j["count"] = mb.blockers.size();
  Json list = Json::array();
  for (const auto& b : mb.blockers) list.push_back(classify_json(c, b));
  j["blockers"] = std::move(list);
  write_json(o, j);
  return kOk;
}

int cmd_construct(const std::string& which, const Options& o) {
  const auto inst = need_instance(o);
  const Config c = to_config(inst);
  const EdgeSet b = inst.edges.count(o.set) ? edge_set(c, inst, o.set) : EdgeSet{};
  EdgeSet t;
  int bound = 3;
  Json j;
  j["construction"] = which;
  if (which == "perles") {
    const auto r = perles_sst3_detailed(c, b);
    t = r.tree;
    if (r.star_center) j["star_center"] = *r.star_center;
    if (r.cone) {
      j["cone"] = {{"apex", r.cone->apex},
                   {"ray_vertex", r.cone->ray_vertex},
                   {"pivot", r.cone->pivot},
                   {"members", r.cone->cone_members},
                   {"rotated_clockwise", r.cone->rotated_clockwise}};
    }
  } else if (which == "pair") {
    if (!o.a || !o.b || o.p.empty() || o.q.empty()) throw InputError("construct pair needs --a, --b, --p and --q");
    t = separated_pair_sst3(c, b, {*o.a, *o.b, parse_point(o.p, "--p"), parse_point(o.q, "--q")});
  } else {
    if (!o.a || !o.b) throw InputError("construct leaf4 needs --a and --b");
    t = boundary_leaf_sst4(c, b, *o.b, *o.a);
    bound = 4;
  }
  const auto failures = check_avoiding_tree(c, t, b, bound);
  j["tree"] = detail::edges_json(c, t);
  j["diameter"] = analyze_tree(c, t).diameter.value_or(-1);
  j["postconditions_failed"] = failures;
  if (!o.output.empty()) {
    Instance out = inst;
    out.edges["T"] = c.edges_of(t);
    write_text(o, emit_instance(out));
  } else {
    write_json(o, j);
  }
  return failures.empty() ? kOk : kAssertionFailed;
}

int cmd_verify(const Options& o) {
  ScenarioParams p;
  p.seed = o.seed;
  p.trials = o.trials;
  p.max_n = o.max_n;
  p.force = o.force;
  p.timing = o.timing;
  if (!o.input.empty()) p.instance = load_instance(o.input);
  const auto report = run_scenario(o.scenario, p);
  write_json(o, report.to_json());
  return report.passed() ? kOk : kAssertionFailed;
}

int cmd_render(const Options& o) {
  if (o.output.empty()) throw InputError("render writes SVG to a file; pass -o <out.svg>");
  write_text(o, render_svg(need_instance(o), o.sets));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blockers for non-crossing spanning trees"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> families{"t3", "t4", "sst", "sss"};

  auto input = [&](CLI::App* sub) { sub->add_option("-i,--input", o.input, "Instance JSON file"); };
  auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "Output file"); };
  auto family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "t3, t4, sst or sss")->check(CLI::IsMember(families));
  };
  auto force = [&](CLI::App* sub) { sub->add_flag("--force", o.force, "Ignore the enumeration size guard"); };
  auto set = [&](CLI::App* sub) { sub->add_option("--set", o.set, "Edge-set label (default B)"); };

  auto* classify_cmd = app.add_subcommand("classify", "Star / comb classification of an edge set");
  input(classify_cmd), output(classify_cmd), set(classify_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the members of a family");
  input(enumerate_cmd), output(enumerate_cmd), family(enumerate_cmd), force(enumerate_cmd);

  auto* blocks_cmd = app.add_subcommand("blocks", "Does an edge set meet every member of a family");
  input(blocks_cmd), output(blocks_cmd), family(blocks_cmd), force(blocks_cmd), set(blocks_cmd);

  auto* min_cmd = app.add_subcommand("minblockers", "All minimum blockers of a family");
  input(min_cmd), output(min_cmd), family(min_cmd), force(min_cmd);

  std::string construction;
  auto* construct_cmd = app.add_subcommand("construct", "Build a tree avoiding an edge set");
  construct_cmd->add_option("construction", construction, "perles, pair or leaf4")
      ->required()
      ->check(CLI::IsMember({"perles", "pair", "leaf4"}));
  input(construct_cmd), output(construct_cmd), set(construct_cmd);
  construct_cmd->add_option("--a", o.a, "Vertex a");
  construct_cmd->add_option("--b", o.b, "Vertex b");
  construct_cmd->add_option("--p", o.p, "First point x,y of the separating line");
  construct_cmd->add_option("--q", o.q, "Second point x,y of the separating line");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification scenario");
  verify_cmd->add_option("scenario", o.scenario, "Scenario name")->required()->check(CLI::IsMember(scenario_names()));
  input(verify_cmd), output(verify_cmd), force(verify_cmd);
  verify_cmd->add_option("--seed", o.seed, "Base seed");
  verify_cmd->add_option("--trials", o.trials, "Trials for construct_fuzz");
  verify_cmd->add_option("--max-n", o.max_n, "Largest n for construct_fuzz");
  verify_cmd->add_flag("--timing", o.timing, "Include wall-clock time in the report");

  auto* render_cmd = app.add_subcommand("render", "Draw an instance as SVG");
  input(render_cmd), output(render_cmd);
  render_cmd->add_option("--sets", o.sets, "Edge-set labels to draw")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*enumerate_cmd) return cmd_enumerate(o);
    if (*blocks_cmd) return cmd_blocks(o);
    if (*min_cmd) return cmd_minblockers(o);
    if (*construct_cmd) return cmd_construct(construction, o);
    if (*verify_cmd) return cmd_verify(o);
    if (*render_cmd) return cmd_render(o);
  } catch (const std::exception& e) {
    // Bad files, invalid geometry, failed preconditions, size guards.
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

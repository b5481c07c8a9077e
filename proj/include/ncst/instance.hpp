#pragma once

// JSON instance files:
//   {"name": "...", "seed": 7, "points": [[x,y],...], "edges": {"B": [[u,v],...], ...}}
// Only "points" is required. Edges are canonicalized on load (u < v, sorted,
// duplicates merged).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncst/geometry.hpp"
#include "ncst/graph.hpp"

namespace ncst {

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Instance {
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
  std::vector<Point> points;
  std::map<std::string, std::vector<Edge>> edges;

  friend bool operator==(const Instance&, const Instance&) = default;
};

namespace detail {

inline std::int64_t json_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InstanceError(where + ": expected an integer, got " + j.dump());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw InstanceError(where + ": integer out of range");
  }
  return j.get<std::int64_t>();
}

inline const nlohmann::json& json_pair(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InstanceError(where + ": expected a pair [a, b], got " + j.dump());
  return j;
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InstanceError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw InstanceError("top level: expected an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "name" && key != "seed" && key != "points" && key != "edges") {
      throw InstanceError("top level: unknown field \"" + key + "\"");
    }
  }

  Instance inst;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InstanceError("name: expected a string");
    inst.name = doc["name"].get<std::string>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw InstanceError("seed: expected a non-negative integer");
    inst.seed = doc["seed"].get<std::uint64_t>();
  }

  if (!doc.contains("points")) throw InstanceError("points: missing");
  const auto& pts = doc["points"];
  if (!pts.is_array()) throw InstanceError("points: expected an array");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    const auto& p = detail::json_pair(pts[i], where);
    inst.points.push_back({detail::json_int(p[0], where + "[0]"), detail::json_int(p[1], where + "[1]")});
  }
  if (inst.points.size() < 3) throw InstanceError("points: need at least 3 points, got " + std::to_string(inst.points.size()));
  if (inst.points.size() > kMaxVertices) {
    throw InstanceError("points: at most " + std::to_string(kMaxVertices) + " points supported, got " +
                        std::to_string(inst.points.size()));
  }
  if (auto v = assert_general_position(inst.points)) throw InstanceError("points: " + v->describe(inst.points));

  if (doc.contains("edges")) {
    const auto& sets = doc["edges"];
    if (!sets.is_object()) throw InstanceError("edges: expected an object of labelled edge lists");
    const std::size_t n = inst.points.size();
    for (const auto& [label, list] : sets.items()) {
      const std::string base = "edges." + label;
      if (!list.is_array()) throw InstanceError(base + ": expected an array");
      std::vector<Edge> es;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = base + "[" + std::to_string(i) + "]";
        const auto& e = detail::json_pair(list[i], where);
        std::int64_t ends[2];
        for (int k = 0; k < 2; ++k) {
          ends[k] = detail::json_int(e[k], where);
          if (ends[k] < 0 || static_cast<std::uint64_t>(ends[k]) >= n) {
            throw InstanceError(where + ": index " + std::to_string(ends[k]) + " out of range (" + std::to_string(n) +
                                " points)");
          }
        }
        if (ends[0] == ends[1]) throw InstanceError(where + ": self-loop at vertex " + std::to_string(ends[0]));
        es.push_back(Edge::of(static_cast<Vertex>(ends[0]), static_cast<Vertex>(ends[1])));
      }
      std::sort(es.begin(), es.end());
      es.erase(std::unique(es.begin(), es.end()), es.end());
      inst.edges.emplace(label, std::move(es));
    }
  }
  return inst;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InstanceError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const InstanceError& e) {
    throw InstanceError(path + ": " + e.what());
  }
}

inline nlohmann::ordered_json instance_json(const Instance& inst) {
  nlohmann::ordered_json j;
  if (inst.name) j["name"] = *inst.name;
  if (inst.seed) j["seed"] = *inst.seed;
  j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : inst.points) j["points"].push_back({p.x, p.y});
  if (!inst.edges.empty()) {
    j["edges"] = nlohmann::ordered_json::object();
    for (const auto& [label, es] : inst.edges) {
      auto& arr = j["edges"][label] = nlohmann::ordered_json::array();
      for (const auto& e : es) arr.push_back({e.u, e.v});
    }
  }
  return j;
}

/// One line per field and per edge set; coordinate pairs stay inline.
inline std::string emit_instance(const Instance& inst) {
  std::string out = "{\n";
  auto field = [&](const std::string& key, const std::string& value, bool last) {
    out += "  " + nlohmann::json(key).dump() + ": " + value + (last ? "\n" : ",\n");
  };
  auto pairs = [](const auto& items, auto first, auto second) {
    std::string s = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) s += ", ";
      s += "[" + std::to_string(first(items[i])) + ", " + std::to_string(second(items[i])) + "]";
    }
    return s + "]";
  };
  if (inst.name) field("name", nlohmann::json(*inst.name).dump(), false);
  if (inst.seed) field("seed", std::to_string(*inst.seed), false);
  field("points", pairs(inst.points, [](const Point& p) { return p.x; }, [](const Point& p) { return p.y; }),
        inst.edges.empty());
  if (!inst.edges.empty()) {
    std::string sets = "{\n";
    std::size_t k = 0;
    for (const auto& [label, es] : inst.edges) {
      sets += "    " + nlohmann::json(label).dump() + ": " +
              pairs(es, [](const Edge& e) { return e.u; }, [](const Edge& e) { return e.v; });
      sets += ++k < inst.edges.size() ? ",\n" : "\n";
    }
    field("edges", sets + "  }", true);
  }
  return out + "}\n";
}

inline Config to_config(const Instance& inst) { return Config(inst.points); }

inline EdgeSet edge_set(const Config& config, const Instance& inst, const std::string& label) {
  const auto it = inst.edges.find(label);
  if (it == inst.edges.end()) throw InstanceError("edges: no set labelled \"" + label + "\"");
  return config.make_set(it->second);
}

inline Instance make_instance(const Config& config, std::map<std::string, EdgeSet> sets = {},
                              std::optional<std::string> name = std::nullopt,
                              std::optional<std::uint64_t> seed = std::nullopt) {
  Instance inst;
  inst.name = std::move(name);
  inst.seed = seed;
  inst.points = config.points();
  for (const auto& [label, s] : sets) inst.edges.emplace(label, config.edges_of(s));
  return inst;
}

}  // namespace ncst

#pragma once

// Brute-force ground truth for blocking questions: simple spanning tree
// enumeration, non-crossing edge covers, blocking tests and minimum blockers.
//
// Everything here is exponential and guarded by explicit vertex-count limits.
// The guards can be lifted with `force`, except where the single-word edge
// mask used by minimum_blockers would overflow.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncst/graph.hpp"

namespace ncst {

inline constexpr std::size_t kEnumerateMaxN = 10;
inline constexpr std::size_t kMinimumBlockersMaxN = 8;

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Family {
  enum class Kind { TreesDiamAtMost, AllSimpleSpanningTrees, AllSimpleSpanningSubgraphs };

  Kind kind = Kind::AllSimpleSpanningTrees;
  int max_diameter = 0;  // meaningful for TreesDiamAtMost only

  static Family trees_diam_at_most(int k) {
    if (k < 2) throw std::invalid_argument("Family: diameter bound must be at least 2");
    return {Kind::TreesDiamAtMost, k};
  }
  static Family sst() { return {Kind::AllSimpleSpanningTrees, 0}; }
  static Family sss() { return {Kind::AllSimpleSpanningSubgraphs, 0}; }

  bool is_tree_family() const { return kind != Kind::AllSimpleSpanningSubgraphs; }
  std::optional<int> diameter_bound() const {
    return kind == Kind::TreesDiamAtMost ? std::optional<int>(max_diameter) : std::nullopt;
  }

  std::string name() const {
    switch (kind) {
      case Kind::TreesDiamAtMost: return "t" + std::to_string(max_diameter);
      case Kind::AllSimpleSpanningTrees: return "sst";
      case Kind::AllSimpleSpanningSubgraphs: return "sss";
    }
    return {};
  }

  /// Accepts "t<k>" (k >= 2), "sst" and "sss".
  static Family parse(const std::string& s) {
    if (s == "sst") return sst();
    if (s == "sss") return sss();
    if (s.size() >= 2 && s[0] == 't' && std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return trees_diam_at_most(std::stoi(s.substr(1)));
    }
    throw std::invalid_argument("unknown family '" + s + "' (expected t<k>, sst or sss)");
  }

  friend bool operator==(const Family&, const Family&) = default;
};

struct BlockReport {
  bool blocks = false;
  std::optional<EdgeSet> witness;
};

inline void check_size_guard(const Config& config, std::size_t limit, bool force, const char* what) {
  if (!force && config.n() > limit) {
    throw SizeGuardError(std::string(what) + ": n = " + std::to_string(config.n()) + " exceeds the limit " +
                         std::to_string(limit) + " (use force to override)");
  }
}

namespace detail {

struct UnionFind {
  std::array<std::uint8_t, kMaxVertices> parent{};

  explicit UnionFind(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  std::size_t find(std::size_t v) const {
    while (parent[v] != v) v = parent[v];
    return v;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = static_cast<std::uint8_t>(find(b)); }
};

/// Recursive edge-inclusion search. Include-before-exclude over canonical edge
/// indices emits trees in canonical order. The visitor returns false to stop.
class SstSearch {
 public:
  SstSearch(const Config& config, const EdgeSet& allowed, std::function<bool(const EdgeSet&)> visit)
      : config_(config), visit_(std::move(visit)) {
    allowed.for_each([&](std::size_t i) { candidates_.push_back(i); });
    need_ = config.n() - 1;
  }

  void run() {
    if (candidates_.size() < need_) return;
    UnionFind uf(config_.n());
    EdgeSet chosen;
    recurse(0, 0, chosen, uf);
  }

 private:
  void recurse(std::size_t pos, std::size_t count, EdgeSet& chosen, const UnionFind& uf) {
    if (stopped_) return;
    if (count == need_) {
      if (!visit_(chosen)) stopped_ = true;
      return;
    }
    if (count + (candidates_.size() - pos) < need_) return;
    const std::size_t e = candidates_[pos];
    const Edge& edge = config_.edge(e);
    if (uf.find(edge.u) != uf.find(edge.v) && !config_.crossing(e).intersects(chosen)) {
      UnionFind next = uf;
      next.unite(edge.u, edge.v);
      chosen.insert(e);
      recurse(pos + 1, count + 1, chosen, next);
      chosen.erase(e);
    }
    recurse(pos + 1, count, chosen, uf);
  }

  const Config& config_;
  std::function<bool(const EdgeSet&)> visit_;
  std::vector<std::size_t> candidates_;
  std::size_t need_ = 0;
  bool stopped_ = false;
};

inline bool diameter_within(const Config& config, const EdgeSet& tree, std::optional<int> bound) {
  return !bound || tree_diameter(adjacency(config, tree)) <= *bound;
}

}  // namespace detail

/// Visits every simple spanning tree using only `allowed` edges, in canonical
/// order, stopping early when `visit` returns false.
inline void for_each_sst(const Config& config, const EdgeSet& allowed, std::optional<int> max_diameter,
                         const std::function<bool(const EdgeSet&)>& visit) {
  detail::SstSearch search(config, allowed, [&](const EdgeSet& tree) {
    if (!detail::diameter_within(config, tree, max_diameter)) return true;
    return visit(tree);
  });
  search.run();
}

/// All non-crossing spanning trees (diameter <= max_diameter when given), canonical order.
inline std::vector<EdgeSet> enumerate_ssts(const Config& config, std::optional<int> max_diameter = std::nullopt,
                                           bool force = false) {
  check_size_guard(config, kEnumerateMaxN, force, "enumerate_ssts");
  std::vector<EdgeSet> out;
  for_each_sst(config, complete_edges(config), max_diameter, [&](const EdgeSet& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

namespace detail {

/// Branches on the lowest uncovered vertex over its compatible incident edges.
/// `visit` receives each complete cover and returns false to stop.
class CoverSearch {
 public:
  CoverSearch(const Config& config, const EdgeSet& h, std::function<bool(const EdgeSet&)> visit)
      : config_(config), h_(h), visit_(std::move(visit)) {}

  void run() {
    EdgeSet chosen;
    std::uint64_t covered = 0;
    recurse(chosen, covered);
  }

 private:
  EdgeSet options(const EdgeSet& chosen, Vertex v) const {
    EdgeSet opts = config_.incident(v) & h_;
    EdgeSet out;
    opts.for_each([&](std::size_t e) {
      if (!config_.crossing(e).intersects(chosen)) out.insert(e);
    });
    return out;
  }

  void recurse(EdgeSet& chosen, std::uint64_t covered) {
    if (stopped_) return;
    const std::size_t n = config_.n();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (covered == all) {
      if (!visit_(chosen)) stopped_ = true;
      return;
    }
    // Fail fast when some uncovered vertex has no usable edge left.
    Vertex pivot = n;
    EdgeSet pivot_options;
    for (Vertex v = 0; v < n; ++v) {
      if ((covered >> v) & 1U) continue;
      EdgeSet opts = options(chosen, v);
      if (opts.empty()) return;
      if (pivot == n) {
        pivot = v;
        pivot_options = opts;
      }
    }
    pivot_options.for_each([&](std::size_t e) {
      if (stopped_) return;
      const Edge& edge = config_.edge(e);
      chosen.insert(e);
      recurse(chosen, covered | (std::uint64_t{1} << edge.u) | (std::uint64_t{1} << edge.v));
      chosen.erase(e);
    });
  }

  const Config& config_;
  EdgeSet h_;
  std::function<bool(const EdgeSet&)> visit_;
  bool stopped_ = false;
};

inline bool is_minimal_cover(const Config& config, const EdgeSet& cover) {
  bool minimal = true;
  cover.for_each([&](std::size_t e) {
    const Edge& edge = config.edge(e);
    if (degree(config, cover, edge.u) > 1 && degree(config, cover, edge.v) > 1) minimal = false;
  });
  return minimal;
}

}  // namespace detail

/// Some non-crossing subset of `h` covers every vertex. Returns that subset
/// as a witness, or nullopt when none exists.
inline std::optional<EdgeSet> has_noncrossing_edge_cover(const Config& config, const EdgeSet& h) {
  std::optional<EdgeSet> witness;
  detail::CoverSearch search(config, h, [&](const EdgeSet& cover) {
    witness = cover;
    return false;
  });
  search.run();
  return witness;
}

/// Inclusion-minimal non-crossing edge covers (the minimal simple spanning
/// subgraphs), canonical order. A set blocks every simple spanning subgraph
/// iff it meets each of these.
inline std::vector<EdgeSet> minimal_noncrossing_covers(const Config& config, bool force = false) {
  check_size_guard(config, kEnumerateMaxN, force, "minimal_noncrossing_covers");
  std::vector<EdgeSet> out;
  detail::CoverSearch search(config, complete_edges(config), [&](const EdgeSet& cover) {
    if (detail::is_minimal_cover(config, cover)) out.push_back(cover);
    return true;
  });
  search.run();
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Family members, materialized in canonical order.
inline std::vector<EdgeSet> family_members(const Config& config, const Family& family, bool force = false) {
  if (family.is_tree_family()) return enumerate_ssts(config, family.diameter_bound(), force);
  return minimal_noncrossing_covers(config, force);
}

/// Whether `b` meets every member of `family`; otherwise the canonically first
/// avoiding member (for SSS: the first non-crossing cover found in the complement).
inline BlockReport blocks(const Config& config, const EdgeSet& b, const Family& family, bool force = false) {
  check_size_guard(config, kEnumerateMaxN, force, "blocks");
  const EdgeSet free_edges = complement(config, b);
  BlockReport report;
  if (family.is_tree_family()) {
    for_each_sst(config, free_edges, family.diameter_bound(), [&](const EdgeSet& t) {
      report.witness = t;
      return false;
    });
  } else {
    report.witness = has_noncrossing_edge_cover(config, free_edges);
  }
  report.blocks = !report.witness.has_value();
  return report;
}

struct MinimumBlockers {
  std::size_t size = 0;
  std::vector<EdgeSet> blockers;
};

/// All smallest edge sets meeting every family member. Subsets are searched by
/// ascending size in canonical order; the search stops after the first size
/// that yields a blocker.
inline MinimumBlockers minimum_blockers(const Config& config, const Family& family, bool force = false) {
  check_size_guard(config, kMinimumBlockersMaxN, force, "minimum_blockers");
  const std::size_t m = config.edge_count();
  if (m > 64) throw SizeGuardError("minimum_blockers: more than 64 edges cannot be searched");

  std::vector<std::uint64_t> members;
  for (const auto& s : family_members(config, family, force)) members.push_back(s.low_word());

  MinimumBlockers result;
  if (members.empty()) return result;  // the empty set blocks an empty family

  std::size_t last_hit = 0;
  auto is_blocker = [&](std::uint64_t mask) {
    if ((members[last_hit] & mask) == 0) return false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((members[i] & mask) == 0) {
        last_hit = i;
        return false;
      }
    }
    return true;
  };

  std::vector<std::uint64_t> found;
  for (std::size_t s = 1; s <= m && found.empty(); ++s) {
    // Lexicographic s-combinations of {0..m-1}.
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
      std::uint64_t mask = 0;
      for (auto i : idx) mask |= std::uint64_t{1} << i;
      if (is_blocker(mask)) found.push_back(mask);
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == m - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found.empty()) result.size = s;
  }
  for (auto mask : found) result.blockers.push_back(EdgeSet::from_low_word(mask));
  return result;
}

}  // namespace ncst

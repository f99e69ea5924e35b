#pragma once

#include "ekr/bigcount.hpp"
#include "ekr/graph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace ekr {

/// Selects I^r(G), optionally restricted to sets containing `anchor` and
/// avoiding `forbidden`.
struct FamilyQuery {
  const Graph *graph = nullptr;
  int r = 0;
  std::optional<int> anchor;
  VertexSet forbidden;

  FamilyQuery(const Graph &g, int r_, std::optional<int> anchor_ = std::nullopt,
              VertexSet forbidden_ = {});
};

enum class CountMethod { Enumeration, TreeDp, ClosedForm };
std::string_view to_string(CountMethod m);

struct CountResult {
  BigCount count;
  CountMethod method;
};

/// Calls `visit` on each qualifying independent r-set in ascending
/// bitset-integer (colex) order. Returning false from `visit` stops early.
void for_each_independent_rset(const FamilyQuery &q,
                               const std::function<bool(const VertexSet &)> &visit);
Family enum_independent_rsets(const FamilyQuery &q);
/// Every independent set (all sizes, including the empty set), colex order.
Family enum_independent_sets(const Graph &g);
BigCount count_independent_rsets(const FamilyQuery &q);

/// |I^r(P_m)| = C(m - r + 1, r).
BigCount count_path_rsets(int m, int r);

/// s_r(v) by enumeration; tree DP for forests.
CountResult star_size(const Graph &g, int v, int r);
CountResult star_size_enumerated(const Graph &g, int v, int r);
CountResult star_size_tree_dp(const Graph &forest, int v, int r);
/// s_r(x) for every vertex x of a forest from one rerooted DP pass per vertex.
std::vector<BigCount> star_sizes_tree_dp(const Graph &forest, int r);

/// Independence number of a forest (greedy leaf matching; exact on forests).
int forest_independence_number(const Graph &forest);

enum class MergeMode { WithoutCenter, WithCenter };

/// A spider with the center (or its closed neighbourhood) removed and the
/// remaining legs joined end to end into one path. Vertex indices are those
/// of the reduced graph; `original` maps them back into the spider.
struct MergedPath {
  Graph graph;
  std::vector<int> original;
  /// The leaf v_k of the last leg in spider order, and its neighbour in the
  /// spider (or -1 when that neighbour was removed with N[w]).
  int last_leaf = -1;
  int last_leaf_spider_neighbor = -1;
  std::vector<Edge> joining_edges;
  /// Vertices of the path in order from one end to the other.
  std::vector<int> path_order;
};

MergedPath merge_paths(const SpiderSpec &spider, MergeMode mode);

/// Paths of T - W (W = split vertices) joined into a single path, pieces
/// taken by smallest vertex and each oriented from its smaller endpoint.
/// Vertex indices stay those of T; W vertices are isolated.
struct SplitMerge {
  Graph merged;
  VertexSet split;
  std::vector<Edge> joining_edges;
  std::vector<int> path_order;
};
SplitMerge merge_split_paths(const Graph &tree);

/// The injection witness A -> A' = (A - {a', a''}) u {u', u''} for the first
/// joining edge {u', u''} of `merged`.
VertexSet splitstar_witness(const Graph &tree, const VertexSet &split, const Graph &merged,
                            const VertexSet &a);

// Family dumps: one sorted vertex list per line, e.g. `{0,2,5}`.
std::string format_family(const Family &f);
Family parse_family(std::string_view text);

} // namespace ekr
